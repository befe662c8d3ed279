#pragma once

#include "quadcong/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quadcong {

using Exponent = std::vector<int>;

// lexicographically larger exponents first; for a fixed degree this is graded lex
struct LexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

class HomPoly {
public:
    using Terms = std::map<Exponent, GR, LexGreater>;

    HomPoly() = default;
    HomPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

    static HomPoly constant(int nvars, const GR& c);
    static HomPoly variable(int nvars, int var);
    static HomPoly monomial(const Exponent& e, const GR& c);
    static HomPoly linear(const std::vector<GR>& coeffs);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    GR coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const GR& c);

    const Exponent& leading_exponent() const;
    const GR& leading_coeff() const;
    HomPoly monic() const;

    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    HomPoly& operator*=(const GR& c);
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(HomPoly a, const GR& c) { return a *= c; }
    friend HomPoly operator*(const GR& c, HomPoly a) { return a *= c; }
    HomPoly operator-() const;
    // zero polynomials compare equal whatever their nominal degree
    friend bool operator==(const HomPoly& a, const HomPoly& b);
    friend bool operator!=(const HomPoly& a, const HomPoly& b) { return !(a == b); }

    HomPoly pow(int e) const;
    GR eval(const std::vector<GR>& point) const;
    HomPoly substitute(const std::vector<HomPoly>& images) const;
    HomPoly derivative(int var) const;
    // same polynomial seen in a ring with more variables, shifted by offset
    HomPoly embed(int nvars, int offset) const;

    int degree_in(int var) const;
    HomPoly coeff_in(int var, int k) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void check_compatible(const HomPoly& o, const char* op) const;

    int nvars_ = 0;
    int degree_ = 0;
    Terms terms_;
};

class DivisionError : public math_error {
public:
    DivisionError(const std::string& what, HomPoly remainder)
        : math_error(what), remainder_(std::move(remainder)) {}
    const HomPoly& remainder() const { return remainder_; }

private:
    HomPoly remainder_;
};

std::vector<std::string> default_names(int nvars);

HomPoly exact_div(const HomPoly& p, const HomPoly& q);
std::optional<HomPoly> try_div(const HomPoly& p, const HomPoly& q);
HomPoly gcd(const HomPoly& a, const HomPoly& b);
HomPoly gcd(const std::vector<HomPoly>& ps);
HomPoly squarefree(const HomPoly& p);

// u = c v for a nonzero scalar c
bool proportional(const HomPoly& u, const HomPoly& v);
// u_i v_j = u_j v_i for all i < j, i.e. equal as projective rational maps
bool proportional(const std::vector<HomPoly>& u, const std::vector<HomPoly>& v);
// divide every coordinate by the gcd of all of them and make the result monic
std::vector<HomPoly> remove_common_factor(const std::vector<HomPoly>& coords);

}  // namespace quadcong
