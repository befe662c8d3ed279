#pragma once

#include "quadcong/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace quadcong {

// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<GR> coeffs);
    UniPoly(const GR& c) : UniPoly(std::vector<GR>{c}) {}
    static UniPoly x();
    // product of (x - r) over the roots
    static UniPoly from_roots(const std::vector<GR>& roots);

    const std::vector<GR>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    GR coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : GR(0); }
    GR lead() const { return c_.empty() ? GR(0) : c_.back(); }

    UniPoly monic() const;
    UniPoly derivative() const;
    GR eval(const GR& x) const;
    UniPoly compose(const UniPoly& inner) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(int e) const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<GR> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly gcd(const UniPoly& a, const UniPoly& b);
bool is_squarefree(const UniPoly& p);

// monic characteristic polynomial det(xI - M)
UniPoly char_poly(const Matrix& m);
// monic invariant factors of xI - M, trivial ones dropped, in divisibility order
std::vector<UniPoly> invariant_factors(const Matrix& m);
// p(M)
Matrix eval_at(const UniPoly& p, const Matrix& m);

}  // namespace quadcong
