#include "quadcong/hompoly.hpp"

#include <numeric>
#include <sstream>

namespace quadcong {

HomPoly HomPoly::constant(int nvars, const GR& c) {
    HomPoly p(nvars, 0);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

HomPoly HomPoly::variable(int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::out_of_range("variable index");
    Exponent e(nvars, 0);
    e[var] = 1;
    return monomial(e, GR(1));
}

HomPoly HomPoly::monomial(const Exponent& e, const GR& c) {
    HomPoly p(static_cast<int>(e.size()), std::accumulate(e.begin(), e.end(), 0));
    p.add_term(e, c);
    return p;
}

HomPoly HomPoly::linear(const std::vector<GR>& coeffs) {
    int n = static_cast<int>(coeffs.size());
    HomPoly p(n, 1);
    for (int k = 0; k < n; ++k) {
        Exponent e(n, 0);
        e[k] = 1;
        p.add_term(e, coeffs[k]);
    }
    return p;
}

GR HomPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GR(0) : it->second;
}

void HomPoly::add_term(const Exponent& e, const GR& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Exponent& HomPoly::leading_exponent() const {
    if (terms_.empty()) throw math_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const GR& HomPoly::leading_coeff() const {
    if (terms_.empty()) throw math_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

HomPoly HomPoly::monic() const {
    if (is_zero()) return *this;
    HomPoly r = *this;
    r *= leading_coeff().inv();
    return r;
}

void HomPoly::check_compatible(const HomPoly& o, const char* op) const {
    if (nvars_ != o.nvars_) throw math_error(std::string(op) + ": variable count mismatch");
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
        throw math_error(std::string(op) + ": degree mismatch " + std::to_string(degree_) + " vs " +
                         std::to_string(o.degree_));
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    check_compatible(o, "add");
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    check_compatible(o, "sub");
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

HomPoly& HomPoly::operator*=(const GR& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    if (a.nvars_ != b.nvars_) throw math_error("mul: variable count mismatch");
    HomPoly r(a.nvars_, a.degree_ + b.degree_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

HomPoly HomPoly::operator-() const {
    HomPoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

bool operator==(const HomPoly& a, const HomPoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomPoly HomPoly::pow(int e) const {
    if (e < 0) throw math_error("negative power of polynomial");
    HomPoly r = constant(nvars_, GR(1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

GR HomPoly::eval(const std::vector<GR>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw math_error("eval: wrong point size");
    std::vector<std::vector<GR>> powers(nvars_);
    GR total(0);
    for (const auto& [e, c] : terms_) {
        GR t = c;
        for (int k = 0; k < nvars_; ++k) {
            if (!e[k]) continue;
            auto& pk = powers[k];
            if (pk.empty()) pk.push_back(GR(1));
            while (static_cast<int>(pk.size()) <= e[k]) pk.push_back(pk.back() * point[k]);
            t *= pk[e[k]];
        }
        total += t;
    }
    return total;
}

HomPoly HomPoly::substitute(const std::vector<HomPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw math_error("substitute: one image per variable required");
    if (images.empty()) return *this;
    int m = images[0].nvars();
    int d = -1;
    for (const auto& im : images) {
        if (im.nvars() != m) throw math_error("substitute: images live in different rings");
        if (im.is_zero()) continue;
        if (d >= 0 && im.degree() != d) throw math_error("substitute: images of unequal degree");
        d = im.degree();
    }
    if (d < 0) d = images[0].degree();
    HomPoly result(m, degree_ * d);
    std::vector<std::vector<HomPoly>> powers(nvars_);
    for (const auto& [e, c] : terms_) {
        HomPoly t = constant(m, c);
        for (int k = 0; k < nvars_; ++k) {
            if (!e[k]) continue;
            auto& pk = powers[k];
            if (pk.empty()) pk.push_back(constant(m, GR(1)));
            while (static_cast<int>(pk.size()) <= e[k]) pk.push_back(pk.back() * images[k]);
            t = t * pk[e[k]];
        }
        result += t;
    }
    return result;
}

HomPoly HomPoly::derivative(int var) const {
    HomPoly r(nvars_, degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
        if (!e[var]) continue;
        Exponent f = e;
        f[var] -= 1;
        r.add_term(f, c * GR(static_cast<long>(e[var])));
    }
    return r;
}

HomPoly HomPoly::embed(int nvars, int offset) const {
    if (offset < 0 || offset + nvars_ > nvars) throw math_error("embed: target ring too small");
    HomPoly r(nvars, degree_);
    for (const auto& [e, c] : terms_) {
        Exponent f(nvars, 0);
        for (int k = 0; k < nvars_; ++k) f[offset + k] = e[k];
        r.add_term(f, c);
    }
    return r;
}

int HomPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& kv : terms_) d = std::max(d, kv.first[var]);
    return d;
}

HomPoly HomPoly::coeff_in(int var, int k) const {
    HomPoly r(nvars_, degree_ - k);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        Exponent f = e;
        f[var] = 0;
        r.add_term(f, c);
    }
    return r;
}

std::vector<std::string> default_names(int nvars) {
    if (nvars <= 3) {
        std::vector<std::string> v = {"x", "y", "z"};
        v.resize(nvars);
        return v;
    }
    std::vector<std::string> v;
    for (int k = 1; k <= nvars; ++k) v.push_back("x" + std::to_string(k));
    return v;
}

std::string HomPoly::str(const std::vector<std::string>& names_in) const {
    if (is_zero()) return "0";
    auto names = names_in.empty() ? default_names(nvars_) : names_in;
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int k = 0; k < nvars_; ++k) {
            if (!e[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string coef;
        bool negative = false;
        GR cc = c;
        if (c.is_real() && sgn(c.re()) < 0) {
            negative = true;
            cc = -c;
        }
        if (cc.is_real()) coef = cc.str();
        else if (sgn(cc.re()) == 0 && sgn(cc.im()) < 0) {
            negative = true;
            cc = -cc;
            coef = cc.str();
        } else if (sgn(cc.re()) == 0) coef = cc.str();
        else coef = "(" + cc.str() + ")";
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        if (mono.empty()) os << coef;
        else if (cc.is_one()) os << mono;
        else os << coef << "*" << mono;
        first = false;
    }
    return os.str();
}

namespace {

bool divides(const Exponent& a, const Exponent& b) {
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

// largest variable index occurring in p or q, -1 when both are constants
int top_variable(const HomPoly& p, const HomPoly& q) {
    int top = -1;
    for (const HomPoly* h : {&p, &q})
        for (const auto& kv : h->terms())
            for (int k = static_cast<int>(kv.first.size()) - 1; k > top; --k)
                if (kv.first[k] > 0) {
                    top = k;
                    break;
                }
    return top;
}

HomPoly pseudo_remainder(const HomPoly& p, const HomPoly& q, int var) {
    int dq = q.degree_in(var);
    HomPoly lcq = q.coeff_in(var, dq);
    HomPoly r = p;
    while (!r.is_zero() && r.degree_in(var) >= dq) {
        int dr = r.degree_in(var);
        HomPoly lcr = r.coeff_in(var, dr);
        Exponent shift(p.nvars(), 0);
        shift[var] = dr - dq;
        HomPoly t = lcr * HomPoly::monomial(shift, GR(1)) * q;
        r = lcq * r - t;
    }
    return r;
}

HomPoly content_in(const HomPoly& p, int var) {
    HomPoly g;
    bool have = false;
    for (int k = p.degree_in(var); k >= 0; --k) {
        HomPoly c = p.coeff_in(var, k);
        if (c.is_zero()) continue;
        g = have ? gcd(g, c) : c.monic();
        have = true;
        if (g.degree() == 0) break;
    }
    return g;
}

}  // namespace

std::optional<HomPoly> try_div(const HomPoly& p, const HomPoly& q) {
    if (q.is_zero()) throw math_error("division by zero polynomial");
    if (p.nvars() != q.nvars()) throw math_error("div: variable count mismatch");
    HomPoly quot(p.nvars(), p.degree() - q.degree());
    if (p.is_zero()) return quot;
    if (p.degree() < q.degree()) return std::nullopt;
    HomPoly r = p;
    const Exponent& lq = q.leading_exponent();
    GR lcq_inv = q.leading_coeff().inv();
    Exponent e(p.nvars());
    while (!r.is_zero()) {
        const Exponent& lr = r.leading_exponent();
        if (!divides(lq, lr)) return std::nullopt;
        for (int k = 0; k < p.nvars(); ++k) e[k] = lr[k] - lq[k];
        GR c = r.leading_coeff() * lcq_inv;
        quot.add_term(e, c);
        Exponent f(p.nvars());
        for (const auto& [eq, cq] : q.terms()) {
            for (int k = 0; k < p.nvars(); ++k) f[k] = e[k] + eq[k];
            r.add_term(f, -(c * cq));
        }
    }
    return quot;
}

HomPoly exact_div(const HomPoly& p, const HomPoly& q) {
    if (q.is_zero()) throw math_error("division by zero polynomial");
    if (p.nvars() != q.nvars()) throw math_error("div: variable count mismatch");
    if (p.degree() < q.degree() && !p.is_zero()) throw DivisionError("inexact division", p);
    HomPoly quot(p.nvars(), p.degree() - q.degree());
    HomPoly r = p;
    const Exponent& lq = q.leading_exponent();
    GR lcq_inv = q.leading_coeff().inv();
    Exponent e(p.nvars()), f(p.nvars());
    while (!r.is_zero()) {
        const Exponent& lr = r.leading_exponent();
        if (!divides(lq, lr)) throw DivisionError("inexact division", r);
        for (int k = 0; k < p.nvars(); ++k) e[k] = lr[k] - lq[k];
        GR c = r.leading_coeff() * lcq_inv;
        quot.add_term(e, c);
        for (const auto& [eq, cq] : q.terms()) {
            for (int k = 0; k < p.nvars(); ++k) f[k] = e[k] + eq[k];
            r.add_term(f, -(c * cq));
        }
    }
    return quot;
}

HomPoly gcd(const HomPoly& a, const HomPoly& b) {
    if (a.nvars() != b.nvars()) throw math_error("gcd: variable count mismatch");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    int var = top_variable(a, b);
    if (var < 0) return HomPoly::constant(a.nvars(), GR(1));
    HomPoly p = a, q = b;
    if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
    HomPoly cp = content_in(p, var), cq = content_in(q, var);
    HomPoly c = gcd(cp, cq);
    p = exact_div(p, cp);
    q = exact_div(q, cq);
    HomPoly g;
    while (true) {
        if (q.degree_in(var) == 0) {
            g = HomPoly::constant(a.nvars(), GR(1));
            break;
        }
        HomPoly r = pseudo_remainder(p, q, var);
        if (r.is_zero()) {
            g = q;
            break;
        }
        p = q;
        q = exact_div(r, content_in(r, var));
    }
    if (g.degree() > 0) g = exact_div(g, content_in(g, var));
    return (c * g).monic();
}

HomPoly gcd(const std::vector<HomPoly>& ps) {
    if (ps.empty()) throw math_error("gcd of empty list");
    HomPoly g(ps[0].nvars(), 0);
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.monic() : gcd(g, p);
        if (g.degree() == 0) break;
    }
    return g;
}

HomPoly squarefree(const HomPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p.monic();
    std::vector<HomPoly> parts = {p};
    for (int k = 0; k < p.nvars(); ++k) parts.push_back(p.derivative(k));
    return exact_div(p, gcd(parts)).monic();
}

bool proportional(const HomPoly& u, const HomPoly& v) {
    // scalar multiples; a one-element tuple would accept any pair
    if (u.is_zero() || v.is_zero()) return u.is_zero() && v.is_zero();
    if (u.nvars() != v.nvars() || u.degree() != v.degree()) return false;
    return u * v.leading_coeff() == v * u.leading_coeff();
}

bool proportional(const std::vector<HomPoly>& u, const std::vector<HomPoly>& v) {
    if (u.size() != v.size()) throw math_error("proportional: tuples of different length");
    bool uz = true, vz = true;
    for (const auto& p : u) uz = uz && p.is_zero();
    for (const auto& p : v) vz = vz && p.is_zero();
    if (uz || vz) return uz && vz;
    for (size_t k = 0; k < u.size(); ++k)
        if (u[k].is_zero() != v[k].is_zero()) return false;
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

std::vector<HomPoly> remove_common_factor(const std::vector<HomPoly>& coords) {
    HomPoly g = gcd(coords);
    if (g.is_zero()) throw math_error("identically zero tuple");
    std::vector<HomPoly> out;
    GR scale(0);
    for (const auto& c : coords) {
        HomPoly q = exact_div(c, g);
        if (scale.is_zero() && !q.is_zero()) scale = q.leading_coeff().inv();
        out.push_back(q);
    }
    for (auto& q : out) q *= scale;
    return out;
}

}  // namespace quadcong
