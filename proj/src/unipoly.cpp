#include "quadcong/unipoly.hpp"

#include <sstream>

namespace quadcong {

UniPoly::UniPoly(std::vector<GR> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::x() { return UniPoly({GR(0), GR(1)}); }

UniPoly UniPoly::from_roots(const std::vector<GR>& roots) {
    UniPoly p(GR(1));
    for (const auto& r : roots) p = p * UniPoly({-r, GR(1)});
    return p;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    GR inv = lead().inv();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= inv;
    return r;
}

UniPoly UniPoly::derivative() const {
    std::vector<GR> d;
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * GR(static_cast<long>(k)));
    return UniPoly(d);
}

GR UniPoly::eval(const GR& x) const {
    GR r(0);
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly r;
    for (size_t k = c_.size(); k-- > 0;) r = r * inner + UniPoly(c_[k]);
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<GR> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(r);
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly UniPoly::pow(int e) const {
    UniPoly r(GR(1)), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        const GR& c = c_[k];
        if (c.is_zero()) continue;
        bool neg = c.is_real() && sgn(c.re()) < 0;
        GR a = neg ? -c : c;
        std::string coef = a.is_real() ? a.str() : "(" + a.str() + ")";
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        if (k == 0) os << coef;
        else {
            if (!a.is_one()) os << coef << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw math_error("polynomial division by zero");
    std::vector<GR> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<GR> q(a.degree() - db + 1);
    GR inv = b.lead().inv();
    for (int k = a.degree(); k >= db; --k) {
        GR c = r[k] * inv;
        q[k - db] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeffs()[j];
    }
    r.resize(db);
    return {UniPoly(q), UniPoly(r)};
}

UniPoly gcd(const UniPoly& a0, const UniPoly& b0) {
    UniPoly a = a0, b = b0;
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

bool is_squarefree(const UniPoly& p) {
    if (p.degree() <= 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

UniPoly char_poly(const Matrix& a) {
    // Faddeev-LeVerrier
    if (!a.is_square()) throw math_error("char_poly of non-square matrix");
    int n = a.rows();
    std::vector<GR> c(n + 1);
    c[n] = GR(1);
    Matrix mk(n, n);
    for (int k = 1; k <= n; ++k) {
        Matrix t = mk;
        for (int i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
        mk = a * t;
        GR tr(0);
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        c[n - k] = -tr / GR(static_cast<long>(k));
    }
    return UniPoly(c);
}

Matrix eval_at(const UniPoly& p, const Matrix& m) {
    int n = m.rows();
    Matrix r(n, n);
    for (size_t k = p.coeffs().size(); k-- > 0;) {
        r = r * m;
        for (int i = 0; i < n; ++i) r(i, i) += p.coeffs()[k];
    }
    return r;
}

std::vector<UniPoly> invariant_factors(const Matrix& m) {
    if (!m.is_square()) throw math_error("invariant_factors of non-square matrix");
    int n = m.rows();
    std::vector<std::vector<UniPoly>> a(n, std::vector<UniPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = UniPoly(-m(i, j));
    for (int i = 0; i < n; ++i) a[i][i] += UniPoly::x();

    auto swap_rows = [&](int r1, int r2) { std::swap(a[r1], a[r2]); };
    auto swap_cols = [&](int c1, int c2) {
        for (int i = 0; i < n; ++i) std::swap(a[i][c1], a[i][c2]);
    };

    for (int k = 0; k < n; ++k) {
        while (true) {
            // smallest-degree nonzero entry of the trailing block becomes the pivot
            int pi = -1, pj = -1;
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (!a[i][j].is_zero() && (pi < 0 || a[i][j].degree() < a[pi][pj].degree())) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            swap_rows(k, pi);
            swap_cols(k, pj);
            bool clean = true;
            for (int i = k + 1; i < n; ++i) {
                if (a[i][k].is_zero()) continue;
                UniPoly q = divmod(a[i][k], a[k][k]).first;
                for (int j = k; j < n; ++j) a[i][j] -= q * a[k][j];
                if (!a[i][k].is_zero()) clean = false;
            }
            for (int j = k + 1; j < n; ++j) {
                if (a[k][j].is_zero()) continue;
                UniPoly q = divmod(a[k][j], a[k][k]).first;
                for (int i = k; i < n; ++i) a[i][j] -= q * a[i][k];
                if (!a[k][j].is_zero()) clean = false;
            }
            if (!clean) continue;
            // the pivot must divide the rest of the block
            int bad = -1;
            for (int i = k + 1; i < n && bad < 0; ++i)
                for (int j = k + 1; j < n; ++j)
                    if (!divmod(a[i][j], a[k][k]).second.is_zero()) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = k; j < n; ++j) a[k][j] += a[bad][j];
        }
    }
    std::vector<UniPoly> out;
    for (int k = 0; k < n; ++k) {
        UniPoly d = a[k][k].monic();
        if (d.degree() >= 1) out.push_back(d);
    }
    return out;
}

}  // namespace quadcong
