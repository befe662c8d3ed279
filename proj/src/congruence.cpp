#include "quadcong/congruence.hpp"

#include <algorithm>
#include <random>

namespace quadcong {

namespace {

HomPoly var(int n, int k) { return HomPoly::variable(n, k); }

HomPoly combine(const std::vector<HomPoly>& polys, const Vec& weights, int nvars, int degree) {
    HomPoly r(nvars, degree);
    for (size_t k = 0; k < polys.size(); ++k)
        if (!weights[k].is_zero()) r += polys[k] * weights[k];
    return r;
}

Vec random_point(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> d(-5, 5);
    Vec p(n);
    do {
        for (auto& x : p) x = GR(mpq_class(d(rng)), mpq_class(d(rng) / 2));
    } while (is_zero(p));
    return p;
}

Vec eval_all(const std::vector<HomPoly>& polys, const Vec& p) {
    Vec out;
    for (const auto& q : polys) out.push_back(q.eval(p));
    return out;
}

std::vector<HomPoly> substitute_all(const std::vector<HomPoly>& polys, const std::vector<HomPoly>& images) {
    std::vector<HomPoly> out;
    for (const auto& q : polys) out.push_back(q.substitute(images));
    return out;
}

std::vector<HomPoly> reduce(const std::vector<HomPoly>& t) {
    bool all_zero = true;
    for (const auto& p : t) all_zero = all_zero && p.is_zero();
    if (all_zero) throw math_error("identically zero translation tuple");
    return remove_common_factor(t);
}

const Params6& need_params(const QuadraticCongruence& s) {
    if (!s.params()) throw math_error("plane formulas need a type-1 or type-2 congruence");
    return *s.params();
}

HomPoly det3(const std::vector<std::vector<HomPoly>>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::string kind_name(CongruenceKind k) {
    switch (k) {
        case CongruenceKind::Type1: return "1";
        case CongruenceKind::Type2: return "2";
        case CongruenceKind::Normal: return "normal";
        default: return "general";
    }
}

QuadraticCongruence QuadraticCongruence::make(std::vector<HomPoly> basis, Matrix phi_inv, CongruenceKind kind,
                                              std::optional<NormalLayout> layout, std::optional<Params6> params) {
    if (basis.empty()) throw math_error("congruence needs a basis");
    int big = static_cast<int>(basis.size());
    if (phi_inv.rows() != big || phi_inv.cols() != big) throw math_error("phi_inv size does not match the basis");
    QuadraticCongruence s;
    s.n_ = basis[0].nvars();
    for (const auto& b : basis)
        if (b.nvars() != s.n_ || b.degree() != 2) throw math_error("basis must consist of quadratic forms");
    s.basis_ = std::move(basis);
    s.phi_inv_ = std::move(phi_inv);
    for (int k = 0; k < big; ++k) s.coords_.push_back(combine(s.basis_, s.phi_inv_.col(k), s.n_, 2));
    s.kind_ = kind;
    s.layout_ = std::move(layout);
    s.params_ = params;
    return s;
}

QuadraticCongruence QuadraticCongruence::with_coords(std::vector<HomPoly> basis, Matrix phi_inv,
                                                     std::vector<HomPoly> coords) {
    QuadraticCongruence s = make(std::move(basis), std::move(phi_inv));
    if (coords.size() != s.coords_.size()) throw math_error("wrong number of coordinates");
    s.coords_ = std::move(coords);
    return s;
}

HomPoly QuadraticCongruence::equation() const {
    int two = 2 * n_;
    HomPoly r(two, 4);
    for (size_t k = 0; k < basis_.size(); ++k) r += coords_[k].embed(two, 0) * basis_[k].embed(two, n_);
    return r;
}

Vec QuadraticCongruence::coords_at(const Vec& p) const { return eval_all(coords_, p); }
Vec QuadraticCongruence::basis_at(const Vec& p) const { return eval_all(basis_, p); }

HomPoly QuadraticCongruence::quadric_at(const Vec& p) const { return combine(basis_, coords_at(p), n_, 2); }

std::vector<HomPoly> type1_basis() {
    HomPoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
    return {x * y, y * z, x * z, z * z};
}

std::vector<HomPoly> type2_basis() {
    HomPoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
    return {x * z, y * y, y * z, z * z};
}

std::vector<HomPoly> normal_basis(int n, int m) {
    if (n < 2 || m < 1 || m > n) throw math_error("normal basis needs 1 <= m <= n");
    std::vector<HomPoly> b;
    HomPoly xn = var(n, n - 1);
    for (int k = 0; k < n - 1; ++k) b.push_back(var(n, k) * xn);
    b.push_back(xn * xn);
    HomPoly s(n, 2);
    for (int k = n - m; k <= n - 2; ++k) s += var(n, k) * var(n, k);
    b.push_back(s);
    return b;
}

NormalLayout normal_layout(int n) {
    NormalLayout l;
    for (int k = 0; k < n - 1; ++k) l.lin_pos.push_back(k);
    l.sq_pos = n - 1;
    l.s_pos = n;
    return l;
}

Matrix type2_matrix(const Params6& p) {
    const auto& [a, b, c, d, e, f] = p;
    return Matrix::from_rows({{0, a, b, c}, {-a, 0, d, e - 1}, {-b, -d, 2, f}, {-c, -e - 1, -f, 0}});
}

Params6 type2_params(const Matrix& m) {
    if (m.rows() != 4 || m.cols() != 4) throw math_error("type-2 matrix must be 4x4");
    Params6 p = {m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3) + GR(1), m(2, 3)};
    if (type2_matrix(p) != m) throw math_error("matrix does not have the type-2 shape");
    return p;
}

QuadraticCongruence build_type1(const Params6& p) {
    Matrix b = type1_matrix(p);
    if (det(b).is_zero()) throw math_error("singular congruence matrix");
    return QuadraticCongruence::make(type1_basis(), b, CongruenceKind::Type1, NormalLayout{{2, 1}, 3, 0}, p);
}

QuadraticCongruence build_type2(const Params6& p) {
    Matrix b = type2_matrix(p);
    if (det(b).is_zero()) throw math_error("singular congruence matrix");
    return QuadraticCongruence::make(type2_basis(), b, CongruenceKind::Type2, NormalLayout{{0, 2}, 3, 1}, p);
}

QuadraticCongruence build_normal(int n, int m, const Matrix& b) {
    if (det(b).is_zero()) throw math_error("singular congruence matrix");
    return QuadraticCongruence::make(normal_basis(n, m), b, CongruenceKind::Normal, normal_layout(n));
}

AxiomReport verify_axioms(const QuadraticCongruence& s, std::uint64_t seed, int samples) {
    AxiomReport r;
    const int n = s.n(), big = static_cast<int>(s.basis().size());
    const Matrix& b = s.phi_inv();
    r.degree_ok = true;
    for (const auto& c : s.coords())
        if (c.nvars() != n || (c.degree() != 2 && !c.is_zero())) r.degree_ok = false;
    if (!r.degree_ok) r.failures.push_back("coordinates are not quadratic forms");

    r.coords_consistent = r.degree_ok;
    for (int k = 0; k < big && r.coords_consistent; ++k)
        if (s.coords()[k] != combine(s.basis(), b.col(k), n, 2)) r.coords_consistent = false;
    if (!r.coords_consistent) r.failures.push_back("coordinates do not match phi_inv");

    HomPoly inc(n, 0);
    bool inc_defined = true;
    try {
        for (int k = 0; k < big; ++k) inc += s.coords()[k] * s.basis()[k];
    } catch (const math_error&) {
        inc_defined = false;
    }
    r.incidence = inc_defined && inc.is_zero();
    if (!r.incidence) r.failures.push_back("P does not lie on sigma(P)");

    r.nonsingular = !det(b).is_zero();
    if (!r.nonsingular) r.failures.push_back("phi_inv is singular");

    // independence of the coordinate forms through their coefficient vectors
    std::vector<Exponent> monos;
    for (const auto& c : s.coords())
        for (const auto& kv : c.terms())
            if (std::find(monos.begin(), monos.end(), kv.first) == monos.end()) monos.push_back(kv.first);
    Matrix cm(big, std::max<int>(1, static_cast<int>(monos.size())));
    for (int k = 0; k < big; ++k)
        for (size_t j = 0; j < monos.size(); ++j) cm(k, static_cast<int>(j)) = s.coords()[k].coeff(monos[j]);
    r.independent = rank(cm) == big;
    if (!r.independent) r.failures.push_back("image lies in a hyperplane");

    if (r.nonsingular && r.degree_ok) {
        Matrix phi = inverse(b);
        HomPoly q(n, 4);
        for (int i = 0; i < big; ++i)
            for (int j = 0; j < big; ++j)
                if (!phi(i, j).is_zero()) q += s.coords()[i] * s.coords()[j] * phi(i, j);
        r.image_in_quadric = q.is_zero();

        std::mt19937_64 rng(seed);
        r.reciprocity = true;
        for (int t = 0; t < samples; ++t) {
            Vec p = random_point(rng, n), qq = random_point(rng, n);
            GR lhs = dot(s.coords_at(qq), phi * s.coords_at(p));
            GR rhs = dot(s.basis_at(p), b * s.basis_at(qq));
            if (lhs != rhs) r.reciprocity = false;
        }
    }
    if (!r.image_in_quadric) r.failures.push_back("image not contained in Q(phi)");
    if (!r.reciprocity) r.failures.push_back("membership reciprocity fails");
    return r;
}

QuadraticCongruence transpose(const QuadraticCongruence& s) {
    std::optional<Params6> p;
    if (s.params()) {
        Params6 q = *s.params();
        for (auto& x : q) x = -x;
        p = q;
    }
    return QuadraticCongruence::make(s.basis(), s.phi_inv().transpose(), s.kind(), s.layout(), p);
}

HomPoly f_sigma(const QuadraticCongruence& s, const Vec& p) {
    HomPoly q = combine(s.basis(), s.phi_inv() * s.basis_at(p), s.n(), 2);
    if (q.is_zero()) throw math_error("base point: F_sigma(P) is the zero form");
    return q;
}

NormalData normal_data(const QuadraticCongruence& s) {
    if (!s.layout()) throw math_error("not normal basis");
    const NormalLayout& lay = *s.layout();
    const int n = s.n(), big = n + 1;
    if (static_cast<int>(lay.lin_pos.size()) != n - 1 || static_cast<int>(s.basis().size()) != big)
        throw math_error("not normal basis");
    const Matrix& b = s.phi_inv();
    const HomPoly& sform = s.basis()[lay.s_pos];
    Matrix g = gram_of(sform);
    Matrix j(big, big);
    for (int p = 0; p < n - 1; ++p)
        for (int q = 0; q < n - 1; ++q) j(lay.lin_pos[p], lay.lin_pos[q]) = g(p, q);
    j(lay.sq_pos, lay.s_pos) = j(lay.s_pos, lay.sq_pos) = GR::frac(-1, 2);
    Matrix sym = sym_part(b);
    NormalData d;
    d.kappa = GR(-2) * sym(lay.sq_pos, lay.s_pos);
    if (d.kappa.is_zero() || sym != j * d.kappa) throw math_error("not normal basis");
    Matrix mm = b * d.kappa.inv() - j;

    d.L_coeffs = Vec(n);
    for (int p = 0; p < n - 1; ++p) d.L_coeffs[p] = mm(lay.s_pos, lay.lin_pos[p]);
    d.L_coeffs[n - 1] = mm(lay.s_pos, lay.sq_pos) - GR::frac(1, 2);
    Vec h(n);
    h[n - 1] = GR(1);
    d.H = hyperplane(h);
    d.L = is_zero(d.L_coeffs) ? LinearSubspace{n, {}} : hyperplane(d.L_coeffs);
    d.C = quadric_from_equation(sform);
    d.m = d.C.rank;
    d.quadric_rank = rank(sym_part(inverse(b)));
    d.rank_relation = d.m == d.quadric_rank - 2;

    // restriction to x_n = 0
    std::vector<HomPoly> images;
    for (int k = 0; k < n; ++k) images.push_back(k == n - 1 ? HomPoly(n, 1) : var(n, k));
    std::vector<HomPoly> restricted = substitute_all(s.coords(), images);
    int lead = -1;
    for (int k = 0; k < big; ++k)
        if (!restricted[k].is_zero()) {
            lead = k;
            break;
        }
    if (lead >= 0) {
        bool constant = true;
        Vec w(big);
        for (int k = 0; k < big && constant; ++k) {
            auto q = try_div(restricted[k], restricted[lead]);
            if (!q || (q->degree() != 0 && !q->is_zero())) constant = false;
            else w[k] = q->is_zero() ? GR(0) : q->leading_coeff();
        }
        if (constant) {
            HomPoly fixed = combine(s.basis(), w, n, 2);
            constant = try_div(fixed, var(n, n - 1)).has_value();
        }
        d.restriction_constant = constant;
    }
    return d;
}

std::vector<HomPoly> translation_compositional(const QuadraticCongruence& s) {
    if (!s.layout()) throw math_error("compositional translation needs a normal layout");
    const auto& lay = *s.layout();
    const Matrix& b = s.phi_inv();
    Matrix k = adjugate(b) * b.transpose();
    std::vector<HomPoly> w;
    for (int i = 0; i < k.rows(); ++i) w.push_back(combine(s.basis(), k.row(i), s.n(), 2));
    std::vector<HomPoly> t;
    for (int p : lay.lin_pos) t.push_back(w[p]);
    t.push_back(w[lay.sq_pos]);
    return reduce(t);
}

namespace {

std::vector<HomPoly> plane_translation(const QuadraticCongruence& s, bool verbatim) {
    const auto& [a, b, c, d, e, f] = need_params(s);
    HomPoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
    GR th = a * f + c * d - b * e;
    if (s.kind() == CongruenceKind::Type1) {
        HomPoly l1 = (th + c + d + 1) * x + GR(2) * e * z;
        HomPoly l2 = GR(-2) * b * x + (th - c - d + 1) * z;
        HomPoly l3 = (th - c + d - 1) * y - GR(2) * f * z;
        HomPoly l4 = GR(2) * a * y + (th - d + c - 1) * z;
        return {l1 * l4, l2 * l3, l2 * l4};
    }
    GR delta = det(s.phi_inv());
    HomPoly k1 = (th + b) * y + GR(2) * c * z;
    HomPoly k2 = GR(-2) * a * y + (th - b) * z;
    GR ec = verbatim ? GR(-2) * e * c : GR(2) * e * c;
    HomPoly v1 = delta * (x * z) - GR(2) * (th * d - GR(2) * a * e + GR(2) * a + b * d) * (y * y) -
                 GR(4) * (th * e - a * f + c * d + b) * (y * z) - GR(2) * (th * f + ec - b * f + GR(2) * c) * (z * z);
    return {v1, k1 * k2, k2 * k2};
}

}  // namespace

std::vector<HomPoly> translation_explicit(const QuadraticCongruence& s) { return reduce(plane_translation(s, false)); }

std::vector<HomPoly> translation_explicit_verbatim(const QuadraticCongruence& s) {
    return reduce(plane_translation(s, true));
}

std::vector<HomPoly> translation_map(const QuadraticCongruence& s) {
    if (s.params() && (s.kind() == CongruenceKind::Type1 || s.kind() == CongruenceKind::Type2))
        return translation_explicit(s);
    return translation_compositional(s);
}

TranslationCheck check_translation(const QuadraticCongruence& s, const std::vector<HomPoly>& t) {
    TranslationCheck r;
    if (static_cast<int>(t.size()) != s.n()) throw math_error("translation tuple has the wrong length");
    std::vector<HomPoly> at_t = substitute_all(s.basis(), t);
    HomPoly m(s.n(), 0);
    for (size_t k = 0; k < at_t.size(); ++k) m += s.coords()[k] * at_t[k];
    r.membership = m.is_zero();

    const Matrix& b = s.phi_inv();
    Matrix tw = b.transpose() * inverse(b);
    std::vector<HomPoly> lhs, rhs;
    for (size_t k = 0; k < at_t.size(); ++k) {
        lhs.push_back(combine(at_t, b.col(static_cast<int>(k)), s.n(), at_t[0].degree()));
        rhs.push_back(combine(s.coords(), tw.row(static_cast<int>(k)), s.n(), 2));
    }
    r.commutes = proportional(lhs, rhs);
    return r;
}

bool is_linear_translation(const QuadraticCongruence& s) {
    const auto& p = need_params(s);
    if (s.kind() == CongruenceKind::Type1) return p[0].is_zero() && p[1].is_zero();
    return p[0].is_zero() && p[3].is_zero();
}

std::vector<HomPoly> linear_translation_display(const QuadraticCongruence& s, bool verbatim) {
    const auto& [a, b, c, d, e, f] = need_params(s);
    HomPoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
    if (s.kind() == CongruenceKind::Type1) {
        HomPoly second = (d - 1) * ((c + 1) * (d - 1) * y - GR(2) * f * (verbatim ? x : z));
        return {(d + 1) * ((c + 1) * (d + 1) * x + GR(2) * e * z), second, (c - 1) * (d * d - 1) * z};
    }
    if (b.is_zero()) throw math_error("the displayed linear translation divides by b");
    if (verbatim)
        return {e * x - GR(4) * (e * e - 1) * y - GR(2) * (f * (e + 1) + GR(2) * e * c / b) * z,
                (e - 1) * y - (GR(2) * c / b) * z, (e + 1) * z};
    return {(e - 1) * x + (GR(4) * (e - 1) / b) * y + ((GR(2) * b * f - GR(4) * c) / (b * b)) * z,
            (e - 1) * y - (GR(2) * c / b) * z, (e + 1) * z};
}

bool transpose_inverse_law(const QuadraticCongruence& s, std::uint64_t seed, int samples) {
    auto t = translation_map(s);
    auto tt = translation_map(transpose(s));
    std::mt19937_64 rng(seed);
    int done = 0, attempts = 0;
    while (done < samples) {
        if (++attempts > 20 * samples) return false;
        Vec p = random_point(rng, s.n());
        Vec q = eval_all(t, p);
        if (is_zero(q)) continue;
        Vec r = eval_all(tt, q);
        if (is_zero(r)) continue;
        if (!proportional(r, p)) return false;
        ++done;
    }
    return true;
}

DegenerateLocus degenerate_locus(const QuadraticCongruence& s) {
    if (s.n() != 3 || !s.params()) throw math_error("degenerate locus is implemented for plane congruences");
    std::vector<std::vector<HomPoly>> g(3, std::vector<HomPoly>(3, HomPoly(3, 2)));
    for (size_t k = 0; k < s.basis().size(); ++k) {
        Matrix gk = gram_of(s.basis()[k]);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!gk(i, j).is_zero()) g[i][j] += s.coords()[k] * gk(i, j);
    }
    DegenerateLocus d;
    d.det_form = det3(g);
    d.identically_degenerate = d.det_form.is_zero();

    const auto& [a, b, c, dd, e, f] = *s.params();
    HomPoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
    NormalData nd = normal_data(s);
    HomPoly l = HomPoly::linear(nd.L_coeffs);
    if (s.kind() == CongruenceKind::Type1) {
        d.displayed = (-a * y - b * x + (GR(1) - c) * z) * (a * (y * y) + (c - dd) * (y * z) + f * (z * z)) *
                      (b * (x * x) + (c + dd) * (x * z) + e * (z * z));
        d.verbatim_product = l * d.displayed;
        d.corrected_product = z * d.displayed;
    } else {
        HomPoly lin = a * x - dd * y - (e + 1) * z;
        HomPoly quad = a * (y * y) + b * (y * z) + c * (z * z);
        d.displayed = lin * quad;
        d.verbatim_product = l * d.displayed;
        d.corrected_product = z * lin * quad * quad;
    }
    if (d.identically_degenerate) return d;
    auto radical_match = [&](const HomPoly& p) {
        if (p.is_zero()) return false;
        return proportional(squarefree(d.det_form), squarefree(p));
    };
    d.verbatim_ok = radical_match(d.verbatim_product);
    d.corrected_ok = !d.corrected_product.is_zero() && proportional(d.det_form, d.corrected_product);
    d.radical_ok = radical_match(z * d.displayed);
    return d;
}

Matrix standard_phi(const Matrix& a, int m) {
    if (!a.is_antisymmetric()) throw math_error("shape violation: A must be antisymmetric");
    int big = a.rows();
    if (m < 1 || m + 1 > big) throw math_error("shape violation: bad m");
    Matrix r = a;
    for (int k = big - (m + 1); k < big; ++k) r(k, k) += GR(1);
    return r;
}

Matrix eta_matrix(int n) {
    Matrix e(n + 1, n + 1);
    GR i = GR::i();
    for (int k = 0; k < n - 1; ++k) e(k, k) = GR(-2) * i;
    e(n - 1, n - 1) = -i;
    e(n - 1, n) = i;
    e(n, n - 1) = GR(1);
    e(n, n) = GR(1);
    return e;
}

Vec standard_origin(int n) {
    Vec o(n + 1);
    o[n - 1] = GR::i();
    o[n] = GR(1);
    return o;
}

Vec eta(const Isomorphism& phi, const Vec& o, const Vec& q) {
    const Matrix& m = phi.matrix();
    GR qq = dot(q, m * q);
    GR cross = dot(q, m * o) + dot(o, m * q);
    Vec r(q.size());
    for (size_t k = 0; k < q.size(); ++k) r[k] = qq * o[k] - cross * q[k];
    return r;
}

std::vector<HomPoly> eta_forms(const Isomorphism& phi, const Vec& o) {
    const Matrix& m = phi.matrix();
    const int big = phi.dim(), n = big - 1;
    std::vector<HomPoly> q;
    for (int k = 0; k < big; ++k) q.push_back(k < n ? var(n, k) : HomPoly(n, 1));
    HomPoly qq(n, 2);
    for (int i = 0; i < big; ++i)
        for (int j = 0; j < big; ++j)
            if (!m(i, j).is_zero()) qq += q[i] * q[j] * m(i, j);
    Vec mo = m * o, om = m.transpose() * o;
    HomPoly cross(n, 1);
    for (int k = 0; k < big; ++k) cross += q[k] * (mo[k] + om[k]);
    std::vector<HomPoly> r;
    for (int k = 0; k < big; ++k) r.push_back(qq * o[k] - cross * q[k]);
    return r;
}

Matrix dictionary_b_from_a(const Matrix& a, int n, int m) {
    const int big = n + 1;
    if (a.rows() != big || !a.is_antisymmetric()) throw math_error("shape violation: A must be antisymmetric");
    const GR i = GR::i();
    Matrix b(big, big);
    for (int k = 0; k < n - 1; ++k) {
        for (int j = 0; j < n - 1; ++j) b(k, j) = GR(-4) * ((k == j && k >= n - m ? GR(1) : GR(0)) + a(k, j));
        b(k, n - 1) = GR(-2) * a(k, n - 1) - GR(2) * i * a(k, n);
        b(k, n) = GR(2) * a(k, n - 1) - GR(2) * i * a(k, n);
        b(n - 1, k) = -b(k, n - 1);
        b(n, k) = -b(k, n);
    }
    b(n - 1, n) = GR(2) - GR(2) * i * a(n - 1, n);
    b(n, n - 1) = GR(2) + GR(2) * i * a(n - 1, n);
    return b;
}

Matrix dictionary_a_from_b(const Matrix& b, int n, int m) {
    const int big = n + 1;
    if (b.rows() != big || b.cols() != big) throw math_error("shape violation: wrong size");
    const GR i = GR::i();
    Matrix a(big, big);
    for (int k = 0; k < n - 1; ++k) {
        for (int j = 0; j < n - 1; ++j)
            if (k != j) a(k, j) = b(k, j) * GR::frac(-1, 4);
        a(k, n - 1) = (b(k, n) - b(k, n - 1)) * GR::frac(1, 4);
        a(k, n) = i * (b(k, n - 1) + b(k, n)) * GR::frac(1, 4);
        a(n - 1, k) = -a(k, n - 1);
        a(n, k) = -a(k, n);
    }
    a(n - 1, n) = -i * (b(n, n - 1) - GR(2)) * GR::frac(1, 2);
    a(n, n - 1) = -a(n - 1, n);
    if (dictionary_b_from_a(a, n, m) != b) throw math_error("shape violation: B is not in the dictionary image");
    return a;
}

GeometricBuild geometric_build(const Matrix& phi, int n, int m) {
    const int big = n + 1;
    if (phi.rows() != big || phi.cols() != big) throw math_error("shape violation: wrong size");
    Matrix a = antisym_part(phi);
    if (standard_phi(a, m) != phi) throw math_error("shape violation: phi is not diag(0, I_{m+1}) + A");
    Isomorphism iso(phi);
    Matrix b = dictionary_b_from_a(a, n, m);
    GeometricBuild g{build_normal(n, m, b)};
    Matrix e = eta_matrix(n);
    g.pullback_matches = e.transpose() * phi * e == b;

    std::vector<HomPoly> p = normal_basis(n, m);
    std::vector<HomPoly> from_e;
    for (int k = 0; k < big; ++k) from_e.push_back(combine(p, e.row(k), n, 2));
    std::vector<HomPoly> etas = eta_forms(iso, standard_origin(n));
    g.eta_formula_matches = etas == from_e;

    // eta(X).phi(eta(Y)) in 2n variables, X first
    const int two = 2 * n;
    auto pair_form = [&](int first_offset, int second_offset) {
        HomPoly r(two, 4);
        for (int i = 0; i < big; ++i)
            for (int j = 0; j < big; ++j)
                if (!phi(i, j).is_zero())
                    r += etas[i].embed(two, first_offset) * etas[j].embed(two, second_offset) * phi(i, j);
        return r;
    };
    // variables 0..n-1 hold P, n..2n-1 hold Q; Eq_{sigma(Q)}(P) has Q first in equation()
    HomPoly q_then_p = pair_form(n, 0);
    HomPoly p_then_q = pair_form(0, n);
    auto swap_halves = [&](const HomPoly& h) {
        std::vector<HomPoly> images;
        for (int k = 0; k < two; ++k) images.push_back(var(two, (k + n) % two));
        return h.substitute(images);
    };
    HomPoly eq_sigma = swap_halves(g.sigma.equation());               // Eq_{sigma(Q)}(P)
    HomPoly eq_tsigma = swap_halves(transpose(g.sigma).equation());   // Eq_{tsigma(Q)}(P)
    g.incidence_matches = q_then_p == eq_sigma;
    g.transpose_matches = p_then_q == eq_tsigma;
    g.same_orbit = equivalent(Isomorphism(inverse(b)), iso);
    return g;
}

}  // namespace quadcong
