#include "quadcong/sections.hpp"

namespace quadcong {

namespace {

HomPoly var(int n, int k) { return HomPoly::variable(n, k); }

HomPoly laplace(const std::vector<std::vector<HomPoly>>& m, std::vector<int> cols, int row) {
    if (cols.size() == 1) return m[row][cols[0]];
    HomPoly r;
    bool first = true;
    for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> rest = cols;
        rest.erase(rest.begin() + static_cast<long>(k));
        HomPoly term = m[row][cols[k]] * laplace(m, rest, row + 1);
        if (k % 2) term = -term;
        if (first) {
            r = term;
            first = false;
        } else {
            r += term;
        }
    }
    return r;
}

void check_plane(const QuadraticCongruence& s, CongruenceKind kind, const std::vector<HomPoly>& basis) {
    if (s.n() != 3 || s.basis() != basis || (s.kind() != kind && s.kind() != CongruenceKind::General))
        throw math_error(std::string("R map needs a type-") + (kind == CongruenceKind::Type1 ? "1" : "2") +
                         " congruence");
}

struct Sub {
    std::vector<Vec> forms;
    GR beta_squared;
};

// squares on vars, hyperplane variable h; alpha has one entry per square plus the X_h^2 coefficient
Sub normalize_rec(int n, const std::vector<int>& vars, int h, const std::vector<GR>& alpha) {
    const size_t k = vars.size();
    if (k == 2) {
        Matrix g = rank3_normalize(alpha[0], alpha[1], alpha[2]);
        GR delta = g(2, 2) * GR(2);
        GR p = (delta + 1) * GR::frac(1, 2), iq = GR::i() * (delta - 1) * GR::frac(1, 2);
        // [[p, iq], [iq, -p]] squares to delta I, so the top rows are that matrix times (L0, L1)
        Matrix u = Matrix::from_rows({{p, iq}, {iq, -p}}) * delta.inv();
        Sub out;
        for (int r = 0; r < 2; ++r) {
            Vec f(n);
            for (int c = 0; c < 2; ++c) {
                f[vars[0]] += u(r, c) * g(c, 0);
                f[vars[1]] += u(r, c) * g(c, 1);
                f[h] += u(r, c) * g(c, 2);
            }
            out.forms.push_back(f);
        }
        out.beta_squared = g(2, 2) * g(2, 2) * delta.inv();
        return out;
    }
    GR last = alpha[k - 1];
    GR gamma = alpha[k] - last * last * GR::frac(1, 4);
    std::vector<int> sub_vars(vars.begin(), vars.end() - 1);
    std::vector<GR> sub_alpha(alpha.begin(), alpha.begin() + static_cast<long>(k - 1));
    sub_alpha.push_back(gamma);
    GR cond(0);
    for (size_t i = 0; i + 1 < k; ++i) cond += alpha[i] * alpha[i];
    cond -= GR(4) * gamma;
    if (cond.is_zero()) throw math_error("rank drop in the recursion");
    Sub out = normalize_rec(n, sub_vars, h, sub_alpha);
    Vec f(n);
    f[vars[k - 1]] = GR(1);
    f[h] = last * GR::frac(1, 2);
    out.forms.push_back(f);
    return out;
}

}  // namespace

int MatrixOfForms::degree() const {
    for (const auto& row : entries)
        for (const auto& e : row)
            if (!e.is_zero()) return e.degree();
    return entries[0][0].degree();
}

HomPoly MatrixOfForms::det() const {
    std::vector<int> cols(dim);
    for (int k = 0; k < dim; ++k) cols[k] = k;
    return laplace(entries, cols, 0);
}

MatrixOfForms matrix_of_forms(std::vector<std::vector<HomPoly>> entries) {
    MatrixOfForms m;
    m.dim = static_cast<int>(entries.size());
    if (m.dim == 0) throw math_error("empty matrix of forms");
    int nv = entries[0][0].nvars(), deg = -1;
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != m.dim) throw math_error("matrix of forms must be square");
        for (const auto& e : row) {
            if (e.nvars() != nv) throw math_error("matrix of forms: variable count mismatch");
            if (e.is_zero()) continue;
            if (deg < 0) deg = e.degree();
            else if (e.degree() != deg) throw math_error("matrix of forms: entries of different degree");
        }
    }
    if (deg < 0) throw math_error("matrix of forms is zero");
    for (auto& row : entries)
        for (auto& e : row)
            if (e.is_zero()) e = HomPoly(nv, deg);
    m.entries = std::move(entries);
    if (m.det().is_zero()) throw math_error("matrix of forms has zero determinant");
    return m;
}

Matrix conic_trivialize(const GR& u, const GR& v, const GR& w, const GR& t) {
    GR d = v * w - u * t;
    if ((u * d).is_zero()) throw math_error("singular conic");
    return Matrix::from_rows({{u * d, 0, v * d}, {0, u, w}, {0, 0, d}});
}

Matrix rank3_normalize(const GR& a, const GR& b, const GR& c) {
    GR d = a * a + b * b - GR(4) * c;
    if (d.is_zero()) throw math_error("rank drop");
    GR i = GR::i(), h = GR::frac(1, 2), q = GR::frac(1, 4);
    GR plus = a + i * b, minus = a - i * b;
    return Matrix::from_rows({{(d + 1) * h, i * (d - 1) * h, (d * plus + minus) * q},
                              {i * (d - 1) * h, -(d + 1) * h, i * (d * plus - minus) * q},
                              {0, 0, d * h}});
}

Matrix rank3_normalize_verbatim(const GR& a, const GR& b, const GR& c) {
    GR d = a * a + b * b - GR(4) * c;
    if (d.is_zero()) throw math_error("rank drop");
    GR i = GR::i(), h = GR::frac(1, 2), q = GR::frac(1, 4);
    GR plus = a + i * b, minus = a - i * b;
    return Matrix::from_rows({{(d + 1) * h, i * (d - 1) * h, (d * minus + plus) * q},
                              {i * (d - 1) * h, -(d + 1) * h, i * (d * minus - plus) * q},
                              {0, 0, d * h}});
}

HomPoly normalizer_source(const std::vector<GR>& alpha) {
    const int n = static_cast<int>(alpha.size());
    HomPoly q(n, 2);
    for (int k = 0; k + 1 < n; ++k) q += var(n, k) * var(n, k);
    q += var(n, n - 1) * HomPoly::linear(alpha);
    return q;
}

NormalizedQuadric quadric_normalize(int n, const std::vector<GR>& alpha) {
    if (n < 3) throw math_error("quadric_normalize needs n >= 3");
    if (static_cast<int>(alpha.size()) != n) throw math_error("alpha must have n entries");
    GR cond(0);
    for (int k = 0; k + 1 < n; ++k) cond += alpha[k] * alpha[k];
    cond -= GR(4) * alpha[n - 1];
    if (cond.is_zero()) throw math_error("rank drop: the quadric is not of rank n");
    std::vector<int> vars;
    for (int k = 0; k + 1 < n; ++k) vars.push_back(k);
    Sub s = normalize_rec(n, vars, n - 1, alpha);
    NormalizedQuadric out{Matrix(n, n), s.beta_squared};
    for (int r = 0; r + 1 < n; ++r)
        for (int c = 0; c < n; ++c) out.forms(r, c) = s.forms[r][c];
    out.forms(n - 1, n - 1) = GR(1);
    return out;
}

std::vector<GR> normalizer_alpha(const HomPoly& q) {
    const int n = q.nvars();
    if (n < 3 || q.degree() != 2) throw math_error("normalizer input must be a quadratic form in n >= 3 variables");
    auto ex = [&](int i, int j) {
        Exponent e(n, 0);
        ++e[i];
        ++e[j];
        return e;
    };
    GR k = q.coeff(ex(0, 0));
    if (k.is_zero()) throw math_error("only smooth C in the hyperplane is supported");
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i; j + 1 < n; ++j) {
            GR expect = i == j ? k : GR(0);
            if (q.coeff(ex(i, j)) != expect) throw math_error("only smooth C in the hyperplane is supported");
        }
    std::vector<GR> alpha(n);
    for (int i = 0; i < n; ++i) alpha[i] = q.coeff(ex(i, n - 1)) / k;
    return alpha;
}

Vec section_type6(const GR& a, const GR& b, const GR& c, const GR& d) {
    Vec p{a + b, a + b, -c - d};
    if (is_zero(p)) throw math_error("section undefined here");
    return p;
}

Quadric standard_conic() {
    HomPoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
    return quadric_from_equation(x * y - z * z);
}

PullbackResult verify_pullback(const MatrixOfForms& r, const Quadric& c0, const QuadraticCongruence& s) {
    const int n = s.n();
    if (r.dim != n || c0.ambient_dim != n || r.nvars() != n) throw math_error("verify_pullback: dimension mismatch");
    const int two = 2 * n;
    std::vector<HomPoly> images;
    for (int i = 0; i < n; ++i) {
        HomPoly img(two, r.degree() + 1);
        for (int j = 0; j < n; ++j)
            if (!r.entries[i][j].is_zero()) img += r.entries[i][j].embed(two, 0) * var(two, n + j);
        images.push_back(img);
    }
    HomPoly psi = c0.equation.substitute(images);
    PullbackResult out;
    auto q = try_div(psi, s.equation());
    if (!q) {
        out.report = "Eq_C0(R(P)v) is not divisible by Eq_sigma(P)(v)";
        return out;
    }
    HomPoly ext(n, q->degree());
    for (const auto& [e, c] : q->terms()) {
        for (int k = n; k < two; ++k)
            if (e[k]) {
                out.report = "quotient depends on v";
                return out;
            }
        ext.add_term(Exponent(e.begin(), e.begin() + n), c);
    }
    if (ext.is_zero()) {
        out.report = "Eq_C0(R(P)v) vanishes identically";
        return out;
    }
    out.ok = true;
    out.extraneous = ext;
    return out;
}

RMap r_map_type1(const QuadraticCongruence& s) {
    check_plane(s, CongruenceKind::Type1, type1_basis());
    const auto& c = s.coords();
    const HomPoly &pxy = c[0], &pyz = c[1], &pxz = c[2], &pz2 = c[3];
    HomPoly delta = pyz * pxz - pxy * pz2;
    if (delta.is_zero()) throw math_error("image all degenerate");
    HomPoly z = var(3, 2);
    HomPoly z2 = z * z, z4 = z2 * z2;
    HomPoly zero(3, 6);
    auto r = matrix_of_forms({{pxy * delta, zero, pyz * delta}, {zero, z4 * pxy, z4 * pxz}, {zero, zero, z2 * delta}});
    return {r, standard_conic(), s, z4 * delta * pxy};
}

RMap r_map_type2(const QuadraticCongruence& s) {
    check_plane(s, CongruenceKind::Type2, type2_basis());
    const auto& c = s.coords();
    const HomPoly &pxz = c[0], &py2 = c[1], &pyz = c[2], &pz2 = c[3];
    if (py2.is_zero()) throw math_error("phi_Y2 vanishes identically");
    HomPoly zero(3, 2);
    auto r = matrix_of_forms({{pxz, pyz, pz2}, {zero, zero, -py2}, {zero, py2, zero}});
    return {r, standard_conic(), s, -py2};
}

RMap r_map_quadratic(const GR& a0, const GR& a1, const GR& b0, const GR& b1, const GR& e, const GR& f) {
    if (a0 == a1) throw math_error("constraint violated: alpha0 != alpha1");
    if (a0 * a0 - GR(4) * a0 * a1 + a1 * a1 - b0 - b1 != GR(2))
        throw math_error("constraint violated: alpha0^2 - 4 alpha0 alpha1 + alpha1^2 - beta0 - beta1 = 2");
    GR k0 = b0 + a1 * a1, k1 = b1 + a0 * a0;
    if (k0.is_zero() || k1.is_zero()) throw math_error("constraint violated: linear factor vanishes");
    HomPoly X = var(3, 0), Y = var(3, 1), Z = var(3, 2);
    HomPoly q0 = Z * (k0 * Y - f * Z);
    HomPoly q1 = Z * (k1 * X - e * Z);
    HomPoly s0 = (b0 * b1 - a0 * a0 * a1 * a1) * (X * Y) - b0 * e * (Y * Z) - b1 * f * (X * Z) + e * f * (Z * Z);
    HomPoly s1 = (-b0 - b1 - a0 * a0 - a1 * a1) * (X * Y) + e * (Y * Z) + f * (X * Z);
    HomPoly s2 = -(a0 * a1 * a1 + a0 * a0 * a1 + a0 * b0 + a1 * b1) * (X * Y) + a1 * e * (Y * Z) + a0 * f * (X * Z);
    auto r = matrix_of_forms({{a0 * a0 * q0, a1 * a1 * q1, s0}, {q0, q1, s1}, {a0 * q0, a1 * q1, s2}});
    GR c = GR(1) - (a0 - a1) * (a0 - a1);
    GR d = GR(1) + b0 - a0 * a0 + GR(2) * a0 * a1;
    auto sigma = build_type1({0, 0, c, d, e, f});
    return {r, standard_conic(), sigma, (k0 * Y - f * Z) * (k1 * X - e * Z)};
}

RMap r_map_linear(const GR& nu, const GR& a0, const GR& a1, const GR& w) {
    if (a0 == a1) throw math_error("constraint violated: alpha0 != alpha1");
    if (nu != ((a0 - a1) * (a0 - a1)).inv()) throw math_error("constraint violated: nu = 1/(alpha0-alpha1)^2");
    if (w.is_zero()) throw math_error("constraint violated: w != 0");
    HomPoly X = var(3, 0), Y = var(3, 1), Z = var(3, 2);
    GR na2 = nu * a0 * a0, a12 = a1 * a1;
    auto r = matrix_of_forms({{na2 * Z, a12 * Z, -na2 * X - a12 * Y + w * Z},
                              {nu * Z, Z, -nu * X - Y},
                              {nu * a0 * Z, a1 * Z, -nu * a0 * X - a1 * Y}});
    auto sigma = build_type1({0, 0, 0, 0, -w, -w * nu});
    return {r, standard_conic(), sigma, HomPoly()};
}

}  // namespace quadcong
