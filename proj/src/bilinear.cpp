#include "quadcong/bilinear.hpp"

namespace quadcong {

Isomorphism::Isomorphism(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square() || m_.rows() < 1) throw math_error("isomorphism needs a square matrix");
    if (det(m_).is_zero()) throw math_error("singular matrix is not an isomorphism");
}

Isomorphism Isomorphism::act(const Matrix& g) const { return Isomorphism(g.transpose() * m_ * g); }

Matrix gram_of(const HomPoly& eq) {
    if (eq.degree() != 2 && !eq.is_zero()) throw math_error("gram of a non-quadratic form");
    int n = eq.nvars();
    Matrix g(n, n);
    for (const auto& [e, c] : eq.terms()) {
        int i = -1, j = -1;
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < e[k]; ++r) (i < 0 ? i : j) = k;
        if (i == j) g(i, i) += c;
        else {
            g(i, j) += c * GR::frac(1, 2);
            g(j, i) += c * GR::frac(1, 2);
        }
    }
    return g;
}

Quadric quadric_from_gram(const Matrix& gram) {
    if (!gram.is_symmetric()) throw math_error("gram matrix must be symmetric");
    int n = gram.rows();
    HomPoly eq(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (gram(i, j).is_zero()) continue;
            Exponent e(n, 0);
            ++e[i];
            ++e[j];
            eq.add_term(e, gram(i, j));
        }
    return {n, eq, gram, rank(gram)};
}

Quadric quadric_from_equation(const HomPoly& eq) {
    Matrix g = gram_of(eq);
    return {eq.nvars(), eq, g, rank(g)};
}

LinearSubspace span(int ambient_dim, const std::vector<Vec>& vectors) {
    LinearSubspace s{ambient_dim, {}};
    if (vectors.empty()) return s;
    Matrix m(static_cast<int>(vectors.size()), ambient_dim);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != ambient_dim) throw math_error("span: vector size mismatch");
        for (int j = 0; j < ambient_dim; ++j) m(static_cast<int>(i), j) = vectors[i][j];
    }
    auto piv = rref(m);
    for (size_t r = 0; r < piv.size(); ++r) s.generators.push_back(m.row(static_cast<int>(r)));
    return s;
}

bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.ambient_dim == b.ambient_dim && same_span(a.generators, b.generators);
}

LinearSubspace hyperplane(const Vec& f) {
    Matrix m(1, static_cast<int>(f.size()));
    for (size_t j = 0; j < f.size(); ++j) m(0, static_cast<int>(j)) = f[j];
    return {static_cast<int>(f.size()), kernel(m)};
}

Matrix translation_of(const Isomorphism& phi) { return inverse(phi.matrix().transpose()) * phi.matrix(); }

Quadric quadric_of(const Isomorphism& phi) {
    Matrix s = phi.sym();
    if (s.is_zero()) throw math_error("no quadric: antisymmetric isomorphism");
    return quadric_from_gram(s);
}

LinearSubspace perp(const Isomorphism& phi, const LinearSubspace& x, Side side) {
    int n = phi.dim();
    if (x.ambient_dim != n) throw math_error("perp: dimension mismatch");
    if (x.generators.empty()) return {n, kernel(Matrix(1, n))};
    const Matrix& m = phi.matrix();
    Matrix eqs(x.dim(), n);
    for (int r = 0; r < x.dim(); ++r) {
        // right: x^T M y = 0, row is M^T x; left: y^T M x = 0, row is M x
        Vec row = side == Side::Right ? m.transpose() * x.generators[r] : m * x.generators[r];
        for (int j = 0; j < n; ++j) eqs(r, j) = row[j];
    }
    return {n, kernel(eqs)};
}

FixedPointReport smooth_fixed_point_check(const Isomorphism& phi, const Vec& p) {
    const Matrix& m = phi.matrix();
    if (static_cast<int>(p.size()) != phi.dim()) throw math_error("point has wrong dimension");
    if (is_zero(p)) throw math_error("zero vector is not a point");
    Matrix s = phi.sym();
    if (!dot(p, s * p).is_zero()) throw math_error("point is not on the quadric");
    Vec grad = s * p;
    if (is_zero(grad)) throw math_error("singular point of the quadric");

    FixedPointReport r;
    r.images_proportional = proportional(m * p, m.transpose() * p);
    LinearSubspace pt = span(phi.dim(), {p});
    LinearSubspace right = perp(phi, pt, Side::Right), left = perp(phi, pt, Side::Left);
    r.perps_equal = right == left;
    r.fixed_by_translation = proportional(translation_of(phi) * p, p);
    r.tangent_is_perp = hyperplane(grad) == right;
    return r;
}

}  // namespace quadcong
