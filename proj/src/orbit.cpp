#include "quadcong/orbit.hpp"

#include "quadcong/hompoly.hpp"

namespace quadcong {

namespace {

std::vector<int> rank_profile(const Matrix& t, const GR& root) {
    int n = t.rows();
    Matrix shifted = t - Matrix::identity(n) * root;
    Matrix p = shifted;
    std::vector<int> out;
    for (int k = 1; k <= n; ++k) {
        out.push_back(rank(p));
        p = p * shifted;
    }
    return out;
}

bool starts_with(const std::vector<int>& v, std::initializer_list<int> prefix) {
    size_t k = 0;
    for (int x : prefix) {
        if (k >= v.size() || v[k] != x) return false;
        ++k;
    }
    return true;
}

}  // namespace

OrbitSignature signature(const Matrix& t) {
    if (t.rows() != 4 || t.cols() != 4) throw math_error("signature needs a 4x4 matrix");
    if (det(t).is_zero()) throw math_error("signature of a singular matrix");
    OrbitSignature s;
    s.char_poly = char_poly(t);
    const auto& c = s.char_poly.coeffs();
    GR c0 = c[0];
    if (c0 != GR(1) && c0 != GR(-1)) throw math_error("not a translation operator");
    for (int k = 0; k <= 4; ++k)
        if (c[4 - k] != c0 * c[k]) throw math_error("not a translation operator");

    UniPoly q = s.char_poly;
    UniPoly xm1({GR(-1), GR(1)}), xp1({GR(1), GR(1)});
    while (q.degree() > 0 && q.eval(GR(1)).is_zero()) {
        q = divmod(q, xm1).first;
        ++s.mult_plus1;
    }
    while (q.degree() > 0 && q.eval(GR(-1)).is_zero()) {
        q = divmod(q, xp1).first;
        ++s.mult_minus1;
    }
    s.reciprocal_part = q;
    int dq = q.degree();
    if (dq % 2) throw math_error("not a translation operator");
    for (int k = 0; k <= dq; ++k)
        if (q.coeff(k) != q.coeff(dq - k)) throw math_error("not a translation operator");
    s.pair_count = dq / 2;
    if (dq == 2) {
        s.e1 = -q.coeff(1);
    } else if (dq == 4) {
        s.e1 = -q.coeff(3);
        s.e2 = q.coeff(2) - GR(2);
    }
    if (s.mult_plus1) s.rank_profile_plus = rank_profile(t, GR(1));
    if (s.mult_minus1) s.rank_profile_minus = rank_profile(t, GR(-1));
    s.invariant_factors = invariant_factors(t);
    s.diagonalizable = is_squarefree(s.invariant_factors.back());
    return s;
}

CaseLabel classify_translation(const Matrix& t, int quadric_rank) {
    OrbitSignature s = signature(t);
    CaseLabel out{"BOUNDARY", quadric_rank, ""};
    const int mp = s.mult_plus1, mm = s.mult_minus1;
    const auto& rp = s.rank_profile_plus;
    const auto& rm = s.rank_profile_minus;
    if (s.diagonalizable) {
        if (mp == 4) out.label = "1.3";
        else if (mm == 4) out.label = "1.4";
        else if (mp == 2 && (mm == 2 || s.pair_count == 1)) out.label = "1.5";
        else if (mm == 2 && s.pair_count == 1) out.label = "1.1";
        else if (s.pair_count == 2) out.label = s.repeated_pair() ? "1.2" : "1.1";
    } else {
        if (mm == 4) {
            if (starts_with(rm, {3, 2, 1, 0})) out.label = "2.1";
            else if (starts_with(rm, {2, 0})) out.label = "2.2";
            else if (starts_with(rm, {1, 0})) out.label = "2.7";
        } else if (mp == 4) {
            if (starts_with(rp, {2, 0})) out.label = "2.4";
            else if (starts_with(rp, {2, 1, 0})) out.label = "2.5";
        } else if (s.pair_count == 2 && s.repeated_pair()) {
            out.label = "2.3";
        } else if (mm == 2 && s.pair_count == 1 && starts_with(rm, {3, 2})) {
            out.label = "2.6";
        } else if (mp == 2 && mm == 2 && starts_with(rp, {2, 2}) && starts_with(rm, {3, 2})) {
            out.label = "2.8";
        }
    }
    if (out.label == "BOUNDARY") out.note = "Jordan type outside the listed cases";
    return out;
}

CaseLabel classify(const Isomorphism& phi) {
    if (phi.dim() != 4) throw math_error("classification is only available in dimension 4");
    return classify_translation(translation_of(phi), rank(phi.sym()));
}

bool equivalent(const Isomorphism& a, const Isomorphism& b) {
    if (a.dim() != b.dim()) return false;
    return invariant_factors(translation_of(a)) == invariant_factors(translation_of(b));
}

Matrix type1_matrix(const Params6& p) {
    const auto& [a, b, c, d, e, f] = p;
    return Matrix::from_rows({{0, a, b, c + 1}, {-a, 0, d - 1, e}, {-b, -d - 1, 0, f}, {GR(1) - c, -e, -f, 0}});
}

Params6 type1_params(const Matrix& m) {
    if (m.rows() != 4 || m.cols() != 4) throw math_error("type-1 matrix must be 4x4");
    Params6 p = {m(0, 1), m(0, 2), m(0, 3) - GR(1), m(1, 2) + GR(1), m(1, 3), m(2, 3)};
    if (type1_matrix(p) != m) throw math_error("matrix does not have the type-1 shape");
    return p;
}

Matrix gc_action(const Matrix& m, const GR& al, const GR& be, const GR& ga, const GR& u, const GR& v) {
    if (al * be * ga != GR(1)) throw math_error("stabilizer element must satisfy alpha*beta*gamma = 1");
    auto [a, b, c, d, e, f] = type1_params(m);
    Params6 r = {
        al * ga * ga * a,
        be * ga * ga * b,
        c - al * ga * a * v - be * ga * b * u,
        d - be * ga * b * u + al * ga * a * v,
        -al * be * c * u - al * be * d * u + al * al * be * e + be * b * u * u,
        al * be * be * f + al * a * v * v - al * be * c * v + al * be * d * v,
    };
    return type1_matrix(r);
}

Matrix gc_action_matrix(const Matrix& m, const GR& al, const GR& be, const GR& ga, const GR& u, const GR& v) {
    type1_params(m);
    Matrix g = Matrix::from_rows({{al, 0, u}, {0, be, v}, {0, 0, ga}});
    Matrix h = inverse(g);
    // e(hV) = R e(V) in the basis XY, YZ, XZ, Z^2
    const int n = 3;
    std::vector<HomPoly> lin;
    for (int i = 0; i < n; ++i) lin.push_back(HomPoly::linear(h.row(i)));
    auto x = [&](int k) { return HomPoly::variable(n, k); };
    std::vector<HomPoly> basis = {x(0) * x(1), x(1) * x(2), x(0) * x(2), x(2) * x(2)};
    Matrix r(4, 4);
    for (int j = 0; j < 4; ++j) {
        HomPoly img = basis[j].substitute(lin);
        for (int k = 0; k < 4; ++k) r(j, k) = img.coeff(basis[k].leading_exponent());
        HomPoly back(n, 2);
        for (int k = 0; k < 4; ++k) back += basis[k] * r(j, k);
        if (back != img) throw math_error("substitution left the congruence basis");
    }
    Matrix out = r.transpose() * m * r;
    GR scale = (out(0, 3) + out(3, 0)) * GR::frac(1, 2);
    if (scale.is_zero()) throw math_error("degenerate stabilizer action");
    return out * scale.inv();
}

namespace {

GR quadratic_root(const GR& sum, const GR& prod) {
    // root of t^2 - sum t + prod, preferring 0 when prod = 0
    if (prod.is_zero()) return GR(0);
    auto r = exact_sqrt(sum * sum - GR(4) * prod);
    if (!r) throw math_error("normal form needs a square root outside Q(i)");
    return (sum + *r) * GR::frac(1, 2);
}

}  // namespace

M1NormalForm normal_form_M1(const Matrix& m) {
    auto p = type1_params(m);
    if (p[0].is_zero() || p[1].is_zero()) throw math_error("not in M1: a and b must be nonzero");
    // scale to a = b = 1 with alpha = b, beta = a, gamma = 1
    Matrix step = gc_action_matrix(m, p[1], p[0], GR(1), GR(0), GR(0));
    auto q = type1_params(step);
    const GR& c = q[2];
    const GR& d = q[3];
    GR u = quadratic_root(c + d, q[4]);
    GR v = quadratic_root(c - d, q[5]);
    Matrix normalized = gc_action(step, GR(1), GR(1), GR(1), u, v);
    auto r = type1_params(normalized);
    if (r[0] != GR(1) || r[1] != GR(1) || !r[4].is_zero() || !r[5].is_zero())
        throw math_error("normal form reduction failed");

    M1NormalForm out;
    out.normalized = normalized;
    out.c = r[2];
    out.d = r[3];
    for (const GR& x : {out.c, out.d})
        if (x == GR(1) || x == GR(-1)) throw math_error("c and d must differ from 1 and -1");
    out.lambda = (GR(1) - out.c) / (GR(1) + out.c);
    out.mu = (GR(1) + out.d) / (GR(1) - out.d);
    out.s_lambda = out.lambda + out.lambda.inv();
    out.s_mu = out.mu + out.mu.inv();
    out.lambda_equals_mu = out.lambda == out.mu;

    Isomorphism phi(inverse(normalized));
    UniPoly expected = UniPoly({GR(1), -out.s_lambda, GR(1)}) * UniPoly({GR(1), -out.s_mu, GR(1)});
    out.char_poly_matches = char_poly(translation_of(phi)) == expected;
    out.label = classify(phi);
    if (out.lambda_equals_mu) out.label.note = "lambda = mu";
    return out;
}

}  // namespace quadcong
