#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadcong/bilinear.hpp"
#include "quadcong/congruence.hpp"
#include "quadcong/orbit.hpp"

#include <random>

using namespace quadcong;

namespace {

GR rand_gr(std::mt19937_64& rng, bool complex = false) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    mpq_class re(num(rng), den(rng)), im(complex ? num(rng) : 0, den(rng));
    re.canonicalize();
    im.canonicalize();
    return GR(re, im);
}

Matrix rand_invertible(std::mt19937_64& rng, int n, bool complex = false) {
    for (;;) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = rand_gr(rng, complex && (i + j) % 2 == 0);
        if (!det(m).is_zero()) return m;
    }
}

Matrix cas11(const GR& l, const GR& m, const GR& x = 1, const GR& y = 1) {
    return Matrix::from_rows({{0, x, 0, 0}, {l * x, 0, 0, 0}, {0, 0, 0, y}, {0, 0, m * y, 0}});
}

Matrix cas21(const GR& al, const GR& be) {
    GR h = GR::frac(1, 2);
    return Matrix::from_rows({{0, 0, 0, al},
                              {0, 0, -al, -al * h},
                              {0, al, -al * h, be},
                              {-al, GR::frac(3, 2) * al, -al * h - be, be * h}});
}

Matrix cas22(const GR& al, const GR& be, const GR& u, const GR& v) {
    return Matrix::from_rows({{0, GR(2) * al, 0, u + v},
                              {GR(-2) * al, al, -u - v, v},
                              {0, u + v, 0, GR(2) * be},
                              {-u - v, u, GR(-2) * be, be}});
}

Matrix cas27(const GR& al, const GR& be, const GR& ga) {
    return Matrix::from_rows({{0, -al, 0, 0}, {al, 0, 0, ga}, {0, 0, 0, be}, {0, -ga, -be, be * GR::frac(1, 2)}});
}

Vec vec(std::initializer_list<GR> v) { return Vec(v); }

}  // namespace

TEST_CASE("translation_of basic cases") {
    Matrix s = Matrix::from_rows({{1, 2, 0, 0}, {2, 0, 1, 0}, {0, 1, 3, 0}, {0, 0, 0, 1}});
    CHECK(translation_of(Isomorphism(s)) == Matrix::identity(4));
    Matrix a = Matrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -2, 0}});
    CHECK(translation_of(Isomorphism(a)) == Matrix::identity(4) * GR(-1));
    Matrix t = translation_of(Isomorphism(cas11(2, 3)));
    CHECK(t == Matrix::diag({GR(2), GR::frac(1, 2), GR(3), GR::frac(1, 3)}));
}

TEST_CASE("quadric_of ranks") {
    CHECK(quadric_of(Isomorphism(cas11(2, 3))).rank == 4);
    CHECK(quadric_of(Isomorphism(cas27(1, 1, 0))).rank == 1);
    Matrix c15 = Matrix::from_rows({{1, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    CHECK(quadric_of(Isomorphism(c15)).rank == 2);
    Matrix a = Matrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -2, 0}});
    CHECK_THROWS_WITH_AS(quadric_of(Isomorphism(a)), "no quadric: antisymmetric isomorphism", math_error);

    Quadric q = quadric_of(Isomorphism(cas11(2, 3)));
    HomPoly x0 = HomPoly::variable(4, 0), x1 = HomPoly::variable(4, 1);
    HomPoly x2 = HomPoly::variable(4, 2), x3 = HomPoly::variable(4, 3);
    CHECK(q.equation == GR(3) * x0 * x1 + GR(4) * x2 * x3);
}

TEST_CASE("perp") {
    Isomorphism phi(cas11(2, 3));
    LinearSubspace whole = span(4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})});
    CHECK(perp(phi, whole, Side::Right).dim() == 0);
    LinearSubspace e1 = span(4, {vec({1, 0, 0, 0})});
    CHECK(perp(phi, e1, Side::Right) == span(4, {vec({1, 0, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}));
    // left perp of e1 is y.phi.e1 = 0, i.e. lambda y1 = 0
    CHECK(perp(phi, e1, Side::Left) == span(4, {vec({1, 0, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}));
    LinearSubspace e3 = span(4, {vec({0, 0, 1, 0})});
    CHECK(perp(phi, e3, Side::Right).dim() == 3);

    std::mt19937_64 rng(7);
    Matrix s = rand_invertible(rng, 4);
    s = s + s.transpose();
    if (det(s).is_zero()) s = s + Matrix::identity(4);
    Isomorphism sym(s);
    LinearSubspace x = span(4, {vec({1, 2, 0, 1}), vec({0, 1, -1, 3})});
    CHECK(perp(sym, x, Side::Left) == perp(sym, x, Side::Right));
    CHECK(perp(sym, x, Side::Left).dim() + x.dim() == 4);
}

TEST_CASE("smooth fixed point check") {
    Matrix s = Matrix::from_rows({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
    auto r = smooth_fixed_point_check(Isomorphism(s), vec({1, 1, 0, 0}));
    CHECK(r.images_proportional);
    CHECK(r.perps_equal);
    CHECK(r.fixed_by_translation);
    CHECK(r.tangent_is_perp);

    auto f = smooth_fixed_point_check(Isomorphism(cas11(2, 3)), vec({1, 0, 1, 0}));
    CHECK_FALSE(f.images_proportional);
    CHECK_FALSE(f.perps_equal);
    CHECK_FALSE(f.fixed_by_translation);
    CHECK_FALSE(f.tangent_is_perp);
    CHECK(f.agree());

    // standard coordinates with A = 0 and O = (0, ..., 0, i, 1)
    Matrix phi = standard_phi(Matrix(4, 4), 3);
    auto o = smooth_fixed_point_check(Isomorphism(phi), standard_origin(3));
    CHECK(o.agree());
    CHECK(o.fixed_by_translation);

    CHECK_THROWS_AS(smooth_fixed_point_check(Isomorphism(cas11(2, 3)), vec({1, 1, 0, 0})), math_error);
    // rank-1 quadric x3^2 = 0: every point with x3 = 0 is singular
    CHECK_THROWS_AS(smooth_fixed_point_check(Isomorphism(cas27(1, 1, 0)), vec({1, 0, 0, 0})), math_error);
}

TEST_CASE("fixed point conditions agree on random smooth points") {
    std::mt19937_64 rng(11);
    int tested = 0;
    for (int trial = 0; trial < 40; ++trial) {
        // phi = g^T phi0 g with phi0 from a case display puts points on the quadric easily
        Matrix base = trial % 2 ? cas11(2, 3) : cas22(1, 2, 1, 0);
        Matrix g = rand_invertible(rng, 4);
        Isomorphism phi = Isomorphism(base).act(g);
        // points of the quadric of base: x0 x1 = 0 and x2 x3 = 0 for the 1.1 display
        Vec p0;
        if (trial % 2) {
            p0 = trial % 4 == 1 ? vec({1, 0, 0, 1}) : vec({1, 0, rand_gr(rng), 0});
        } else {
            p0 = trial % 4 == 0 ? vec({1, 0, 0, 0}) : vec({1, 0, 1, 0});
        }
        Vec p = inverse(g) * p0;
        Matrix s = phi.sym();
        if (!dot(p, s * p).is_zero() || is_zero(s * p)) continue;
        auto r = smooth_fixed_point_check(phi, p);
        CHECK(r.agree());
        ++tested;
    }
    CHECK(tested >= 20);
}

TEST_CASE("translation is equivariant and self-reciprocal") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
        Isomorphism phi(rand_invertible(rng, 4, true));
        Matrix g = rand_invertible(rng, 4, true);
        CHECK(translation_of(phi.act(g)) == inverse(g) * translation_of(phi) * g);
        auto c = char_poly(translation_of(phi)).coeffs();
        GR sign = c[0];
        for (int j = 0; j <= 4; ++j) CHECK(c[4 - j] == sign * c[j]);
        CHECK(quadric_of(phi).rank == rank(phi.sym()));
    }
}

TEST_CASE("signature") {
    auto s = signature(Matrix::diag({GR(2), GR::frac(1, 2), GR(3), GR::frac(1, 3)}));
    CHECK(s.mult_plus1 == 0);
    CHECK(s.mult_minus1 == 0);
    CHECK(s.pair_count == 2);
    CHECK(s.e1 == GR::frac(5, 2) + GR::frac(10, 3));
    CHECK(s.e2 == GR::frac(5, 2) * GR::frac(10, 3));
    CHECK(s.diagonalizable);

    Matrix j4 = Matrix::from_rows({{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}});
    auto t = signature(j4);
    CHECK(t.mult_minus1 == 4);
    CHECK(t.rank_profile_minus == std::vector<int>{3, 2, 1, 0});
    CHECK_FALSE(t.diagonalizable);

    auto id = signature(Matrix::identity(4));
    CHECK(id.mult_plus1 == 4);
    CHECK(classify_translation(Matrix::identity(4), 4).label == "1.3");

    CHECK_THROWS_WITH_AS(signature(Matrix::diag({GR(2), GR(1), GR(1), GR(1)})), "not a translation operator",
                         math_error);
}

TEST_CASE("classify") {
    Matrix a = Matrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -2, 0}});
    CHECK(classify(Isomorphism(a)).label == "1.4");
    CHECK(classify(Isomorphism(cas11(2, 3))).label == "1.1");
    CHECK(classify(Isomorphism(cas21(1, 1))).label == "2.1");
    CHECK(classify(Isomorphism(cas22(1, 1, 1, 0))).label == "2.2");
    CHECK(classify(Isomorphism(cas27(1, 1, 0))).label == "2.7");
    // lambda = mu makes T(phi) the 1.2 pattern: the orbit is determined by T(phi)
    CHECK(classify(Isomorphism(cas11(2, 2))).label == "1.2");
}

TEST_CASE("equivalent") {
    std::mt19937_64 rng(5);
    Isomorphism phi(cas11(2, 3));
    CHECK(equivalent(phi, phi.act(rand_invertible(rng, 4, true))));
    CHECK_FALSE(equivalent(Isomorphism(cas21(1, 1)), Isomorphism(cas22(1, 1, 1, 0))));
    CHECK(equivalent(Isomorphism(cas11(2, 3)), Isomorphism(cas11(GR::frac(1, 2), 3))));
    CHECK_FALSE(equivalent(Isomorphism(cas11(2, 3)), Isomorphism(cas11(2, 5))));
}

TEST_CASE("classify is invariant under the congruence action") {
    std::mt19937_64 rng(9);
    std::vector<Matrix> bases = {cas11(2, 3), cas21(1, 2), cas22(1, 1, 1, 0), cas27(1, 1, 0)};
    for (const auto& b : bases) {
        Isomorphism phi(b);
        std::string label = classify(phi).label;
        for (int k = 0; k < 5; ++k) {
            Isomorphism psi = phi.act(rand_invertible(rng, 4, k % 2 == 0));
            CHECK(classify(psi).label == label);
            CHECK(rank(psi.sym()) == rank(phi.sym()));
        }
    }
}

TEST_CASE("gc_action") {
    Params6 p = {GR(1), GR(2), GR::frac(1, 3), GR::frac(1, 5), GR(3), GR(-1)};
    Matrix m = type1_matrix(p);
    CHECK(gc_action(m, 1, 1, 1, 0, 0) == m);
    Matrix r = gc_action(m, 2, GR::frac(1, 2), 1, 0, 0);
    CHECK(type1_params(r) == Params6{GR(2), GR(1), p[2], p[3], GR(6), GR::frac(-1, 2)});
    CHECK_THROWS_AS(gc_action(m, 2, 1, 1, 0, 0), math_error);

    std::mt19937_64 rng(21);
    for (int k = 0; k < 10; ++k) {
        GR al = rand_gr(rng);
        GR be = rand_gr(rng);
        if (al.is_zero() || be.is_zero()) continue;
        GR ga = (al * be).inv();
        GR u = rand_gr(rng), v = rand_gr(rng);
        Matrix f = gc_action(m, al, be, ga, u, v);
        CHECK(f == gc_action_matrix(m, al, be, ga, u, v));
        if (!det(f).is_zero()) CHECK(classify(Isomorphism(inverse(f))).label == classify(Isomorphism(inverse(m))).label);
    }
}

TEST_CASE("normal_form_M1") {
    Matrix n0 = type1_matrix({GR(1), GR(1), GR(0), GR(0), GR(0), GR(0)});
    auto r = normal_form_M1(n0);
    CHECK(r.normalized == n0);
    CHECK(r.label.label == "2.5");

    auto eq = normal_form_M1(type1_matrix({GR(1), GR(1), GR::frac(-1, 3), GR::frac(1, 3), GR(0), GR(0)}));
    CHECK(eq.lambda == GR(2));
    CHECK(eq.mu == GR(2));
    CHECK(eq.lambda_equals_mu);
    CHECK(eq.label.note == "lambda = mu");
    CHECK(eq.char_poly_matches);
    CHECK(eq.label.label != "1.1");

    CHECK_THROWS_AS(normal_form_M1(type1_matrix({GR(0), GR(1), GR(0), GR(0), GR(0), GR(0)})), math_error);
    CHECK_THROWS_AS(normal_form_M1(type1_matrix({GR(1), GR(1), GR(1), GR(0), GR(0), GR(0)})), math_error);

    std::mt19937_64 rng(13);
    int done = 0;
    for (int k = 0; k < 40 && done < 8; ++k) {
        // start from a normalized matrix and move it by a random stabilizer element
        GR c = rand_gr(rng), d = rand_gr(rng);
        if (c == GR(1) || c == GR(-1) || d == GR(1) || d == GR(-1)) continue;
        Matrix base = type1_matrix({GR(1), GR(1), c, d, GR(0), GR(0)});
        GR al = rand_gr(rng), be = rand_gr(rng);
        if (al.is_zero() || be.is_zero()) continue;
        Matrix moved = gc_action(base, al, be, (al * be).inv(), rand_gr(rng), rand_gr(rng));
        auto p = type1_params(moved);
        if (p[0].is_zero() || p[1].is_zero() || det(moved).is_zero()) continue;
        M1NormalForm nf;
        try {
            nf = normal_form_M1(moved);
        } catch (const math_error&) {
            continue;  // root outside Q(i)
        }
        CHECK(nf.char_poly_matches);
        CHECK(normal_form_M1(nf.normalized).normalized == nf.normalized);
        UniPoly cp = char_poly(translation_of(Isomorphism(inverse(moved))));
        CHECK(cp.eval(nf.lambda).is_zero());
        CHECK(cp.eval(nf.mu.inv()).is_zero());
        ++done;
    }
    CHECK(done >= 4);
}
