#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadcong/sections.hpp"

#include <chrono>
#include <random>

using namespace quadcong;

namespace {

GR rand_gr(std::mt19937_64& rng, bool complex = false) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    mpq_class re(num(rng), den(rng)), im(complex ? num(rng) : 0, den(rng));
    re.canonicalize();
    im.canonicalize();
    return GR(re, im);
}

HomPoly pull(const HomPoly& q, const Matrix& g) {
    std::vector<HomPoly> images;
    for (int i = 0; i < g.rows(); ++i) images.push_back(HomPoly::linear(g.row(i)));
    return q.substitute(images);
}

HomPoly normalized_lhs(const NormalizedQuadric& nq) {
    int n = nq.forms.rows();
    HomPoly s(n, 2);
    for (int r = 0; r + 1 < n; ++r) {
        HomPoly l = HomPoly::linear(nq.forms.row(r));
        s += l * l;
    }
    HomPoly x = HomPoly::variable(n, n - 1);
    return s - nq.beta_squared * x * x;
}

}  // namespace

TEST_CASE("conic trivialization") {
    CHECK(conic_trivialize(1, 0, 0, -1) == Matrix::identity(3));
    Matrix g = conic_trivialize(1, 1, 1, 0);
    CHECK(g == Matrix::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}));
    HomPoly X = HomPoly::variable(3, 0), Y = HomPoly::variable(3, 1), Z = HomPoly::variable(3, 2);
    CHECK(pull(X * Y - Z * Z, g) == X * Y + Y * Z + X * Z);
    CHECK_THROWS_WITH_AS(conic_trivialize(0, 1, 1, 1), "singular conic", math_error);
    CHECK_THROWS_WITH_AS(conic_trivialize(1, 1, 1, 1), "singular conic", math_error);

    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; ++k) {
        GR u = rand_gr(rng, true), v = rand_gr(rng, true), w = rand_gr(rng), t = rand_gr(rng);
        if ((u * (v * w - u * t)).is_zero()) continue;
        Matrix h = conic_trivialize(u, v, w, t);
        CHECK_FALSE(det(h).is_zero());
        CHECK(proportional(pull(X * Y - Z * Z, h), u * X * Y + v * Y * Z + w * X * Z + t * Z * Z));
    }
}

TEST_CASE("rank 3 base case") {
    Matrix g = rank3_normalize(0, 0, GR::frac(-1, 4));
    CHECK(g == Matrix::diag({GR(1), GR(-1), GR::frac(1, 2)}));
    CHECK_THROWS_WITH_AS(rank3_normalize(0, 0, 0), "rank drop", math_error);
    HomPoly x0 = HomPoly::variable(3, 0), x1 = HomPoly::variable(3, 1), x2 = HomPoly::variable(3, 2);
    HomPoly target = x0 * x0 + x1 * x1 - x2 * x2;

    std::mt19937_64 rng(2);
    int verbatim_fail = 0;
    for (int k = 0; k < 20; ++k) {
        GR a = rand_gr(rng, true), b = rand_gr(rng, true), c = rand_gr(rng, true);
        GR d = a * a + b * b - GR(4) * c;
        if (d.is_zero()) continue;
        HomPoly src = x0 * x0 + x1 * x1 + x2 * (a * x0 + b * x1 + c * x2);
        Matrix m = rank3_normalize(a, b, c);
        CHECK(pull(target, m) == d * src);
        CHECK(m.row(2) == Vec{0, 0, d * GR::frac(1, 2)});
        if (!b.is_zero() && pull(target, rank3_normalize_verbatim(a, b, c)) != d * src) ++verbatim_fail;
    }
    CHECK(verbatim_fail > 0);
    // with b = 0 the printed matrix is already right
    Matrix v = rank3_normalize_verbatim(3, 0, 1);
    CHECK(v == rank3_normalize(3, 0, 1));
}

TEST_CASE("quadric normalizer") {
    auto n3 = quadric_normalize(3, {1, 2, 3});
    CHECK(normalized_lhs(n3) == normalizer_source({1, 2, 3}));
    GR delta = GR(1) + GR(4) - GR(12);
    CHECK(n3.beta_squared == delta * GR::frac(1, 4));
    // base rows are the printed matrix rows up to the [[p, iq], [iq, -p]] rotation
    Matrix g = rank3_normalize(1, 2, 3);
    CHECK(g(2, 2) * g(2, 2) == delta * n3.beta_squared);

    auto n4 = quadric_normalize(4, {0, 0, 0, 1});
    CHECK(normalized_lhs(n4) == normalizer_source({0, 0, 0, 1}));
    CHECK(n4.beta_squared == GR(-1));

    CHECK_THROWS_AS(quadric_normalize(3, {2, 0, 1}), math_error);
    CHECK_THROWS_AS(quadric_normalize(2, {1, 1}), math_error);

    std::mt19937_64 rng(3);
    for (int n = 3; n <= 8; ++n) {
        for (int k = 0; k < 5; ++k) {
            std::vector<GR> alpha(n);
            for (auto& a : alpha) a = rand_gr(rng, true);
            auto start = std::chrono::steady_clock::now();
            NormalizedQuadric q;
            try {
                q = quadric_normalize(n, alpha);
            } catch (const math_error&) {
                continue;
            }
            CHECK(normalized_lhs(q) == normalizer_source(alpha));
            CHECK_FALSE(det(q.forms).is_zero());
            CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
        }
    }
}

TEST_CASE("normalizer input reduction") {
    std::vector<GR> alpha{1, GR::frac(1, 2), -3, 2};
    HomPoly q = normalizer_source(alpha) * GR(5);
    CHECK(normalizer_alpha(q) == alpha);
    HomPoly x0 = HomPoly::variable(4, 0), x1 = HomPoly::variable(4, 1);
    CHECK_THROWS_AS(normalizer_alpha(q + x0 * x1), math_error);
    CHECK_THROWS_AS(normalizer_alpha(q - GR(5) * x1 * x1), math_error);
}

TEST_CASE("section of the sixth orbit") {
    CHECK_THROWS_WITH_AS(section_type6(1, -1, 1, -1), "section undefined here", math_error);
    CHECK(section_type6(1, 0, 0, -1) == Vec{1, 1, 1});
    std::mt19937_64 rng(4);
    for (int k = 0; k < 20; ++k) {
        GR a = rand_gr(rng, true), b = rand_gr(rng), c = rand_gr(rng, true), d = rand_gr(rng);
        if ((a + b).is_zero() && (c + d).is_zero()) continue;
        Vec p = section_type6(a, b, c, d);
        CHECK((a * p[0] * p[2] + b * p[1] * p[2] + c * p[0] * p[0] + d * p[1] * p[1]).is_zero());
    }
}

TEST_CASE("R maps for the plane types") {
    // trivial parameters: every conic of the image is degenerate
    CHECK_THROWS_WITH_AS(r_map_type1(build_type1({0, 0, 0, 0, 0, 0})), "image all degenerate", math_error);
    auto t = r_map_type1(build_type1({0, 0, 0, 0, 1, 1}));
    CHECK(t.r.degree() == 6);
    auto pr = verify_pullback(t.r, t.c0, t.sigma);
    CHECK(pr.ok);
    CHECK(pr.extraneous == t.predicted);

    auto u = r_map_type2(build_type2({0, -2, 0, 0, 0, 0}));
    CHECK(u.r.degree() == 2);
    auto pu = verify_pullback(u.r, u.c0, u.sigma);
    CHECK(pu.ok);
    CHECK(pu.extraneous == u.predicted);
    CHECK(pu.extraneous == -u.sigma.coords()[1]);

    std::mt19937_64 rng(5);
    for (int k = 0; k < 6; ++k) {
        Params6 p;
        for (auto& v : p) v = rand_gr(rng);
        if (!det(type1_matrix(p)).is_zero()) {
            auto r1 = r_map_type1(build_type1(p));
            auto v1 = verify_pullback(r1.r, r1.c0, r1.sigma);
            CHECK(v1.ok);
            CHECK(v1.extraneous == r1.predicted);
        }
        if (!det(type2_matrix(p)).is_zero()) {
            auto r2 = r_map_type2(build_type2(p));
            auto v2 = verify_pullback(r2.r, r2.c0, r2.sigma);
            CHECK(v2.ok);
            CHECK(v2.extraneous == r2.predicted);
        }
    }
    CHECK_THROWS_AS(r_map_type1(build_type2({0, -2, 0, 0, 0, 0})), math_error);
}

TEST_CASE("verify_pullback controls") {
    // constant congruence with quadric XY - Z^2 everywhere and R = identity
    HomPoly one = HomPoly::constant(3, 1), zero(3, 0);
    auto id = matrix_of_forms({{one, zero, zero}, {zero, one, zero}, {zero, zero, one}});
    auto constant = QuadraticCongruence::with_coords(type1_basis(), Matrix::identity(4),
                                                     {one, HomPoly(3, 0), HomPoly(3, 0), -one});
    auto r = verify_pullback(id, standard_conic(), constant);
    CHECK(r.ok);
    CHECK(r.extraneous == one);

    auto t = r_map_type1(build_type1({1, 2, 0, 0, 0, 0}));
    auto wrong = verify_pullback(t.r, t.c0, build_type1({1, 2, 0, 2, 0, 0}));
    CHECK_FALSE(wrong.ok);
    CHECK_FALSE(wrong.report.empty());
}

TEST_CASE("quadratic and linear R") {
    auto q = r_map_quadratic(2, 0, 1, 1, 0, 0);
    CHECK(q.r.degree() == 2);
    auto vq = verify_pullback(q.r, q.c0, q.sigma);
    CHECK(vq.ok);
    CHECK(vq.extraneous == q.predicted);
    CHECK(verify_axioms(q.sigma).ok());
    CHECK(is_linear_translation(q.sigma));
    // one linear factor dies for (1, 0, 0, -1); d = 1 makes sigma singular for (1, 0, 1, -2)
    CHECK_THROWS_AS(r_map_quadratic(1, 0, 0, -1, 0, 0), math_error);
    CHECK_THROWS_AS(r_map_quadratic(1, 0, 1, -2, 0, 0), math_error);
    CHECK_THROWS_AS(r_map_quadratic(1, -1, -2, -2, 0, 0), math_error);

    std::mt19937_64 rng(6);
    int done = 0;
    for (int k = 0; k < 30 && done < 6; ++k) {
        GR a0 = rand_gr(rng), a1 = rand_gr(rng), b0 = rand_gr(rng), e = rand_gr(rng), f = rand_gr(rng);
        GR b1 = a0 * a0 - GR(4) * a0 * a1 + a1 * a1 - b0 - GR(2);
        RMap m;
        try {
            m = r_map_quadratic(a0, a1, b0, b1, e, f);
        } catch (const math_error&) {
            continue;
        }
        auto v = verify_pullback(m.r, m.c0, m.sigma);
        CHECK(v.ok);
        CHECK(v.extraneous == m.predicted);
        HomPoly X = HomPoly::variable(3, 0), Y = HomPoly::variable(3, 1), Z = HomPoly::variable(3, 2);
        CHECK(try_div(v.extraneous, (b0 + a1 * a1) * Y - f * Z).has_value());
        CHECK(try_div(v.extraneous, (b1 + a0 * a0) * X - e * Z).has_value());
        ++done;
    }
    CHECK(done >= 3);

    auto l = r_map_linear(1, 1, 0, 1);
    CHECK(l.r.degree() == 1);
    auto vl = verify_pullback(l.r, l.c0, l.sigma);
    CHECK(vl.ok);
    CHECK(vl.extraneous.degree() == 0);
    CHECK(verify_axioms(l.sigma).ok());
    CHECK_THROWS_AS(r_map_linear(2, 1, 0, 1), math_error);
    CHECK_THROWS_AS(r_map_linear(1, 1, 0, 0), math_error);
    GR a0 = GR::frac(5, 2), a1 = GR::frac(1, 3);
    auto l2 = r_map_linear(((a0 - a1) * (a0 - a1)).inv(), a0, a1, GR::frac(-7, 3));
    CHECK(verify_pullback(l2.r, l2.c0, l2.sigma).ok);
}
