#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadcong/json_io.hpp"

using namespace quadcong;

TEST_CASE("scalars") {
    GR z(mpq_class(1, 2), mpq_class(-3, 4));
    json j = to_json(z);
    CHECK(j == json{{"re", "1/2"}, {"im", "-3/4"}});
    CHECK(scalar_from_json(j) == z);
    CHECK(scalar_from_json("1/2-3/4i") == z);
    CHECK(scalar_from_json(7) == GR(7));
    CHECK(scalar_from_json(json{{"re", "5"}}) == GR(5));
    CHECK_THROWS_AS(scalar_from_json("1/0x"), format_error);
    CHECK_THROWS_AS(scalar_from_json(json::array()), format_error);
}

TEST_CASE("matrices and isomorphisms") {
    Matrix m = Matrix::from_rows({{0, 1}, {GR::frac(-1, 3), GR::i()}});
    CHECK(matrix_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), format_error);
    Isomorphism phi(m);
    auto j = to_json(phi);
    CHECK(j.at("dim") == 2);
    CHECK(isomorphism_from_json(j).matrix() == m);
    j["dim"] = 3;
    CHECK_THROWS_AS(isomorphism_from_json(j), format_error);
    CHECK_THROWS_AS(isomorphism_from_json(json{{"matrix", json::parse("[[1,1],[1,1]]")}}), math_error);
}

TEST_CASE("polynomials") {
    HomPoly x = HomPoly::variable(3, 0), z = HomPoly::variable(3, 2);
    HomPoly p = x * x - GR::frac(1, 2) * x * z + GR::i() * z * z;
    json j = to_json(p);
    CHECK(j.size() == 3);
    CHECK(j[0].at("exp") == json::parse("[2,0,0]"));
    CHECK(poly_from_json(j) == p);
    CHECK(poly_from_json(json::array(), 3, 2).nvars() == 3);
    CHECK_THROWS_AS(poly_from_json(json::array()), format_error);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"([{"exp":[1,0],"coef":1},{"exp":[2,0],"coef":1}])")), format_error);
}

TEST_CASE("congruences") {
    auto s = build_type2({0, -2, 0, 0, 0, 0});
    auto j = to_json(s);
    CHECK(j.at("type") == "2");
    CHECK(congruence_from_json(j).equation() == s.equation());
    auto from_params = congruence_from_json(json::parse(R"({"n":3,"type":"1","params":["0","0","0","0","-1","-1"]})"));
    CHECK(from_params.equation() == build_type1({0, 0, 0, 0, -1, -1}).equation());

    json general = {{"n", 3}, {"basis", json::array()}, {"phi_inv", to_json(s.phi_inv())}};
    for (const auto& f : s.basis()) general["basis"].push_back(to_json(f));
    CHECK(congruence_from_json(general).equation() == s.equation());

    Matrix b = Matrix::identity(5);
    auto n = congruence_from_json(json{{"n", 4}, {"type", "normal"}, {"params", {{"m", 4}, {"B", to_json(b)}}}});
    CHECK(n.kind() == CongruenceKind::Normal);
    CHECK_THROWS_AS(congruence_from_json(json{{"n", 3}, {"type", "7"}, {"params", json::object()}}), format_error);
}
