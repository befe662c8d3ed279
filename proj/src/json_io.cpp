#include "quadcong/json_io.hpp"

namespace quadcong {

namespace {

const char* kParamNames[6] = {"a", "b", "c", "d", "e", "f"};

[[noreturn]] void bad(const std::string& what) { throw format_error(what); }

}  // namespace

json to_json(const GR& z) { return {{"re", z.re().get_str()}, {"im", z.im().get_str()}}; }

GR scalar_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return GR(j.get<long>());
        if (j.is_string()) return GR::parse(j.get<std::string>());
        if (j.is_object()) {
            mpq_class re = j.contains("re") ? parse_rational(j.at("re").get<std::string>()) : mpq_class(0);
            mpq_class im = j.contains("im") ? parse_rational(j.at("im").get<std::string>()) : mpq_class(0);
            return GR(re, im);
        }
    } catch (const std::invalid_argument& e) {
        bad(std::string("bad scalar: ") + e.what());
    } catch (const json::exception& e) {
        bad(std::string("bad scalar: ") + e.what());
    }
    bad("bad scalar: " + j.dump());
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
    std::vector<std::vector<GR>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) bad("matrix row must be an array");
        std::vector<GR> row;
        for (const auto& e : r) row.push_back(scalar_from_json(e));
        if (!rows.empty() && row.size() != rows[0].size()) bad("ragged matrix");
        rows.push_back(row);
    }
    return Matrix::from_rows(rows);
}

json to_json(const HomPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"exp", e}, {"coef", to_json(c)}});
    return out;
}

HomPoly poly_from_json(const json& j, int nvars, int degree) {
    if (!j.is_array()) bad("polynomial must be an array of terms");
    if (j.empty()) {
        if (nvars < 0) bad("cannot infer the ring of a zero polynomial");
        return HomPoly(nvars, std::max(degree, 0));
    }
    HomPoly out;
    bool first = true;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef")) bad("term needs exp and coef");
        auto e = t.at("exp").get<std::vector<int>>();
        int d = 0;
        for (int v : e) {
            if (v < 0) bad("negative exponent");
            d += v;
        }
        if (nvars >= 0 && static_cast<int>(e.size()) != nvars) bad("exponent length mismatch");
        if (degree >= 0 && d != degree) bad("term degree mismatch");
        if (first) {
            out = HomPoly(static_cast<int>(e.size()), d);
            first = false;
        } else if (static_cast<int>(e.size()) != out.nvars() || d != out.degree()) {
            bad("polynomial is not homogeneous");
        }
        out.add_term(e, scalar_from_json(t.at("coef")));
    }
    return out;
}

json to_json(const Isomorphism& phi) { return {{"dim", phi.dim()}, {"matrix", to_json(phi.matrix())}}; }

Isomorphism isomorphism_from_json(const json& j) {
    if (!j.is_object() || !j.contains("matrix")) bad("isomorphism needs a matrix");
    Matrix m = matrix_from_json(j.at("matrix"));
    if (!m.is_square()) bad("isomorphism matrix must be square");
    if (j.contains("dim") && j.at("dim").get<int>() != m.rows()) bad("dim does not match the matrix");
    if (det(m).is_zero()) throw math_error("phi is singular");
    return Isomorphism(m);
}

json to_json(const QuadraticCongruence& s) {
    json out = {{"n", s.n()}};
    if (s.params() && (s.kind() == CongruenceKind::Type1 || s.kind() == CongruenceKind::Type2)) {
        out["type"] = s.kind() == CongruenceKind::Type1 ? "1" : "2";
        json p = json::object();
        for (int k = 0; k < 6; ++k) p[kParamNames[k]] = to_json((*s.params())[k]);
        out["params"] = p;
    } else {
        if (s.kind() == CongruenceKind::Normal) out["type"] = "normal";
        json b = json::array();
        for (const auto& f : s.basis()) b.push_back(to_json(f));
        out["basis"] = b;
    }
    out["phi_inv"] = to_json(s.phi_inv());
    json c = json::array();
    for (const auto& f : s.coords()) c.push_back(to_json(f));
    out["coords"] = c;
    return out;
}

QuadraticCongruence congruence_from_json(const json& j) {
    if (!j.is_object()) bad("congruence must be an object");
    int n = j.value("n", 3);
    if (j.contains("basis")) {
        if (!j.contains("phi_inv")) bad("basis needs phi_inv");
        std::vector<HomPoly> basis;
        for (const auto& f : j.at("basis")) basis.push_back(poly_from_json(f, n, 2));
        Matrix b = matrix_from_json(j.at("phi_inv"));
        if (b.rows() != static_cast<int>(basis.size()) || !b.is_square()) bad("phi_inv size does not match the basis");
        return QuadraticCongruence::make(basis, b);
    }
    std::string type = j.contains("type") ? (j.at("type").is_string() ? j.at("type").get<std::string>()
                                                                       : std::to_string(j.at("type").get<int>()))
                                          : "";
    if (!j.contains("params")) bad("congruence needs params or basis");
    const json& p = j.at("params");
    if (type == "1" || type == "2") {
        if (n != 3) bad("plane types need n = 3");
        Params6 v;
        if (p.is_array()) {
            if (p.size() != 6) bad("six parameters expected");
            for (int k = 0; k < 6; ++k) v[k] = scalar_from_json(p[k]);
        } else {
            for (int k = 0; k < 6; ++k) v[k] = p.contains(kParamNames[k]) ? scalar_from_json(p.at(kParamNames[k])) : GR(0);
        }
        return type == "1" ? build_type1(v) : build_type2(v);
    }
    if (type == "normal") {
        if (!p.contains("m") || !p.contains("B")) bad("normal congruence needs m and B");
        return build_normal(n, p.at("m").get<int>(), matrix_from_json(p.at("B")));
    }
    bad("unknown congruence type '" + type + "'");
}

json to_json(const MatrixOfForms& r) {
    json rows = json::array();
    for (const auto& row : r.entries) {
        json jr = json::array();
        for (const auto& f : row) jr.push_back(to_json(f));
        rows.push_back(jr);
    }
    return {{"dim", r.dim}, {"degree", r.degree()}, {"entries", rows}};
}

json to_json(const UniPoly& p) {
    json c = json::array();
    for (const auto& v : p.coeffs()) c.push_back(to_json(v));
    return {{"coeffs", c}, {"text", p.str()}};
}

json to_json(const OrbitSignature& s) {
    json f = json::array();
    for (const auto& p : s.invariant_factors) f.push_back(p.str());
    return {{"char_poly", s.char_poly.str()},
            {"mult_plus1", s.mult_plus1},
            {"mult_minus1", s.mult_minus1},
            {"rank_profile_plus", s.rank_profile_plus},
            {"rank_profile_minus", s.rank_profile_minus},
            {"pair_count", s.pair_count},
            {"e1", to_json(s.e1)},
            {"e2", to_json(s.e2)},
            {"diagonalizable", s.diagonalizable},
            {"invariant_factors", f}};
}

json to_json(const CaseLabel& c) {
    json out = {{"case", c.label}, {"quadric_rank", c.quadric_rank}};
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

}  // namespace quadcong
