#include "quadcong/catalog.hpp"

#include "catalog_data.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace quadcong {

namespace {

using nlohmann::json;

class ExprParser {
public:
    ExprParser(const std::string& s, const ParamMap& p) : s_(s), p_(p) {}

    GR run() {
        GR v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw math_error("expression \"" + s_ + "\": " + what + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    GR sum() {
        GR v = product();
        for (;;) {
            if (eat('+')) v += product();
            else if (eat('-')) v -= product();
            else return v;
        }
    }
    GR product() {
        GR v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                GR d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }
    GR unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    GR power() {
        GR b = primary();
        if (eat('^')) {
            GR e = unary();
            if (!e.is_real() || e.re().get_den() != 1) fail("non-integer exponent");
            long k = e.re().get_num().get_si();
            if (k < 0 && b.is_zero()) fail("division by zero");
            return b.pow(k);
        }
        return b;
    }
    GR primary() {
        skip();
        if (eat('(')) {
            GR v = sum();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t b = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return GR(mpq_class(s_.substr(b, pos_ - b)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t b = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(b, pos_ - b);
            auto it = p_.find(name);
            if (it != p_.end()) return it->second;
            if (name == "i") return GR::i();
            fail("unknown parameter '" + name + "'");
        }
        fail("unexpected character");
    }

    const std::string& s_;
    const ParamMap& p_;
    size_t pos_ = 0;
};

Grid read_grid(const json& j) {
    Grid g;
    for (const auto& row : j) {
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(e.get<std::string>());
        g.push_back(r);
    }
    return g;
}

std::vector<Constraint> read_constraints(const json& j) {
    std::vector<Constraint> out;
    for (const auto& c : j) out.push_back({c.at("expr").get<std::string>(), c.at("text").get<std::string>()});
    return out;
}

struct Data {
    std::vector<CaseDisplay> cases;
    std::vector<CatalogEntry> entries;
};

Data load() {
    json j = json::parse(kCatalogJson);
    Data d;
    for (const auto& c : j.at("cases")) {
        CaseDisplay cd;
        cd.label = c.at("label").get<std::string>();
        cd.T = read_grid(c.at("T"));
        cd.phi = read_grid(c.at("phi"));
        if (c.contains("corrections")) cd.corrected_phi = read_grid(c.at("corrections").at("phi"));
        for (const auto& [k, v] : c.at("params").items()) cd.defaults[k] = GR::parse(v.get<std::string>());
        cd.constraints = read_constraints(c.at("constraints"));
        cd.rank = c.at("rank").get<int>();
        if (c.contains("rank_exceptions"))
            for (const auto& r : c.at("rank_exceptions"))
                cd.rank_exceptions.emplace_back(r.at("zero").get<std::string>(), r.at("rank").get<int>());
        if (c.contains("stray")) cd.stray = c.at("stray").get<std::string>();
        d.cases.push_back(std::move(cd));
    }
    const auto& ec = j.at("entry_constraints");
    for (const auto& e : j.at("entries")) {
        CatalogEntry ce;
        ce.label = e.at("label").get<std::string>();
        ce.heading = ce.label.substr(0, 3);
        ce.type = e.at("type").get<int>();
        ce.matrix = read_grid(e.at("matrix"));
        if (ec.contains(ce.heading)) ce.constraints = read_constraints(ec.at(ce.heading));
        d.entries.push_back(std::move(ce));
    }
    return d;
}

const Data& data() {
    static const Data d = load();
    return d;
}

ParamMap merged(const ParamMap& defaults, const ParamMap& given) {
    ParamMap p = defaults;
    for (const auto& [k, v] : given) p[k] = v;
    return p;
}

int case_rank(const CaseDisplay& c, const ParamMap& p) {
    for (const auto& [expr, r] : c.rank_exceptions)
        if (eval_expr(expr, p).is_zero()) return r;
    return c.rank;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k];
    return s;
}

}  // namespace

GR eval_expr(const std::string& expr, const ParamMap& params) { return ExprParser(expr, params).run(); }

Matrix eval_grid(const Grid& g, const ParamMap& params) {
    std::vector<std::vector<GR>> rows;
    for (const auto& r : g) {
        std::vector<GR> row;
        for (const auto& e : r) row.push_back(eval_expr(e, params));
        rows.push_back(row);
    }
    return Matrix::from_rows(rows);
}

const std::vector<CaseDisplay>& case_displays() { return data().cases; }
const std::vector<CatalogEntry>& catalog_entries() { return data().entries; }

const CaseDisplay& case_display(const std::string& label) {
    for (const auto& c : data().cases)
        if (c.label == label) return c;
    throw math_error("unknown case: " + label);
}

const CatalogEntry& catalog_entry(const std::string& label) {
    for (const auto& e : data().entries)
        if (e.label == label) return e;
    throw math_error("unknown catalog entry: " + label);
}

std::vector<std::string> violated(const std::vector<Constraint>& cs, const ParamMap& params) {
    std::vector<std::string> out;
    for (const auto& c : cs) {
        try {
            if (eval_expr(c.expr, params).is_zero()) out.push_back(c.text);
        } catch (const math_error&) {
            out.push_back(c.text);
        }
    }
    return out;
}

ParamMap lambda_mu(const GR& lambda, const GR& mu) { return {{"lambda", lambda}, {"mu", mu}}; }

Matrix instantiate_template(const std::string& label, const ParamMap& params) {
    const auto& e = catalog_entry(label);
    auto bad = violated(e.constraints, params);
    if (!bad.empty()) throw math_error(label + ": constraint violated: " + join(bad));
    Matrix m;
    try {
        m = eval_grid(e.matrix, params);
    } catch (const math_error& ex) {
        throw math_error(label + ": " + ex.what());
    }
    if (det(m).is_zero()) throw math_error(label + ": template is singular for these parameters");
    return m;
}

Isomorphism instantiate(const std::string& label, const ParamMap& params) {
    return Isomorphism(inverse(instantiate_template(label, params)));
}

std::string signature_dump(const OrbitSignature& s) {
    std::ostringstream os;
    os << "char_poly=" << s.char_poly.str() << " mult(+1)=" << s.mult_plus1 << " mult(-1)=" << s.mult_minus1
       << " pairs=" << s.pair_count << " e1=" << s.e1 << " e2=" << s.e2
       << " diagonalizable=" << (s.diagonalizable ? "yes" : "no") << " profile(+1)=";
    for (int r : s.rank_profile_plus) os << r;
    os << " profile(-1)=";
    for (int r : s.rank_profile_minus) os << r;
    return os.str();
}

CatalogReport catalog_check_matrix(const CatalogEntry& e, const Matrix& phi_inv) {
    CatalogReport r;
    r.label = e.label;
    r.expected_case = e.heading;
    r.type = e.type;
    if (det(phi_inv).is_zero()) {
        r.failures.push_back("template is singular");
        return r;
    }
    Isomorphism phi(inverse(phi_inv));
    r.got = classify(phi);
    r.signature_dump = signature_dump(signature(translation_of(phi)));
    r.quadric_rank = rank(phi.sym());
    r.label_ok = r.got.label == e.heading;
    r.rank_ok = r.quadric_rank == (e.type == 1 ? 4 : 3);
    try {
        auto s = e.type == 1 ? build_type1(type1_params(phi_inv)) : build_type2(type2_params(phi_inv));
        r.realization_ok = verify_axioms(s).ok();
    } catch (const math_error&) {
        r.realization_ok = false;
    }
    if (!r.label_ok)
        r.failures.push_back("classified as " + r.got.label + ", heading " + e.heading + " [" + r.signature_dump + "]");
    if (!r.rank_ok)
        r.failures.push_back("rank Q(phi) = " + std::to_string(r.quadric_rank) + " but type " + std::to_string(e.type));
    if (!r.realization_ok) r.failures.push_back("template is not a valid type-" + std::to_string(e.type) + " congruence");
    return r;
}

CatalogReport catalog_check(const std::string& label, const ParamMap& params) {
    return catalog_check_matrix(catalog_entry(label), instantiate_template(label, params));
}

Matrix corrupt_sign(const Matrix& m) {
    Matrix out = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && !m(i, j).is_zero()) {
                out(i, j) = -m(i, j);
                return out;
            }
    throw math_error("nothing to corrupt");
}

CaseReport case_check(const std::string& label, const ParamMap& params) {
    const auto& c = case_display(label);
    CaseReport r;
    r.label = label;
    r.params = merged(c.defaults, params);
    auto bad = violated(c.constraints, r.params);
    if (!bad.empty()) {
        r.failures.push_back("constraint violated: " + join(bad));
        return r;
    }
    Matrix t = eval_grid(c.T, r.params);
    Matrix phi = eval_grid(c.phi, r.params);
    if (det(phi).is_zero()) {
        r.failures.push_back("displayed phi is singular");
        return r;
    }
    r.verbatim_t_matches = translation_of(Isomorphism(phi)) == t;
    if (!c.stray.empty()) {
        ParamMap p = r.params;
        p[c.stray] = GR(1);
        phi = eval_grid(c.phi, p);
    } else if (!r.verbatim_t_matches && c.corrected_phi) {
        phi = eval_grid(*c.corrected_phi, r.params);
        r.used_correction = true;
    }
    Isomorphism iso(phi);
    r.t_matches = translation_of(iso) == t;
    r.expected_rank = case_rank(c, r.params);
    r.got_rank = rank(iso.sym());
    r.rank_matches = r.got_rank == r.expected_rank;
    r.got_label = classify(iso).label;
    r.classify_matches = r.got_label == label;
    if (!r.t_matches) r.failures.push_back("T(phi) differs from the displayed T");
    if (!r.rank_matches)
        r.failures.push_back("rank " + std::to_string(r.got_rank) + ", expected " + std::to_string(r.expected_rank));
    if (!r.classify_matches) r.failures.push_back("classified as " + r.got_label);
    return r;
}

ParamMap random_case_params(const std::string& label, std::uint64_t seed) {
    const auto& c = case_display(label);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ParamMap p;
        for (const auto& [k, v] : c.defaults) p[k] = GR(mpq_class(num(rng), den(rng)));
        if (!c.stray.empty()) p[c.stray] = c.defaults.at(c.stray);
        for (auto& [k, v] : p) {
            mpq_class q = v.re();
            q.canonicalize();
            v = GR(q);
        }
        if (!violated(c.constraints, p).empty()) continue;
        try {
            if (det(eval_grid(c.phi, p)).is_zero()) continue;
        } catch (const math_error&) {
            continue;
        }
        // rank exceptions are special values, keep random draws generic
        bool special = false;
        for (const auto& [expr, rk] : c.rank_exceptions) special = special || eval_expr(expr, p).is_zero();
        if (!special) return p;
    }
    throw math_error("no admissible parameters found for " + label);
}

CaseLabel classify_display(const std::string& label, const ParamMap& params) {
    const auto& c = case_display(label);
    ParamMap p = merged(c.defaults, params);
    Matrix phi = eval_grid(c.corrected_phi ? *c.corrected_phi : c.phi, p);
    auto bad = violated(c.constraints, p);
    if (bad.empty()) return classify(Isomorphism(phi));
    CaseLabel out{"BOUNDARY", -1, "violates " + join(bad)};
    if (!det(phi).is_zero()) {
        Isomorphism iso(phi);
        CaseLabel inner = classify(iso);
        out.quadric_rank = inner.quadric_rank;
        out.note += "; signature matches " + inner.label + " [" + signature_dump(signature(translation_of(iso))) + "]";
    } else {
        out.note += "; phi is singular";
    }
    return out;
}

// ---- gallery

namespace {

HomPoly var6(int k) { return HomPoly::variable(6, k); }
HomPoly var3(int k) { return HomPoly::variable(3, k); }

void add(GalleryReport& r, const std::string& text, bool holds, bool expected = true) {
    r.claims.push_back({text, holds, expected});
    if (holds != expected)
        r.failures.push_back(expected ? "claim fails: " + text : "expected failure not observed: " + text);
}

GalleryReport exemple1() {
    GalleryReport r{"exemple1", {}, {}};
    auto s = build_type1({0, 0, 0, 0, -1, -1});
    HomPoly x = var6(0), y = var6(1), z = var6(2), X = var6(3), Y = var6(4), Z = var6(5);
    HomPoly con = (z * X - (x - z) * Z) * (z * Y - (y - z) * Z) - z * z * Z * Z;
    add(r, "sigma(x,y,z) is (zX-(x-z)Z)(zY-(y-z)Z)-z^2Z^2", proportional(s.equation(), con));
    add(r, "valid congruence", verify_axioms(s).ok());
    add(r, "type 1", s.kind() == CongruenceKind::Type1 && rank(Isomorphism(inverse(s.phi_inv())).sym()) == 4);
    HomPoly px = var3(0), py = var3(1), pz = var3(2);
    std::vector<HomPoly> t = {px - GR(2) * pz, py - GR(2) * pz, pz};
    add(r, "T(sigma) = (x-2z, y-2z, z)", proportional(translation_map(s), t));
    auto c = check_translation(s, t);
    add(r, "T(sigma)(P) lies on sigma(P) and commutes with T(phi)", c.membership && c.commutes);
    return r;
}

std::vector<HomPoly> theta(const HomPoly& u, const HomPoly& v, const HomPoly& w) {
    return {v * w * w + GR::frac(1, 6) * u * u * u, u * w * w, w * w * w};
}

GalleryReport exemple2() {
    GalleryReport r{"exemple2", {}, {}};
    auto s = build_type2({0, 0, -1, GR::frac(1, 2), 0, GR::frac(-4, 3)});
    HomPoly x = var6(0), y = var6(1), z = var6(2), X = var6(3), Y = var6(4), Z = var6(5);
    GR h(GR::frac(1, 2)), q(GR::frac(4, 3));
    HomPoly con = -(z * z * X * Z) + (z * z + h * y * z) * Y * Y +
                  (-(h * y * y) - GR(2) * y * z - q * z * z) * Y * Z + (x * z + y * y + q * y * z) * Z * Z;
    add(r, "sigma(x,y,z) is the displayed conic", proportional(s.equation(), con));
    add(r, "valid congruence", verify_axioms(s).ok());
    add(r, "type 2", rank(Isomorphism(inverse(s.phi_inv())).sym()) == 3);

    auto tp = theta(x, y, z), tq = theta(X, Y, Z);
    HomPoly pulled = con.substitute({tp[0], tp[1], tp[2], tq[0], tq[1], tq[2]});
    HomPoly w = z * X - (x + GR(2) * z) * Z;
    HomPoly cubic = -(z * z * z * Y * Z * Z) - GR::frac(1, 6) * w * w * w + GR::frac(2, 3) * z * z * Z * Z * w +
                    y * z * z * Z * Z * Z;
    auto quo = try_div(pulled, cubic);
    add(r, "theta-pullback of sigma is divisible by the displayed cubic", quo.has_value() && !quo->is_zero());
    if (quo) add(r, "cofactor is z^3 Z^3", proportional(*quo, z * z * z * Z * Z * Z));

    HomPoly px = var3(0), py = var3(1), pz = var3(2);
    auto th = theta(px, py, pz);
    std::vector<HomPoly> conj;
    for (const auto& f : translation_map(s)) conj.push_back(f.substitute(th));
    auto shifted = theta(px + GR(4) * pz, py, pz);
    add(r, "theta conjugates T(sigma) to the shift by (4,0)", proportional(conj, shifted));
    return r;
}

GalleryReport exemple3(const ParamMap& params) {
    GalleryReport r{"exemple3", {}, {}};
    GR a = params.count("a") ? params.at("a") : GR(2);
    GR b = params.count("b") ? params.at("b") : GR(3);
    if (a.is_zero() || b.is_zero() || a + b == GR(1)) throw math_error("exemple3 needs a, b != 0 and a + b != 1");
    // coefficients of XY, YZ, XZ, Z^2 are z^2, -axz, -byz, (a+b-1)xy
    Matrix B(4, 4);
    B(3, 0) = GR(1);
    B(2, 1) = -a;
    B(1, 2) = -b;
    B(0, 3) = a + b - GR(1);
    auto s = QuadraticCongruence::make(type1_basis(), B);
    HomPoly x = var6(0), y = var6(1), z = var6(2), X = var6(3), Y = var6(4), Z = var6(5);
    HomPoly con = z * z * X * Y - a * x * z * Y * Z - b * y * z * X * Z + (a + b - GR(1)) * x * y * Z * Z;
    add(r, "sigma(x,y,z) is the displayed conic", proportional(s.equation(), con));
    add(r, "valid congruence", verify_axioms(s).ok());
    HomPoly dX = y * z * X, dY = x * z * Y, dZ = x * y * Z;
    HomPoly fixed = (dX - a * dZ) * (dY - b * dZ) - (GR(1) - a) * (GR(1) - b) * dZ * dZ;
    add(r, "fixed conic pulled back by (yzX, xzY, xyZ) is xy sigma(x,y,z)", fixed == x * y * con);
    return r;
}

GalleryReport tangente() {
    GalleryReport r{"tangente", {}, {}};
    auto s = build_type2({0, -2, 0, 0, 0, 0});
    add(r, "valid congruence", verify_axioms(s).ok());
    HomPoly x = var3(0), y = var3(1), z = var3(2);
    std::vector<HomPoly> derived = {x - GR(2) * y, y, -z};
    std::vector<HomPoly> printed = {x - GR(2) * z, y, -z};
    add(r, "T(sigma) = (x-2y, y, -z)", proportional(translation_map(s), derived));
    auto cd = check_translation(s, derived);
    add(r, "derived tuple lies on sigma(P)", cd.membership);
    add(r, "derived tuple commutes with T(phi)", cd.commutes);
    add(r, "translation is linear", is_linear_translation(s));
    auto cp = check_translation(s, printed);
    add(r, "printed tuple (x-2z, y, -z) lies on sigma(P)", cp.membership, false);
    return r;
}

}  // namespace

std::vector<std::string> gallery_names() { return {"exemple1", "exemple2", "exemple3", "tangente"}; }

GalleryReport gallery_check(const std::string& name, const ParamMap& params) {
    if (name == "exemple1") return exemple1();
    if (name == "exemple2") return exemple2();
    if (name == "exemple3") return exemple3(params);
    if (name == "tangente") return tangente();
    throw math_error("unknown gallery example: " + name);
}

}  // namespace quadcong
