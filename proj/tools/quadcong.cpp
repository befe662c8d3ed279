#include "quadcong/catalog.hpp"
#include "quadcong/json_io.hpp"
#include "quadcong/sections.hpp"
#include "quadcong/suite.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace quadcong;

namespace {

// exit statuses
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + (path.empty() ? std::string("-") : path) + " (byte " +
                         std::to_string(e.byte) + "): " + e.what());
    }
}

void write_json(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << std::endl;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << std::endl;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ';') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

GR scalar(const std::string& s) {
    try {
        return GR::parse(s);
    } catch (const std::invalid_argument&) {
        throw InputError("bad scalar '" + s + "'");
    }
}

std::vector<GR> scalar_list(const std::string& s) {
    std::vector<GR> out;
    for (const auto& t : split(s)) out.push_back(scalar(t));
    return out;
}

// "a=2,b=3"
ParamMap named_params(const std::string& s) {
    ParamMap out;
    for (const auto& t : split(s)) {
        auto eq = t.find('=');
        if (eq == std::string::npos) throw InputError("expected name=value, got '" + t + "'");
        out[t.substr(0, eq)] = scalar(t.substr(eq + 1));
    }
    return out;
}

json claims_json(const GalleryReport& r) {
    json c = json::array();
    for (const auto& cl : r.claims) c.push_back({{"claim", cl.text}, {"holds", cl.holds}, {"expected", cl.expected}});
    return {{"name", r.name}, {"ok", r.ok()}, {"claims", c}, {"failures", r.failures}};
}

json catalog_json(const CatalogReport& r) {
    return {{"label", r.label},          {"expected_case", r.expected_case}, {"case", r.got.label},
            {"type", r.type},            {"quadric_rank", r.quadric_rank},   {"label_ok", r.label_ok},
            {"rank_ok", r.rank_ok},      {"realization_ok", r.realization_ok}, {"ok", r.ok()},
            {"signature", r.signature_dump}, {"failures", r.failures}};
}

json case_json(const CaseReport& r) {
    json p = json::object();
    for (const auto& [k, v] : r.params) p[k] = to_json(v);
    return {{"case", r.label},
            {"params", p},
            {"t_matches", r.t_matches},
            {"verbatim_t_matches", r.verbatim_t_matches},
            {"used_correction", r.used_correction},
            {"expected_rank", r.expected_rank},
            {"rank", r.got_rank},
            {"classified_as", r.got_label},
            {"ok", r.ok()},
            {"failures", r.failures}};
}

json poly_list(const std::vector<HomPoly>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(to_json(p));
    return out;
}

std::string poly_text(const std::vector<HomPoly>& ps) {
    std::string s = "(";
    for (size_t k = 0; k < ps.size(); ++k) s += (k ? ", " : "") + ps[k].str({"x", "y", "z"});
    return s + ")";
}

}  // namespace

int main(int argc, char** argv) {
    // "cong build" is accepted as "cong-build"
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.size() >= 2 && (args[0] == "cong" || args[0] == "catalog" || args[0] == "gallery" || args[0] == "quadric")) {
        args[0] += "-" + args[1];
        args.erase(args.begin() + 1);
    }
    std::reverse(args.begin(), args.end());

    CLI::App app{"exact tools for non-symmetric bilinear forms and quadratic congruences", "quadcong"};
    std::uint64_t seed = 20240611;
    std::string out_path = "-";
    app.add_option("--seed", seed, "random seed");
    app.add_option("--out", out_path, "output path or -");
    app.require_subcommand(1);

    std::string in_path = "-";
    auto* classify_cmd = app.add_subcommand("classify", "orbit case of an isomorphism");
    classify_cmd->add_option("--in", in_path, "Isomorphism JSON");

    std::string a_path, b_path;
    auto* equiv_cmd = app.add_subcommand("equiv", "GL-equivalence of two isomorphisms");
    equiv_cmd->add_option("--a", a_path)->required();
    equiv_cmd->add_option("--b", b_path)->required();

    std::string type, params;
    auto* build_cmd = app.add_subcommand("cong-build", "build a congruence");
    build_cmd->add_option("--type", type, "1 or 2");
    build_cmd->add_option("--params", params, "a,b,c,d,e,f");
    build_cmd->add_option("--in", in_path, "Congruence JSON");

    auto* verify_cmd = app.add_subcommand("cong-verify", "check the congruence axioms");
    verify_cmd->add_option("--in", in_path, "Congruence JSON");
    auto* translate_cmd = app.add_subcommand("cong-translate", "translation T(sigma)");
    translate_cmd->add_option("--in", in_path, "Congruence JSON");
    auto* degen_cmd = app.add_subcommand("cong-degenerate", "locus of degenerate image conics");
    degen_cmd->add_option("--in", in_path, "Congruence JSON");

    std::string alpha;
    auto* norm_cmd = app.add_subcommand("quadric-normalize", "normal form of a quadric");
    norm_cmd->add_option("--alpha", alpha, "alpha_0,...,alpha_{n-1}")->required();

    auto* rmap_cmd = app.add_subcommand("rmap", "factor a congruence through a fixed conic");
    rmap_cmd->add_option("--type", type, "1, 2, quadratic or linear")->required();
    rmap_cmd->add_option("--params", params, "parameter list");

    auto* list_cmd = app.add_subcommand("catalog-list", "list case displays and catalog entries");

    std::string label, lambda = "2", mu = "3";
    auto* check_cmd = app.add_subcommand("catalog-check", "check catalog entries or case displays");
    check_cmd->add_option("label", label, "entry (1.1a) or case (1.1); all entries when omitted");
    check_cmd->add_option("--lambda", lambda);
    check_cmd->add_option("--mu", mu);
    check_cmd->add_option("--params", params, "name=value list for case displays");

    std::string name;
    auto* gallery_cmd = app.add_subcommand("gallery-check", "verify the worked examples");
    gallery_cmd->add_option("name", name, "exemple1, exemple2, exemple3 or tangente; all when omitted");
    gallery_cmd->add_option("--params", params, "a=..,b=.. for exemple3");

    auto* self_cmd = app.add_subcommand("selftest", "run every acceptance check");

    if (!args.empty() && args.back()[0] != '-') {
        bool known = false;
        for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args.back();
        if (!known) {
            std::cerr << "error: unknown verb '" << args.back() << "'\n" << app.help();
            return kBadInput;
        }
    }
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kBadInput;
    }

    try {
        if (classify_cmd->parsed()) {
            auto phi = isomorphism_from_json(read_json(in_path));
            if (phi.dim() != 4) throw InputError("classification needs dim = 4");
            auto c = classify(phi);
            json out = to_json(c);
            out["signature"] = to_json(signature(translation_of(phi)));
            write_json(out, out_path);
            std::cerr << "case " << c.label << "\n";
            return kOk;
        }
        if (equiv_cmd->parsed()) {
            auto a = isomorphism_from_json(read_json(a_path));
            auto b = isomorphism_from_json(read_json(b_path));
            if (a.dim() != b.dim()) throw InputError("dimensions differ");
            bool e = equivalent(a, b);
            write_json({{"equivalent", e}}, out_path);
            std::cerr << (e ? "equivalent" : "not equivalent") << "\n";
            return kOk;
        }
        if (build_cmd->parsed()) {
            QuadraticCongruence s = [&] {
                if (!type.empty()) {
                    auto v = scalar_list(params);
                    if (v.size() != 6) throw InputError("six parameters expected");
                    Params6 p{v[0], v[1], v[2], v[3], v[4], v[5]};
                    if (type == "1") return build_type1(p);
                    if (type == "2") return build_type2(p);
                    throw InputError("type must be 1 or 2");
                }
                return congruence_from_json(read_json(in_path));
            }();
            write_json(to_json(s), out_path);
            std::cerr << "built " << kind_name(s.kind()) << " congruence, n = " << s.n() << "\n";
            return kOk;
        }
        if (verify_cmd->parsed()) {
            auto s = congruence_from_json(read_json(in_path));
            auto r = verify_axioms(s, seed);
            json out = {{"ok", r.ok()},
                        {"incidence", r.incidence},
                        {"image_in_quadric", r.image_in_quadric},
                        {"nonsingular", r.nonsingular},
                        {"independent", r.independent},
                        {"reciprocity", r.reciprocity},
                        {"failures", r.failures}};
            if (r.ok()) {
                try {
                    auto nd = normal_data(s);
                    out["quadric_rank"] = nd.quadric_rank;
                    out["rank_relation"] = nd.rank_relation;
                } catch (const math_error&) {
                }
            }
            write_json(out, out_path);
            std::cerr << (r.ok() ? "axioms hold" : "axioms fail: " + r.failures[0]) << "\n";
            return r.ok() ? kOk : kFailed;
        }
        if (translate_cmd->parsed()) {
            auto s = congruence_from_json(read_json(in_path));
            auto t = translation_map(s);
            auto c = check_translation(s, t);
            json out = {{"translation", poly_list(t)},
                        {"text", poly_text(t)},
                        {"linear", t[0].degree() == 1},
                        {"membership", c.membership},
                        {"commutes", c.commutes}};
            if (s.n() == 3 && s.params()) {
                auto v = translation_explicit_verbatim(s);
                out["printed_formula_membership"] = check_translation(s, v).membership;
                out["linear_by_parameters"] = is_linear_translation(s);
            }
            write_json(out, out_path);
            std::cerr << "T(sigma) = " << poly_text(t) << "\n";
            return c.membership && c.commutes ? kOk : kFailed;
        }
        if (degen_cmd->parsed()) {
            auto s = congruence_from_json(read_json(in_path));
            auto d = degenerate_locus(s);
            json out = {{"det_form", to_json(d.det_form)},
                        {"text", d.det_form.str({"x", "y", "z"})},
                        {"displayed", to_json(d.displayed)},
                        {"identically_degenerate", d.identically_degenerate},
                        {"corrected_ok", d.corrected_ok},
                        {"printed_with_L_ok", d.verbatim_ok},
                        {"radical_ok", d.radical_ok}};
            write_json(out, out_path);
            std::cerr << "det Gram = " << d.det_form.str({"x", "y", "z"}) << "\n";
            return d.corrected_ok ? kOk : kFailed;
        }
        if (norm_cmd->parsed()) {
            auto a = scalar_list(alpha);
            auto q = quadric_normalize(static_cast<int>(a.size()), a);
            json out = {{"n", a.size()},
                        {"forms", to_json(q.forms)},
                        {"beta_squared", to_json(q.beta_squared)},
                        {"source", to_json(normalizer_source(a))}};
            write_json(out, out_path);
            std::cerr << "beta^2 = " << q.beta_squared << "\n";
            return kOk;
        }
        if (rmap_cmd->parsed()) {
            auto v = scalar_list(params);
            RMap m;
            if (type == "1" || type == "2") {
                if (v.size() != 6) throw InputError("six parameters expected");
                Params6 p{v[0], v[1], v[2], v[3], v[4], v[5]};
                m = type == "1" ? r_map_type1(build_type1(p)) : r_map_type2(build_type2(p));
            } else if (type == "quadratic") {
                if (v.size() != 6) throw InputError("alpha0,alpha1,beta0,beta1,e,f expected");
                m = r_map_quadratic(v[0], v[1], v[2], v[3], v[4], v[5]);
            } else if (type == "linear") {
                if (v.size() != 4) throw InputError("nu,alpha0,alpha1,w expected");
                m = r_map_linear(v[0], v[1], v[2], v[3]);
            } else {
                throw InputError("unknown rmap type " + type);
            }
            auto r = verify_pullback(m.r, m.c0, m.sigma);
            json out = to_json(m.r);
            out["sigma"] = to_json(m.sigma);
            out["conic"] = to_json(m.c0.equation);
            out["pullback_ok"] = r.ok;
            out["extraneous"] = to_json(r.extraneous);
            if (!m.predicted.is_zero()) out["matches_prediction"] = r.extraneous == m.predicted;
            write_json(out, out_path);
            std::cerr << "R of degree " << m.r.degree() << ", extraneous factor " << r.extraneous.str({"x", "y", "z"})
                      << "\n";
            bool ok = r.ok && (m.predicted.is_zero() || r.extraneous == m.predicted);
            return ok ? kOk : kFailed;
        }
        if (list_cmd->parsed()) {
            json cases = json::array(), entries = json::array();
            for (const auto& c : case_displays()) {
                json cs = json::array();
                for (const auto& k : c.constraints) cs.push_back(k.text);
                cases.push_back({{"case", c.label}, {"rank", c.rank}, {"constraints", cs}});
            }
            for (const auto& e : catalog_entries()) {
                json cs = json::array();
                for (const auto& k : e.constraints) cs.push_back(k.text);
                entries.push_back({{"label", e.label}, {"case", e.heading}, {"type", e.type}, {"constraints", cs}});
            }
            write_json({{"cases", cases}, {"entries", entries}}, out_path);
            std::cerr << cases.size() << " case displays, " << entries.size() << " catalog entries\n";
            return kOk;
        }
        if (check_cmd->parsed()) {
            ParamMap lm = lambda_mu(scalar(lambda), scalar(mu));
            json out = json::array();
            bool all_ok = true;
            bool is_case = label.size() == 3;
            if (is_case) {
                ParamMap p = named_params(params);
                if (!check_cmd->get_option("--lambda")->empty()) p["lambda"] = lm["lambda"];
                if (!check_cmd->get_option("--mu")->empty()) p["mu"] = lm["mu"];
                auto r = case_check(label, p);
                json j = case_json(r);
                j["classify_display"] = to_json(classify_display(label, p));
                out.push_back(j);
                all_ok = r.ok();
            } else {
                std::vector<std::string> labels;
                if (label.empty())
                    for (const auto& e : catalog_entries()) labels.push_back(e.label);
                else
                    labels.push_back(label);
                for (const auto& l : labels) {
                    auto r = catalog_check(l, lm);
                    out.push_back(catalog_json(r));
                    all_ok = all_ok && r.ok();
                    std::cerr << (r.ok() ? "PASS " : "FAIL ") << l << " -> " << r.got.label << "\n";
                }
            }
            write_json(out, out_path);
            return all_ok ? kOk : kFailed;
        }
        if (gallery_cmd->parsed()) {
            ParamMap p = named_params(params);
            json out = json::array();
            bool all_ok = true;
            for (const auto& n : name.empty() ? gallery_names() : std::vector<std::string>{name}) {
                auto r = gallery_check(n, p);
                out.push_back(claims_json(r));
                all_ok = all_ok && r.ok();
                std::cerr << (r.ok() ? "PASS " : "FAIL ") << n << "\n";
            }
            write_json(out, out_path);
            return all_ok ? kOk : kFailed;
        }
        if (self_cmd->parsed()) {
            json out = json::array();
            bool all_ok = true;
            auto results = run_acceptance(seed);
            results.push_back(run_coverage(seed));
            for (const auto& r : results) {
                std::cerr << format_line(r) << "\n";
                out.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                all_ok = all_ok && r.pass;
            }
            write_json({{"ok", all_ok}, {"results", out}}, out_path);
            return all_ok ? kOk : kFailed;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const format_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const math_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
