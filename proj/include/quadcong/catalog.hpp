#pragma once

#include "quadcong/bilinear.hpp"
#include "quadcong/congruence.hpp"
#include "quadcong/orbit.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quadcong {

using ParamMap = std::map<std::string, GR>;
using Grid = std::vector<std::vector<std::string>>;

// + - * / ^ and parentheses over integers, named parameters and i
GR eval_expr(const std::string& expr, const ParamMap& params);
Matrix eval_grid(const Grid& g, const ParamMap& params);

struct Constraint {
    std::string expr;  // must not vanish
    std::string text;
};

struct CaseDisplay {
    std::string label;
    Grid T;
    Grid phi;
    std::optional<Grid> corrected_phi;
    ParamMap defaults;
    std::vector<Constraint> constraints;
    int rank = 0;
    std::vector<std::pair<std::string, int>> rank_exceptions;  // rank when expr vanishes
    std::string stray;  // parameter that only fits the displayed T at value 1
};

struct CatalogEntry {
    std::string label;
    std::string heading;  // case label
    int type = 1;
    Grid matrix;  // phi^{-1}
    std::vector<Constraint> constraints;
};

const std::vector<CaseDisplay>& case_displays();
const std::vector<CatalogEntry>& catalog_entries();
const CaseDisplay& case_display(const std::string& label);
const CatalogEntry& catalog_entry(const std::string& label);

// texts of the constraints that vanish (or cannot be evaluated)
std::vector<std::string> violated(const std::vector<Constraint>& cs, const ParamMap& params);

ParamMap lambda_mu(const GR& lambda, const GR& mu);

// phi = inverse of the entry template; throws naming the violated condition
Isomorphism instantiate(const std::string& label, const ParamMap& params);
Matrix instantiate_template(const std::string& label, const ParamMap& params);

struct CatalogReport {
    std::string label;
    std::string expected_case;
    int type = 1;
    CaseLabel got;
    int quadric_rank = -1;
    bool label_ok = false;
    bool rank_ok = false;
    bool realization_ok = false;  // template realizes a valid plane congruence of the stated type
    std::string signature_dump;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

CatalogReport catalog_check(const std::string& label, const ParamMap& params);
CatalogReport catalog_check_matrix(const CatalogEntry& e, const Matrix& phi_inv);
// negates the first nonzero off-diagonal entry in row order
Matrix corrupt_sign(const Matrix& m);

std::string signature_dump(const OrbitSignature& s);

struct CaseReport {
    std::string label;
    ParamMap params;
    bool t_matches = false;
    bool rank_matches = false;
    bool classify_matches = false;
    int expected_rank = 0;
    int got_rank = -1;
    std::string got_label;
    // displayed phi taken literally (stray scalar as given); differs from the asserted run only for 1.2 and 2.6
    bool verbatim_t_matches = false;
    bool used_correction = false;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// missing params are filled from the defaults
CaseReport case_check(const std::string& label, const ParamMap& params = {});
// random admissible parameters for a case display
ParamMap random_case_params(const std::string& label, std::uint64_t seed);
// classify with BOUNDARY when the display is instantiated outside its constraints
CaseLabel classify_display(const std::string& label, const ParamMap& params);

struct Claim {
    std::string text;
    bool holds = false;
    bool expected = true;  // false for printed formulas known to fail
};

struct GalleryReport {
    std::string name;
    std::vector<Claim> claims;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

std::vector<std::string> gallery_names();
// exemple3 reads a, b from params (defaults 2, 3)
GalleryReport gallery_check(const std::string& name, const ParamMap& params = {});

}  // namespace quadcong
