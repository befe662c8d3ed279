#pragma once

#include "quadcong/bilinear.hpp"
#include "quadcong/congruence.hpp"
#include "quadcong/orbit.hpp"
#include "quadcong/sections.hpp"

#include "json.hpp"

namespace quadcong {

using json = nlohmann::json;

class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"re":"p/q","im":"r/s"}; input also accepts "p/q+r/si" strings and integers
json to_json(const GR& z);
GR scalar_from_json(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// [{"exp":[...],"coef":scalar}, ...] in canonical term order
json to_json(const HomPoly& p);
// nvars and degree are needed for the zero polynomial; -1 means read them off the terms
HomPoly poly_from_json(const json& j, int nvars = -1, int degree = -1);

json to_json(const Isomorphism& phi);  // {"dim":..,"matrix":..}
Isomorphism isomorphism_from_json(const json& j);

// {"n":3,"type":"1"|"2","params":{"a":..,...,"f":..}}
// {"n":n,"type":"normal","params":{"m":m,"B":[[..]]}}
// {"n":n,"basis":[poly..],"phi_inv":[[..]]}
json to_json(const QuadraticCongruence& s);
QuadraticCongruence congruence_from_json(const json& j);

json to_json(const MatrixOfForms& r);
json to_json(const OrbitSignature& s);
json to_json(const CaseLabel& c);
json to_json(const UniPoly& p);

}  // namespace quadcong
