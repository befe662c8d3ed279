#pragma once

#include "quadcong/bilinear.hpp"
#include "quadcong/unipoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace quadcong {

struct OrbitSignature {
    UniPoly char_poly;
    int mult_plus1 = 0;
    int mult_minus1 = 0;
    // rank (T - I)^k and rank (T + I)^k for k = 1..4, empty when the root is absent
    std::vector<int> rank_profile_plus;
    std::vector<int> rank_profile_minus;
    UniPoly reciprocal_part;
    // number of pairs {lambda, 1/lambda} with lambda != +-1, and their symmetric data
    int pair_count = 0;
    GR e1, e2;
    bool diagonalizable = false;
    std::vector<UniPoly> invariant_factors;

    bool repeated_pair() const { return pair_count == 2 && e1 * e1 == GR(4) * e2; }
};

OrbitSignature signature(const Matrix& t);

struct CaseLabel {
    std::string label;  // "1.1" ... "2.8" or "BOUNDARY"
    int quadric_rank = -1;
    std::string note;
};

CaseLabel classify(const Isomorphism& phi);
CaseLabel classify_translation(const Matrix& t, int quadric_rank);
bool equivalent(const Isomorphism& a, const Isomorphism& b);

// plane type-1 congruence matrices
using Params6 = std::array<GR, 6>;
Matrix type1_matrix(const Params6& p);
// throws unless m has the type-1 shape
Params6 type1_params(const Matrix& m);

// action of the stabilizer of the two base points, displayed formulas; requires alpha beta gamma = 1
Matrix gc_action(const Matrix& m, const GR& alpha, const GR& beta, const GR& gamma, const GR& u, const GR& v);
// same action computed by substitution through g^{-1}, rescaled back to the type-1 shape; any invertible g
Matrix gc_action_matrix(const Matrix& m, const GR& alpha, const GR& beta, const GR& gamma, const GR& u,
                        const GR& v);

struct M1NormalForm {
    Matrix normalized;
    GR c, d;
    GR lambda, mu;
    GR s_lambda, s_mu;
    bool lambda_equals_mu = false;
    bool char_poly_matches = false;
    CaseLabel label;
};

M1NormalForm normal_form_M1(const Matrix& m);

}  // namespace quadcong
