#pragma once

#include "quadcong/bilinear.hpp"
#include "quadcong/congruence.hpp"

#include <optional>
#include <vector>

namespace quadcong {

// projective automorphism with entries forms in the point variables
struct MatrixOfForms {
    int dim = 0;
    std::vector<std::vector<HomPoly>> entries;

    int nvars() const { return entries[0][0].nvars(); }
    int degree() const;
    HomPoly det() const;
};

MatrixOfForms matrix_of_forms(std::vector<std::vector<HomPoly>> entries);

// G with (XY - Z^2)(G v) proportional to uXY + vYZ + wXZ + tZ^2
Matrix conic_trivialize(const GR& u, const GR& v, const GR& w, const GR& t);

// printed base-case matrix: maps X0^2+X1^2+X2(aX0+bX1+cX2) to X0^2+X1^2-X2^2 up to delta
Matrix rank3_normalize(const GR& a, const GR& b, const GR& c);
// the same matrix as printed, kept for reporting
Matrix rank3_normalize_verbatim(const GR& a, const GR& b, const GR& c);

struct NormalizedQuadric {
    // rows L_0..L_{n-2} and a last row e_{n-1}
    Matrix forms;
    // beta^2; beta itself may leave Q(i)
    GR beta_squared;
};

// sum L_i^2 - beta^2 X_{n-1}^2 = X_0^2+...+X_{n-2}^2 + X_{n-1}(alpha_0 X_0 + ... + alpha_{n-1} X_{n-1})
NormalizedQuadric quadric_normalize(int n, const std::vector<GR>& alpha);
HomPoly normalizer_source(const std::vector<GR>& alpha);
// k(X_0^2+...+X_{n-2}^2) + X_{n-1} l(X)  ->  alpha = l / k
std::vector<GR> normalizer_alpha(const HomPoly& q);

// point on aXZ + bYZ + cX^2 + dY^2 = 0
Vec section_type6(const GR& a, const GR& b, const GR& c, const GR& d);

struct PullbackResult {
    bool ok = false;
    HomPoly extraneous;  // form in the point variables
    std::string report;
};

// psi(P; v) = Eq_C0(R(P) v) divided by Eq_{sigma(P)}(v)
PullbackResult verify_pullback(const MatrixOfForms& r, const Quadric& c0, const QuadraticCongruence& s);

Quadric standard_conic();  // XY - Z^2

struct RMap {
    MatrixOfForms r;
    Quadric c0;
    QuadraticCongruence sigma;
    HomPoly predicted;  // extraneous factor expected by the construction, zero when division decides it
};

RMap r_map_type1(const QuadraticCongruence& s);
RMap r_map_type2(const QuadraticCongruence& s);
RMap r_map_quadratic(const GR& alpha0, const GR& alpha1, const GR& beta0, const GR& beta1, const GR& e, const GR& f);
RMap r_map_linear(const GR& nu, const GR& alpha0, const GR& alpha1, const GR& w);

}  // namespace quadcong
