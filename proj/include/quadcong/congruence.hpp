#pragma once

#include "quadcong/bilinear.hpp"
#include "quadcong/orbit.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quadcong {

enum class CongruenceKind { Type1, Type2, Normal, General };
std::string kind_name(CongruenceKind k);

// Basis positions of a normal basis (x_1 x_n, ..., x_{n-1} x_n, x_n^2, s) up to reordering.
// Variable i < n-1 multiplies x_n at lin_pos[i]; the hyperplane variable x_n is always the last one.
struct NormalLayout {
    std::vector<int> lin_pos;
    int sq_pos = 0;
    int s_pos = 0;
};

class QuadraticCongruence {
public:
    // coords are derived from basis and phi_inv
    static QuadraticCongruence make(std::vector<HomPoly> basis, Matrix phi_inv,
                                    CongruenceKind kind = CongruenceKind::General,
                                    std::optional<NormalLayout> layout = std::nullopt,
                                    std::optional<Params6> params = std::nullopt);
    // keeps caller-supplied coordinates (used to exercise verify_axioms on broken input)
    static QuadraticCongruence with_coords(std::vector<HomPoly> basis, Matrix phi_inv, std::vector<HomPoly> coords);

    int n() const { return n_; }
    const std::vector<HomPoly>& basis() const { return basis_; }
    const Matrix& phi_inv() const { return phi_inv_; }
    const std::vector<HomPoly>& coords() const { return coords_; }
    CongruenceKind kind() const { return kind_; }
    const std::optional<NormalLayout>& layout() const { return layout_; }
    const std::optional<Params6>& params() const { return params_; }

    // Eq_{sigma(P)}(V) in 2n variables, P first
    HomPoly equation() const;
    // sigma(p) as a quadratic form
    HomPoly quadric_at(const Vec& p) const;
    Vec coords_at(const Vec& p) const;
    Vec basis_at(const Vec& p) const;

private:
    int n_ = 0;
    std::vector<HomPoly> basis_;
    Matrix phi_inv_;
    std::vector<HomPoly> coords_;
    CongruenceKind kind_ = CongruenceKind::General;
    std::optional<NormalLayout> layout_;
    std::optional<Params6> params_;
};

std::vector<HomPoly> type1_basis();
std::vector<HomPoly> type2_basis();
// (x_1 x_n, ..., x_{n-1} x_n, x_n^2, x_{n-m+1}^2 + ... + x_{n-1}^2), 1-based in the comment
std::vector<HomPoly> normal_basis(int n, int m);
NormalLayout normal_layout(int n);

Matrix type2_matrix(const Params6& p);
Params6 type2_params(const Matrix& m);

QuadraticCongruence build_type1(const Params6& p);
QuadraticCongruence build_type2(const Params6& p);
QuadraticCongruence build_normal(int n, int m, const Matrix& b);

struct AxiomReport {
    bool degree_ok = false;
    bool coords_consistent = false;
    bool incidence = false;
    bool nonsingular = false;
    bool independent = false;
    bool image_in_quadric = false;
    bool reciprocity = false;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

AxiomReport verify_axioms(const QuadraticCongruence& s, std::uint64_t seed = 1, int samples = 6);

QuadraticCongruence transpose(const QuadraticCongruence& s);
// the quadric Q -> Eq_{sigma(Q)}(P)
HomPoly f_sigma(const QuadraticCongruence& s, const Vec& p);

struct NormalData {
    LinearSubspace H;
    Quadric C;
    LinearSubspace L;
    Vec L_coeffs;
    GR kappa;
    int m = 0;
    int quadric_rank = 0;
    bool rank_relation = false;      // rank(C) = rank(Q(phi)) - 2
    bool restriction_constant = false;  // sigma restricted to H is a constant quadric through H
};

NormalData normal_data(const QuadraticCongruence& s);

// T(sigma) tuples, all reduced by the gcd of their coordinates
std::vector<HomPoly> translation_compositional(const QuadraticCongruence& s);
// plane formulas; the type-2 first coordinate uses the corrected z^2 coefficient
std::vector<HomPoly> translation_explicit(const QuadraticCongruence& s);
// plane formulas exactly as printed
std::vector<HomPoly> translation_explicit_verbatim(const QuadraticCongruence& s);
std::vector<HomPoly> translation_map(const QuadraticCongruence& s);

struct TranslationCheck {
    bool membership = false;  // Eq_{sigma(P)}(T(P)) = 0
    bool commutes = false;    // sigma(T(P)) ~ T(phi)(sigma(P))
};
TranslationCheck check_translation(const QuadraticCongruence& s, const std::vector<HomPoly>& t);

// criterion on parameters: type 1 a = b = 0, type 2 a = d = 0
bool is_linear_translation(const QuadraticCongruence& s);
// the displayed linear translations for those two cases
std::vector<HomPoly> linear_translation_display(const QuadraticCongruence& s, bool verbatim);

// T(tsigma)(T(sigma)(P)) ~ P on random points
bool transpose_inverse_law(const QuadraticCongruence& s, std::uint64_t seed, int samples);

struct DegenerateLocus {
    HomPoly det_form;
    HomPoly displayed;       // printed factor product
    HomPoly verbatim_product;   // printed product times L(sigma)
    HomPoly corrected_product;  // printed product times H(sigma) (type 2: squared quadratic factor)
    bool identically_degenerate = false;
    bool verbatim_ok = false;
    bool corrected_ok = false;
    bool radical_ok = false;
};

DegenerateLocus degenerate_locus(const QuadraticCongruence& s);

// geometric construction in standard coordinates
Matrix standard_phi(const Matrix& a, int m);
Matrix eta_matrix(int n);
Vec eta(const Isomorphism& phi, const Vec& o, const Vec& q);
// eta on the hyperplane x_{n+1} = 0 as forms in x_1..x_n, from the displayed formula
std::vector<HomPoly> eta_forms(const Isomorphism& phi, const Vec& o);
Vec standard_origin(int n);

Matrix dictionary_b_from_a(const Matrix& a, int n, int m);
Matrix dictionary_a_from_b(const Matrix& b, int n, int m);

struct GeometricBuild {
    QuadraticCongruence sigma;
    bool pullback_matches = false;   // B = E^T phi E
    bool eta_formula_matches = false;
    bool incidence_matches = false;  // eta(Q).phi(eta(P)) = Eq_{sigma(Q)}(P)
    bool transpose_matches = false;  // eta(P).phi(eta(Q)) = Eq_{tsigma(Q)}(P)
    bool same_orbit = false;
};

GeometricBuild geometric_build(const Matrix& phi, int n, int m);

}  // namespace quadcong
