#pragma once

#include "quadcong/hompoly.hpp"
#include "quadcong/matrix.hpp"

#include <vector>

namespace quadcong {

// phi : W -> W*, stored by its matrix so that (u, v) = u . phi(v) = u^T M v
class Isomorphism {
public:
    explicit Isomorphism(Matrix m);
    const Matrix& matrix() const { return m_; }
    int dim() const { return m_.rows(); }
    Matrix sym() const { return sym_part(m_); }
    Matrix antisym() const { return antisym_part(m_); }
    // phi.g = g^T phi g
    Isomorphism act(const Matrix& g) const;

private:
    Matrix m_;
};

struct Quadric {
    int ambient_dim = 0;
    HomPoly equation;
    Matrix gram;
    int rank = 0;
};

Quadric quadric_from_gram(const Matrix& gram);
Quadric quadric_from_equation(const HomPoly& eq);
// symmetric matrix G with eq(x) = x^T G x
Matrix gram_of(const HomPoly& eq);

struct LinearSubspace {
    int ambient_dim = 0;
    std::vector<Vec> generators;
    int dim() const { return static_cast<int>(generators.size()); }
};

LinearSubspace span(int ambient_dim, const std::vector<Vec>& vectors);
bool operator==(const LinearSubspace& a, const LinearSubspace& b);
// hyperplane {y : f . y = 0}
LinearSubspace hyperplane(const Vec& f);

// ^t phi^{-1} phi
Matrix translation_of(const Isomorphism& phi);
Quadric quadric_of(const Isomorphism& phi);

enum class Side { Left, Right };
// Right: {y : x.phi(y) = 0 for every generator x}; Left: {y : y.phi(x) = 0}
LinearSubspace perp(const Isomorphism& phi, const LinearSubspace& x, Side side);

struct FixedPointReport {
    bool images_proportional = false;  // phi(P) ~ tphi(P)
    bool perps_equal = false;          // P^perp = ^perp P
    bool fixed_by_translation = false; // T(phi)(P) ~ P
    bool tangent_is_perp = false;      // T_P Q(phi) = P^perp
    bool agree() const {
        return images_proportional == perps_equal && perps_equal == fixed_by_translation &&
               fixed_by_translation == tangent_is_perp;
    }
};

FixedPointReport smooth_fixed_point_check(const Isomorphism& phi, const Vec& p);

}  // namespace quadcong
