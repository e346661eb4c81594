#pragma once

#include "wgeom/branch.hpp"
#include "wgeom/types.hpp"

#include <optional>

namespace wgeom {

struct Diagnostics {
  double stationarity = 0.0;  // max_k || partial inner product - g u_k ||
  double constraint = 0.0;    // | sum cos^2 theta_k - 1 |
};

struct MeasureResult {
  double g = 0.0;
  double g_squared = 0.0;
  double e_g = 0.0;  // -2 ln g, in nats
  EntanglementClass cls = EntanglementClass::Product;
  BranchSolution branch;
  ProductState nearest;       // user coefficient order
  std::optional<UnitVector> dual;  // user order; absent on the trivial branch
  Diagnostics diagnostics;
};

/// Angles of the stationary product state for a solved branch:
/// cos^2 theta_k = (1 - sqrt(1 - c_k^2/r^2))/2 for k < n, with the opposite
/// sign on the last angle for the Minus branch. Angles are returned in user
/// coefficient order. Throws BranchMismatch on a Trivial solution.
ProductState thetas_from_r(const WState& w, const BranchSolution& sol);

/// g = 2 r sin(theta_1)...sin(theta_n), cross-checked against the r-free
/// form g^2 = prod y_k / sum y_k (1 - y_k) with y_k = sin^2 theta_k; the two
/// routes disagreeing beyond 1e-9 throws InconsistentInputs.
double g_from_thetas(const ProductState& p, double r);

/// Maximal product overlap, geometric measure and nearest product state for
/// any W state. Trivial classes take g = c_max with a basis nearest state;
/// highly entangled states go through solve_r.
MeasureResult nearest_product(const WState& w);

/// max_k of the Euclidean defect in the stationarity equations at (p, g).
double stationarity_residual(const ProductState& p, const WState& w, double g);

}  // namespace wgeom
