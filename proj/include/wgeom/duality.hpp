#pragma once

#include "wgeom/types.hpp"

namespace wgeom {

/// Dual direction cosines x_k = cos(theta_k) of the nearest product state,
/// in user coefficient order. Only highly entangled states have this dual;
/// anything else throws NotHighlyEntangled.
UnitVector w_to_unit_vector(const WState& w);

/// Inverse map: theta_k = arccos(x_k), r^2 = 1 / sum sin^2(2 theta_k),
/// c_k = r sin(2 theta_k). x must be unit-norm and lie strictly inside the
/// admissible region (sorted ascending): 0 < x_k < 1/sqrt(2) for k < n and
/// 0 < x_n < 1 with x_n != 1/sqrt(2). Boundary points within 1e-12 are
/// rejected with RegionViolation.
WState unit_vector_to_w(const UnitVector& x);

/// theta_k = arccos(x_k) at canonical phase 0. Requires only unit norm.
ProductState unit_vector_to_product(const UnitVector& x);

}  // namespace wgeom
