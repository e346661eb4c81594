#include "wgeom/duality.hpp"

#include "wgeom/branch.hpp"
#include "wgeom/measure.hpp"

#include <algorithm>
#include <cmath>

namespace wgeom {

namespace {

constexpr double kRegionTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_region(const Vector& x) {
  Vector xs = x;
  std::sort(xs.begin(), xs.end());
  const Eigen::Index n = xs.size();
  // No 2-qubit state is highly entangled, so the admissible region is empty.
  if (n < 3)
    throw RegionViolation("unit_vector_to_w: no highly entangled states exist for n = " +
                          std::to_string(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    if (xs[k] <= kRegionTol)
      throw RegionViolation("unit_vector_to_w: component " + std::to_string(xs[k]) +
                            " is at or below the x > 0 boundary");
    const double upper = (k < n - 1) ? kInvSqrt2 : 1.0;
    if (xs[k] >= upper - kRegionTol)
      throw RegionViolation("unit_vector_to_w: component " + std::to_string(xs[k]) +
                            " is at or above its open-region bound");
  }
  // The largest component crossing 1/sqrt(2) switches branch; the point on
  // the switch itself is excluded.
  if (std::abs(xs[n - 1] - kInvSqrt2) <= kRegionTol)
    throw RegionViolation("unit_vector_to_w: largest component sits on the branch boundary");
}

}  // namespace

UnitVector w_to_unit_vector(const WState& w) {
  const EntanglementClass cls = classify(w);
  if (cls != EntanglementClass::HighlyEntangledSymmetric &&
      cls != EntanglementClass::HighlyEntangledAsymmetric)
    throw NotHighlyEntangled("w_to_unit_vector: state is " + to_string(cls) +
                             "; the duality holds for highly entangled states only");
  const ProductState p = thetas_from_r(w, solve_r(w));
  return UnitVector(p.thetas.array().cos());
}

WState unit_vector_to_w(const UnitVector& x) {
  if (std::abs(x.x.squaredNorm() - 1.0) > 1e-9)
    throw RegionViolation("unit_vector_to_w: x is not unit-norm");
  check_region(x.x);

  const Eigen::ArrayXd cosines = x.x.array();
  const Eigen::ArrayXd sines = ((1.0 - cosines) * (1.0 + cosines)).sqrt();
  const Eigen::ArrayXd sin2t = 2.0 * sines * cosines;
  const double r = 1.0 / std::sqrt(sin2t.square().sum());
  return make_wstate(Vector(r * sin2t), /*normalize=*/false);
}

ProductState unit_vector_to_product(const UnitVector& x) {
  if (std::abs(x.x.squaredNorm() - 1.0) > 1e-9)
    throw RegionViolation("unit_vector_to_product: x is not unit-norm");
  return ProductState(x.x.array().acos(), 0.0);
}

}  // namespace wgeom
