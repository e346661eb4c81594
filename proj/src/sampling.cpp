#include "wgeom/sampling.hpp"

#include <cmath>

#include "wgeom/branch.hpp"

namespace wgeom {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over seed + golden-ratio stream offset
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Vector sample_squared_simplex(Eigen::Index n, Rng& rng) {
  Vector y(n);
  for (Eigen::Index k = 0; k < n; ++k) y[k] = rng.exponential();
  y /= y.sum();
  return y;
}

WState sample_wstate(Eigen::Index n, Rng& rng) {
  return make_wstate(Vector(sample_squared_simplex(n, rng).cwiseSqrt()), /*normalize=*/true);
}

Vector sample_sphere_cosines(Eigen::Index n, Rng& rng) {
  Vector x(n);
  for (Eigen::Index k = 0; k < n; ++k) x[k] = std::abs(rng.normal());
  x /= x.norm();
  return x;
}

UnitVector sample_region_unit_vector(Eigen::Index n, Rng& rng) {
  // For n = 2 every admissible vector maps to the equal-coefficient state
  // with g^2 = 1/2, so the highly entangled region is empty.
  if (n < 3)
    throw DomainError("sample_region_unit_vector: region is empty for n = " + std::to_string(n));
  const double bound = 1.0 / std::sqrt(2.0);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Vector x = sample_sphere_cosines(n, rng);
    double largest = 0.0;
    Eigen::Index arg = 0;
    for (Eigen::Index k = 0; k < n; ++k)
      if (x[k] > largest) {
        largest = x[k];
        arg = k;
      }
    bool ok = largest < 1.0 - 1e-9 && std::abs(largest - bound) > 1e-9;
    for (Eigen::Index k = 0; k < n && ok; ++k) {
      if (k == arg) continue;
      ok = x[k] > 1e-9 && x[k] < bound - 1e-9;
    }
    if (!ok) continue;
    // Drop the rare draw whose induced state lands inside the shared-class
    // tolerance band; such a vector would not round-trip through the duality.
    const Eigen::ArrayXd sin2t =
        2.0 * x.array() * ((1.0 - x.array()) * (1.0 + x.array())).sqrt();
    const EntanglementClass cls = classify(make_wstate(Vector(sin2t.matrix()), true));
    if (cls == EntanglementClass::HighlyEntangledSymmetric ||
        cls == EntanglementClass::HighlyEntangledAsymmetric)
      return UnitVector(std::move(x));
  }
  throw Error("sample_region_unit_vector: rejection sampling exhausted its budget");
}

Eigen::Matrix2Xcd sample_local_states(Eigen::Index n, Rng& rng) {
  Eigen::Matrix2Xcd locals(2, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Vector2cd u;
    u << std::complex<double>(rng.normal(), rng.normal()),
        std::complex<double>(rng.normal(), rng.normal());
    locals.col(k) = u / u.norm();
  }
  return locals;
}

}  // namespace wgeom
