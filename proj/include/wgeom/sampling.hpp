#pragma once

#include "wgeom/types.hpp"

#include <cstdint>
#include <random>

namespace wgeom {

/// Mix a base seed with a stream index; used to hand every oracle restart
/// (and every verify trial) its own reproducible generator.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

/// mt19937_64 with locale- and platform-independent floating-point draws.
/// The standard pins the raw engine sequence; the distributions here avoid
/// std::*_distribution, whose output differs between library vendors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Standard normal via the trigonometric Box-Muller transform.
  double normal() {
    const double u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log1p(-u)) * std::cos(2.0 * M_PI * v);
  }

  double exponential() { return -std::log1p(-uniform01()); }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

/// Squared coefficients uniform on the probability simplex (Dirichlet(1,..,1)).
Vector sample_squared_simplex(Eigen::Index n, Rng& rng);

/// Random normalized W state with squared coefficients uniform on the simplex.
WState sample_wstate(Eigen::Index n, Rng& rng);

/// Point on the constraint sphere sum cos^2 = 1 with nonnegative cosines:
/// normalized absolute Gaussian coordinates.
Vector sample_sphere_cosines(Eigen::Index n, Rng& rng);

/// Rejection-sample a unit vector inside the open duality region.
UnitVector sample_region_unit_vector(Eigen::Index n, Rng& rng);

/// One Haar-uniform single-qubit state per column.
Eigen::Matrix2Xcd sample_local_states(Eigen::Index n, Rng& rng);

}  // namespace wgeom
