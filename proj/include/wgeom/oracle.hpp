#pragma once

#include "wgeom/types.hpp"

#include <complex>
#include <cstdint>
#include <functional>

namespace wgeom {

/// Column k holds the |0>,|1> amplitudes of qubit k (user order).
using LocalStates = Eigen::Matrix2Xcd;

struct OracleResult {
  double g_est = 0.0;
  LocalStates best_product;
  int restarts_used = 0;
  double converged_fraction = 0.0;
  std::uint64_t seed = 0;
};

struct HopmRun {
  double overlap = 0.0;
  LocalStates locals;
  bool converged = false;
  int sweeps = 0;
};

/// One alternating-update pass from a given initialization: each qubit in
/// turn is replaced by its normalized partial inner product with the W state,
/// which can only raise the overlap. Stops when the overlap changes by at
/// most 1e-13 per sweep. on_sweep, when set, observes the overlap after
/// every sweep.
HopmRun hopm_run_single(const WState& w, LocalStates locals, int max_iters,
                        const std::function<void(double)>& on_sweep = {});

/// Brute-force maximal product overlap: the best of `restarts` runs from
/// Haar-random product initializations. Fully deterministic in
/// (w, restarts, max_iters, seed); ties go to the lowest restart index.
OracleResult hopm_maximize(const WState& w, int restarts, int max_iters, std::uint64_t seed);

/// Exhaustive maximum of the real-angle overlap over the grid
/// theta_k in {0, pi/(2 res), ..., pi/2}^n. A lower bound on g within
/// O(1/res^2). Budget-guarded to n <= 4, res <= 200.
double grid_search(const WState& w, int resolution);

/// Dense 2^n inner product <u_1...u_n|W_n>. Budget-guarded to n <= 20.
std::complex<double> statevector_overlap(const LocalStates& locals, const WState& w);

/// Rotate each local state so its largest-modulus component is real
/// positive; makes products from independent restarts comparable.
LocalStates fix_local_phases(const LocalStates& locals);

}  // namespace wgeom
