#include "wgeom/oracle.hpp"

#include "wgeom/sampling.hpp"

#include <cmath>

namespace wgeom {

namespace {

constexpr double kSweepTol = 1e-13;

using Complex = std::complex<double>;

/// |<u_1...u_n|W>| for the current locals: |sum_l c_l conj(b_l) prod_{j!=l} conj(a_j)|.
double overlap_modulus(const Vector& c, const LocalStates& locals) {
  const Eigen::Index n = c.size();
  Eigen::VectorXcd a = locals.row(0).conjugate();
  Eigen::VectorXcd suffix(n + 1);
  suffix[n] = Complex(1.0, 0.0);
  for (Eigen::Index k = n - 1; k >= 0; --k) suffix[k] = suffix[k + 1] * a[k];
  Complex total(0.0, 0.0);
  Complex prefix(1.0, 0.0);
  for (Eigen::Index l = 0; l < n; ++l) {
    total += c[l] * std::conj(locals(1, l)) * prefix * suffix[l + 1];
    prefix *= a[l];
  }
  return std::abs(total);
}

}  // namespace

HopmRun hopm_run_single(const WState& w, LocalStates locals, int max_iters,
                        const std::function<void(double)>& on_sweep) {
  if (locals.cols() != w.n())
    throw DimensionMismatch("hopm_run_single: initialization has wrong qubit count");
  if (max_iters < 1) throw DomainError("hopm_run_single: max_iters must be >= 1");

  const Eigen::Index n = w.n();
  const Vector c = w.user_coeffs();

  HopmRun run;
  double prev = overlap_modulus(c, locals);
  for (int sweep = 0; sweep < max_iters; ++sweep) {
    for (Eigen::Index k = 0; k < n; ++k) {
      // Partial inner product over every qubit but k, as a ket in slot k.
      Complex v1(1.0, 0.0);
      for (Eigen::Index j = 0; j < n; ++j)
        if (j != k) v1 *= std::conj(locals(0, j));
      Complex v0(0.0, 0.0);
      for (Eigen::Index l = 0; l < n; ++l) {
        if (l == k) continue;
        Complex p = std::conj(locals(1, l)) * c[l];
        for (Eigen::Index j = 0; j < n; ++j)
          if (j != k && j != l) p *= std::conj(locals(0, j));
        v0 += p;
      }
      v1 *= c[k];
      const double norm = std::sqrt(std::norm(v0) + std::norm(v1));
      if (norm > 1e-300) {
        locals(0, k) = v0 / norm;
        locals(1, k) = v1 / norm;
      }
    }
    const double cur = overlap_modulus(c, locals);
    run.sweeps = sweep + 1;
    if (on_sweep) on_sweep(cur);
    if (std::abs(cur - prev) <= kSweepTol) {
      run.converged = true;
      prev = cur;
      break;
    }
    prev = cur;
  }
  run.overlap = prev;
  run.locals = std::move(locals);
  return run;
}

OracleResult hopm_maximize(const WState& w, int restarts, int max_iters, std::uint64_t seed) {
  if (restarts < 1) throw DomainError("hopm_maximize: restarts must be >= 1");
  if (max_iters < 1) throw DomainError("hopm_maximize: max_iters must be >= 1");

  OracleResult result;
  result.restarts_used = restarts;
  result.seed = seed;

  int converged = 0;
  for (int i = 0; i < restarts; ++i) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    HopmRun run = hopm_run_single(w, sample_local_states(w.n(), rng), max_iters);
    if (run.converged) ++converged;
    if (run.overlap > result.g_est) {
      result.g_est = run.overlap;
      result.best_product = std::move(run.locals);
    }
  }
  result.converged_fraction = static_cast<double>(converged) / static_cast<double>(restarts);
  return result;
}

double grid_search(const WState& w, int resolution) {
  const Eigen::Index n = w.n();
  if (n > 4) throw TooLarge("grid_search: n > 4 exceeds the exhaustive budget");
  if (resolution > 200) throw TooLarge("grid_search: resolution > 200 exceeds the budget");
  if (resolution < 1) throw DomainError("grid_search: resolution must be >= 1");

  const Vector c = w.user_coeffs();
  const int points = resolution + 1;
  Vector sin_t(points), cos_t(points);
  for (int i = 0; i < points; ++i) {
    const double theta = (M_PI / 2) * static_cast<double>(i) / static_cast<double>(resolution);
    sin_t[i] = std::sin(theta);
    cos_t[i] = std::cos(theta);
  }

  // Running pair per axis: P = prod sin, Q = sum_k c_k cos prod_{j!=k} sin.
  double best = 0.0;
  if (n == 2) {
    for (int i0 = 0; i0 < points; ++i0) {
      const double p0 = sin_t[i0], q0 = c[0] * cos_t[i0];
      for (int i1 = 0; i1 < points; ++i1)
        best = std::max(best, q0 * sin_t[i1] + c[1] * cos_t[i1] * p0);
    }
  } else if (n == 3) {
    for (int i0 = 0; i0 < points; ++i0) {
      const double p0 = sin_t[i0], q0 = c[0] * cos_t[i0];
      for (int i1 = 0; i1 < points; ++i1) {
        const double p1 = p0 * sin_t[i1];
        const double q1 = q0 * sin_t[i1] + c[1] * cos_t[i1] * p0;
        for (int i2 = 0; i2 < points; ++i2)
          best = std::max(best, q1 * sin_t[i2] + c[2] * cos_t[i2] * p1);
      }
    }
  } else {
    for (int i0 = 0; i0 < points; ++i0) {
      const double p0 = sin_t[i0], q0 = c[0] * cos_t[i0];
      for (int i1 = 0; i1 < points; ++i1) {
        const double p1 = p0 * sin_t[i1];
        const double q1 = q0 * sin_t[i1] + c[1] * cos_t[i1] * p0;
        for (int i2 = 0; i2 < points; ++i2) {
          const double p2 = p1 * sin_t[i2];
          const double q2 = q1 * sin_t[i2] + c[2] * cos_t[i2] * p1;
          for (int i3 = 0; i3 < points; ++i3)
            best = std::max(best, q2 * sin_t[i3] + c[3] * cos_t[i3] * p2);
        }
      }
    }
  }
  return best;
}

std::complex<double> statevector_overlap(const LocalStates& locals, const WState& w) {
  const Eigen::Index n = w.n();
  if (locals.cols() != n)
    throw DimensionMismatch("statevector_overlap: qubit count mismatch");
  if (n > 20) throw TooLarge("statevector_overlap: n > 20 exceeds the dense budget");

  const Vector c = w.user_coeffs();
  const std::size_t dim = std::size_t{1} << n;

  Eigen::VectorXcd wvec = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  for (Eigen::Index k = 0; k < n; ++k)
    wvec[static_cast<Eigen::Index>(std::size_t{1} << (n - 1 - k))] = c[k];

  Eigen::VectorXcd product(static_cast<Eigen::Index>(dim));
  for (std::size_t m = 0; m < dim; ++m) {
    Complex amp(1.0, 0.0);
    for (Eigen::Index k = 0; k < n; ++k) {
      const std::size_t bit = (m >> (n - 1 - k)) & 1u;
      amp *= locals(static_cast<Eigen::Index>(bit), k);
    }
    product[static_cast<Eigen::Index>(m)] = amp;
  }
  return product.dot(wvec);  // Eigen's dot conjugates the left operand
}

LocalStates fix_local_phases(const LocalStates& locals) {
  LocalStates fixed = locals;
  for (Eigen::Index k = 0; k < fixed.cols(); ++k) {
    const Eigen::Index lead = std::abs(fixed(0, k)) >= std::abs(fixed(1, k)) ? 0 : 1;
    const double mag = std::abs(fixed(lead, k));
    if (mag > 0.0) fixed.col(k) *= std::conj(fixed(lead, k)) / mag;
  }
  return fixed;
}

}  // namespace wgeom
