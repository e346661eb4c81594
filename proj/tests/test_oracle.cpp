#include "wgeom/oracle.hpp"

#include "wgeom/measure.hpp"
#include "wgeom/sampling.hpp"

#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

using namespace wgeom;

namespace {

WState symmetric_state(Eigen::Index n) {
  return make_wstate(Vector(Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)))), true);
}

LocalStates real_locals(const Vector& thetas) {
  LocalStates locals(2, thetas.size());
  for (Eigen::Index k = 0; k < thetas.size(); ++k) {
    locals(0, k) = std::sin(thetas[k]);
    locals(1, k) = std::cos(thetas[k]);
  }
  return locals;
}

}  // namespace

TEST_CASE("hopm recovers the symmetric maximum") {
  const OracleResult res = hopm_maximize(symmetric_state(3), 50, 500, 7);
  CHECK(std::abs(res.g_est - 2.0 / 3.0) <= 1e-8);
  CHECK(res.restarts_used == 50);
  CHECK(res.seed == 7);
  CHECK(res.converged_fraction == 1.0);
}

TEST_CASE("hopm recovers the trivial maximum of a slightly entangled state") {
  Vector c(3);
  c << 0.3, 0.4, std::sqrt(0.75);
  const OracleResult res = hopm_maximize(make_wstate(c, false), 50, 500, 11);
  CHECK(std::abs(res.g_est - std::sqrt(0.75)) <= 1e-8);
}

TEST_CASE("hopm is exact on a basis state") {
  Vector c(2);
  c << 0.0, 1.0;
  const OracleResult res = hopm_maximize(make_wstate(c, false), 10, 200, 3);
  CHECK(std::abs(res.g_est - 1.0) <= 1e-12);
}

TEST_CASE("hopm is bit-reproducible in (state, restarts, iters, seed)") {
  Vector c(4);
  c << 0.3, 0.45, 0.5, std::sqrt(1.0 - 0.09 - 0.2025 - 0.25);
  const WState w = make_wstate(c, false);
  const OracleResult a = hopm_maximize(w, 20, 300, 12345);
  const OracleResult b = hopm_maximize(w, 20, 300, 12345);
  CHECK(a.g_est == b.g_est);
  CHECK((a.best_product - b.best_product).cwiseAbs().maxCoeff() == 0.0);

  const OracleResult other = hopm_maximize(w, 20, 300, 54321);
  CHECK(std::abs(other.g_est - a.g_est) <= 1e-9);  // same maximum, different path
}

TEST_CASE("the winning product has unit-norm local factors") {
  const OracleResult res = hopm_maximize(symmetric_state(4), 10, 300, 9);
  for (Eigen::Index k = 0; k < 4; ++k)
    CHECK(std::abs(res.best_product.col(k).norm() - 1.0) <= 1e-12);
  CHECK(std::abs(std::abs(statevector_overlap(res.best_product, symmetric_state(4))) -
                 res.g_est) <= 1e-12);
}

TEST_CASE("hopm validates its arguments") {
  const WState w = symmetric_state(3);
  CHECK_THROWS_AS(hopm_maximize(w, 0, 100, 1), DomainError);
  CHECK_THROWS_AS(hopm_maximize(w, 10, 0, 1), DomainError);
  CHECK_THROWS_AS(hopm_run_single(w, LocalStates::Zero(2, 4), 100), DimensionMismatch);
}

TEST_CASE("each sweep can only raise the overlap") {
  Rng rng(31);
  const WState w = sample_wstate(5, rng);
  std::vector<double> trace;
  const HopmRun run = hopm_run_single(w, sample_local_states(5, rng), 400,
                                      [&](double v) { trace.push_back(v); });
  REQUIRE(!trace.empty());
  for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] >= trace[i - 1] - 1e-15);
  CHECK(run.overlap == trace.back());
  CHECK(run.sweeps == static_cast<int>(trace.size()));
}

TEST_CASE("per-qubit phases do not change the converged overlap") {
  Rng rng(47);
  const WState w = sample_wstate(4, rng);
  const LocalStates init = sample_local_states(4, rng);
  LocalStates phased = init;
  for (Eigen::Index k = 0; k < 4; ++k)
    phased.col(k) *= std::polar(1.0, 0.3 + 0.7 * static_cast<double>(k));

  const HopmRun a = hopm_run_single(w, init, 500);
  const HopmRun b = hopm_run_single(w, phased, 500);
  CHECK(std::abs(a.overlap - b.overlap) <= 1e-10);
}

TEST_CASE("grid_search at resolution 1 returns the best basis overlap") {
  Vector c(3);
  c << 0.3, 0.4, std::sqrt(0.75);
  CHECK(grid_search(make_wstate(c, false), 1) == std::sqrt(0.75));
}

TEST_CASE("grid_search brackets the symmetric maximum from below") {
  const double g = 2.0 / 3.0;
  const double coarse = grid_search(symmetric_state(3), 25);
  const double fine = grid_search(symmetric_state(3), 100);
  CHECK(coarse <= g + 1e-12);
  CHECK(fine <= g + 1e-12);
  CHECK(fine >= coarse - 1e-12);  // refinement cannot lose ground on this grid
  CHECK(g - fine <= 1e-3);
}

TEST_CASE("grid_search enforces its budget") {
  CHECK_THROWS_AS(grid_search(symmetric_state(5), 10), TooLarge);
  CHECK_THROWS_AS(grid_search(symmetric_state(3), 201), TooLarge);
  CHECK_THROWS_AS(grid_search(symmetric_state(3), 0), DomainError);
}

TEST_CASE("statevector_overlap agrees with the closed-form overlap") {
  Rng rng(58);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.uniform01() * 9.0);
    const WState w = sample_wstate(n, rng);
    Vector thetas(n);
    for (Eigen::Index k = 0; k < n; ++k) thetas[k] = rng.uniform01() * M_PI / 2;
    const ProductState p(thetas, 0.0);
    const std::complex<double> dense = statevector_overlap(real_locals(thetas), w);
    CHECK(std::abs(dense.real() - overlap_product_w(p, w)) <= 1e-12);
    CHECK(std::abs(dense.imag()) <= 1e-15);
  }
}

TEST_CASE("statevector_overlap conjugates the product side") {
  Vector c(3);
  c << 0.2, 0.5, std::sqrt(1.0 - 0.04 - 0.25);
  const WState w = make_wstate(c, false);

  // qubit 1 excited with phase phi, the rest in |0>
  LocalStates locals = LocalStates::Zero(2, 3);
  locals(0, 0) = 1.0;
  locals(1, 1) = std::polar(1.0, 0.7);
  locals(0, 2) = 1.0;
  const std::complex<double> ov = statevector_overlap(locals, w);
  CHECK(std::abs(ov - c[1] * std::polar(1.0, -0.7)) <= 1e-15);

  // two excitations are orthogonal to the single-excitation sector
  LocalStates twoexc = LocalStates::Zero(2, 3);
  twoexc(1, 0) = 1.0;
  twoexc(1, 1) = 1.0;
  twoexc(0, 2) = 1.0;
  CHECK(std::abs(statevector_overlap(twoexc, w)) == 0.0);

  CHECK_THROWS_AS(statevector_overlap(LocalStates::Zero(2, 2), w), DimensionMismatch);
}

TEST_CASE("fix_local_phases yields a real positive leading component") {
  Rng rng(73);
  const LocalStates locals = sample_local_states(6, rng);
  const LocalStates fixed = fix_local_phases(locals);
  for (Eigen::Index k = 0; k < 6; ++k) {
    const Eigen::Index lead =
        std::abs(fixed(0, k)) >= std::abs(fixed(1, k)) ? 0 : 1;
    CHECK(fixed(lead, k).imag() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(fixed(lead, k).real() > 0.0);
    // phase fixing preserves each factor and every modulus
    CHECK(std::abs(std::abs(fixed(0, k)) - std::abs(locals(0, k))) <= 1e-15);
    CHECK(std::abs(fixed.col(k).norm() - 1.0) <= 1e-12);
  }
  // idempotent
  const LocalStates twice = fix_local_phases(fixed);
  CHECK((twice - fixed).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("the oracle lands on the analytic nearest product state") {
  Vector c(3);
  c << 0.2, 0.68, 0.70541;
  const WState w = make_wstate(c, true);
  const MeasureResult m = nearest_product(w);
  const OracleResult res = hopm_maximize(w, 50, 500, 21);

  CHECK(std::abs(res.g_est - m.g) <= 1e-7);
  const LocalStates fixed = fix_local_phases(res.best_product);
  for (Eigen::Index k = 0; k < 3; ++k) {
    CHECK(std::abs(std::abs(fixed(0, k)) - std::sin(m.nearest.thetas[k])) <= 1e-4);
    CHECK(std::abs(std::abs(fixed(1, k)) - std::cos(m.nearest.thetas[k])) <= 1e-4);
  }
}

TEST_CASE("hopm tracks the closed form across random states") {
  Rng rng(86);
  for (int i = 0; i < 10; ++i) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.uniform01() * 3.0);
    const WState w = sample_wstate(n, rng);
    const double g = nearest_product(w).g;
    const OracleResult res = hopm_maximize(w, 30, 500, split_seed(99, i));
    CHECK(std::abs(res.g_est - g) <= 1e-7);
    CHECK(res.g_est >= grid_search(w, 60) - 1e-12);
  }
}
