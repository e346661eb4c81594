#include "wgeom/measure.hpp"

#include <cmath>

namespace wgeom {

namespace {

constexpr double kRouteAgreementTol = 1e-9;

double geometric_measure(double g) {
  return g == 1.0 ? 0.0 : -2.0 * std::log(g);  // avoids -0 for product states
}

// Angle with cos^2 theta = (1 -+ s)/2 for s = sqrt(1 - (c/r)^2). Built from
// half-angle square roots rather than acos(-+s): near s = 1 the acos route
// amplifies rounding by r/c, while (1 - s)/2 rewritten as (c/r)^2/(2(1 + s))
// keeps full relative accuracy for both factors handed to atan2.
double half_acos(double c, double r, bool flipped) {
  const double s = detail::root_term(c, r);
  const double big = std::sqrt(0.5 * (1.0 + s));
  const double small = c / (r * std::sqrt(2.0 * (1.0 + s)));
  return flipped ? std::atan2(small, big) : std::atan2(big, small);
}

Vector sorted_thetas(const WState& w, const BranchSolution& sol) {
  const Eigen::Index n = w.n();
  const auto& c = w.coeffs();
  Vector thetas(n);
  for (Eigen::Index k = 0; k < n; ++k)
    thetas[k] = half_acos(c[k], sol.r, k == n - 1 && sol.branch == Branch::Minus);
  return thetas;
}

}  // namespace

ProductState thetas_from_r(const WState& w, const BranchSolution& sol) {
  if (sol.branch == Branch::Trivial)
    throw BranchMismatch("thetas_from_r: a trivial solution carries no angles");
  if (!(std::isfinite(sol.r) && sol.r >= w.max_coeff()))
    throw DomainError("thetas_from_r: r must be finite and >= c_n");
  return ProductState(w.to_user_order(sorted_thetas(w, sol)), 0.0);
}

double g_from_thetas(const ProductState& p, double r) {
  if (!(std::isfinite(r) && r > 0.0))
    throw DomainError("g_from_thetas: r must be finite and positive");

  const Eigen::ArrayXd sines = p.thetas.array().sin();
  const double g = 2.0 * r * sines.prod();

  const Eigen::ArrayXd y = sines.square();
  const double denom = (y * (1.0 - y)).sum();
  if (denom <= 0.0)
    throw InconsistentInputs("g_from_thetas: sum y_k (1 - y_k) is not positive");
  const double g_alt = std::sqrt(y.prod() / denom);
  if (std::abs(g - g_alt) > kRouteAgreementTol)
    throw InconsistentInputs("g_from_thetas: product form " + std::to_string(g) +
                             " and ratio form " + std::to_string(g_alt) +
                             " disagree; (p, r) is not a stationary pair");
  return g;
}

MeasureResult nearest_product(const WState& w) {
  const EntanglementClass cls = classify(w);
  const BranchSolution sol = solve_r(w);

  if (sol.branch != Branch::Trivial) {
    // Evaluate g over the sorted angles so the result is independent of the
    // order the caller listed the coefficients in; products of sines pick up
    // order-dependent rounding otherwise.
    const ProductState canonical(sorted_thetas(w, sol), 0.0);
    const double g = g_from_thetas(canonical, sol.r);
    ProductState p(w.to_user_order(canonical.thetas), 0.0);
    UnitVector dual(p.thetas.array().cos());

    Diagnostics diag;
    diag.stationarity = stationarity_residual(p, w, g);
    diag.constraint = std::abs(p.thetas.array().cos().square().sum() - 1.0);

    return MeasureResult{g,   g * g, geometric_measure(g), cls, sol, std::move(p),
                         std::move(dual), diag};
  }

  // Trivial regime: the overlap is the largest coefficient and the nearest
  // product state is the matching basis state.
  const Eigen::Index n = w.n();
  const double g = w.max_coeff();
  Vector thetas_sorted = Vector::Constant(n, M_PI / 2);
  thetas_sorted[n - 1] = 0.0;
  ProductState p(w.to_user_order(thetas_sorted), 0.0);

  Diagnostics diag;
  diag.stationarity = stationarity_residual(p, w, g);
  diag.constraint = std::abs(p.thetas.array().cos().square().sum() - 1.0);

  return MeasureResult{g,   g * g,        geometric_measure(g), cls,
                       sol, std::move(p), std::nullopt,         diag};
}

double stationarity_residual(const ProductState& p, const WState& w, double g) {
  if (p.n() != w.n())
    throw DimensionMismatch("stationarity_residual: dimension mismatch");
  const Eigen::Index n = w.n();
  const Vector c = w.user_coeffs();
  const Vector sines = p.thetas.array().sin();
  const Vector cosines = p.thetas.array().cos();

  Vector suffix(n + 1);
  suffix[n] = 1.0;
  for (Eigen::Index k = n - 1; k >= 0; --k) suffix[k] = suffix[k + 1] * sines[k];

  double worst = 0.0;
  double prefix = 1.0;
  Vector sub_weights(n - 1), sub_sines(n - 1);
  for (Eigen::Index k = 0; k < n; ++k) {
    // |1> component: c_k prod_{j!=k} sin(theta_j) should equal g cos(theta_k)
    const double v1 = c[k] * prefix * suffix[k + 1];
    // |0> component: sum_{l!=k} c_l cos(theta_l) prod_{j!=k,l} sin(theta_j)
    Eigen::Index m = 0;
    for (Eigen::Index l = 0; l < n; ++l) {
      if (l == k) continue;
      sub_weights[m] = c[l] * cosines[l];
      sub_sines[m] = sines[l];
      ++m;
    }
    const double v0 = detail::sum_excluded_products(sub_weights, sub_sines);
    worst = std::max(worst, std::hypot(v0 - g * sines[k], v1 - g * cosines[k]));
    prefix *= sines[k];
  }
  return worst;
}

}  // namespace wgeom
