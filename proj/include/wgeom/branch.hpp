#pragma once

#include "wgeom/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace wgeom {

/// Which branch equation a solution satisfies. Trivial covers the regime
/// where only the basis-state stationary points exist (g equals the largest
/// coefficient) and carries r = +infinity as a sentinel.
enum class Branch { Plus, Minus, Trivial };

/// Left-hand-side selector for the constraint curves:
///   Zero : f0(r)  = sum_{k<n} sqrt(1 - c_k^2/r^2)
///   Plus : f+(r)  = f0(r) + sqrt(1 - c_n^2/r^2)
///   Minus: f-(r)  = f0(r) - sqrt(1 - c_n^2/r^2)
enum class BranchFn { Zero, Plus, Minus };

std::string to_string(Branch b);

struct BranchSolution {
  Branch branch = Branch::Trivial;
  double r = std::numeric_limits<double>::infinity();
  double r1 = std::numeric_limits<double>::quiet_NaN();
  double r2 = 0.0;
  double residual = 0.0;  // |f_branch(r) - (n-2)|
};

namespace detail {

/// sqrt(1 - c^2/r^2) computed as sqrt((r-c)(r+c))/r; the difference form
/// keeps full relative accuracy when r approaches c. Clamped to 1 so that
/// rounding can never push the value outside the domain of acos.
inline double root_term(double c, double r) {
  if (c == 0.0) return 1.0;
  return std::min(1.0, std::sqrt((r - c) * (r + c)) / r);
}

template <typename Derived>
double sum_root_terms(const Eigen::MatrixBase<Derived>& coeffs, double r) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) s += root_term(coeffs[k], r);
  return s;
}

/// d/dr of a sum of root terms: sum c_k^2 / (r^3 sqrt(1 - c_k^2/r^2)).
template <typename Derived>
double sum_root_terms_deriv(const Eigen::MatrixBase<Derived>& coeffs, double r) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    const double t = root_term(coeffs[k], r);
    if (t > 0.0) s += coeffs[k] * coeffs[k] / (r * r * r * t);
  }
  return s;
}

}  // namespace detail

/// Evaluate f0, f+ or f- at r. Requires r >= c_{n-1} for Zero and r >= c_n
/// for Plus/Minus, otherwise a radicand goes negative and DomainError is thrown.
double f_eval(double r, const WState& w, BranchFn variant);

/// Analytic derivative of the selected curve at r (defined where every
/// radicand is strictly positive).
double f_derivative(double r, const WState& w, BranchFn variant);

/// Critical values of the largest coefficient: r1 solves f0(r1) = n-2,
/// r2^2 = c_1^2 + ... + c_{n-1}^2. Requires at least two nonzero coefficients.
struct CriticalValues {
  double r1;
  double r2;
};
CriticalValues r_crit(const WState& w);

EntanglementClass classify(const WState& w);

/// Solve f_branch(r) = n-2 for one explicitly chosen branch. Exposed for
/// boundary diagnostics (at c_n = r1 the two branches share their root);
/// most callers want solve_r, which picks the branch from the class.
BranchSolution solve_branch(const WState& w, Branch branch);

/// Full dispatch: Plus when c_n <= r1, Minus when r1 < c_n < r2 (Plus on the
/// r1 boundary within 1e-12 relative, where both roots coincide), Trivial
/// with r = +inf for product, shared and slightly entangled states.
BranchSolution solve_r(const WState& w);

struct CurveRow {
  double r;
  double f_plus;
  double f_minus;
  double target;  // n - 2
};

/// Uniformly sample f+ and f- on [r_min, r_max]; the raw data behind the
/// curves CLI subcommand. Requires r_min >= c_n and samples >= 2.
std::vector<CurveRow> sample_branch_curves(const WState& w, double r_min, double r_max,
                                           int samples);

}  // namespace wgeom
