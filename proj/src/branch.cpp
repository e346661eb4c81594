#include "wgeom/branch.hpp"

#include <cmath>

namespace wgeom {

namespace {

constexpr double kSharedTol = 1e-9;        // |c_n - r2| window treated as shared
constexpr double kBoundaryRelTol = 1e-12;  // |c_n - r1| window where branches coincide
constexpr int kMaxDoublings = 60;

double target_of(const WState& w) { return static_cast<double>(w.n()) - 2.0; }

void check_domain(const WState& w, double r, BranchFn variant) {
  const Eigen::Index n = w.n();
  const double bound = (variant == BranchFn::Zero) ? w.coeffs()[n - 2] : w.coeffs()[n - 1];
  if (!(r >= bound))
    throw DomainError("f_eval: r = " + std::to_string(r) + " below the lower bound " +
                      std::to_string(bound) + "; a radicand would be negative");
}

struct CurveEq {
  const WState* w;
  BranchFn variant;
  double target;

  double operator()(double r) const { return f_eval(r, *w, variant) - target; }
  double deriv(double r) const { return f_derivative(r, *w, variant); }
};

/// Bracketed bisection to width 1e-14*max(1,r), then a few guarded Newton
/// steps. Returns the iterate with the smallest |h| seen.
double refine_root(const CurveEq& h, double lo, double hi, double h_lo) {
  double best_r = lo;
  double best_abs = std::abs(h_lo);
  const bool lo_negative = h_lo < 0.0;

  auto consider = [&](double r, double value) {
    if (std::abs(value) < best_abs) {
      best_abs = std::abs(value);
      best_r = r;
    }
  };
  consider(hi, h(hi));

  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const double hm = h(mid);
    consider(mid, hm);
    if (hm == 0.0) return mid;
    if ((hm < 0.0) == lo_negative)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-14 * std::max(1.0, mid)) break;
  }

  double r = best_r;
  for (int i = 0; i < 4; ++i) {
    const double hv = h(r);
    consider(r, hv);
    const double dv = h.deriv(r);
    if (!std::isfinite(dv) || dv == 0.0) break;
    double next = r - hv / dv;
    if (!(next >= lo && next <= hi)) break;
    if (next == r) break;
    r = next;
  }
  consider(r, h(r));
  return best_r;
}

/// Expand [start, 2*start, 4*start, ...] until h changes sign. h_start is
/// h(start); want_positive selects the sign the expansion is looking for.
double expand_bracket(const CurveEq& h, double start, bool want_positive) {
  double hi = 2.0 * start;
  for (int i = 0; i < kMaxDoublings; ++i) {
    const double value = h(hi);
    if (want_positive ? (value > 0.0) : (value < 0.0)) return hi;
    hi *= 2.0;
  }
  throw BracketFailure("solve: no sign change of f - (n-2) within " +
                       std::to_string(kMaxDoublings) + " doublings from r = " +
                       std::to_string(start));
}

}  // namespace

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Plus: return "plus";
    case Branch::Minus: return "minus";
    case Branch::Trivial: return "trivial";
  }
  return "unknown";
}

double f_eval(double r, const WState& w, BranchFn variant) {
  check_domain(w, r, variant);
  const Eigen::Index n = w.n();
  const auto& c = w.coeffs();
  const double head = detail::sum_root_terms(c.head(n - 1), r);
  switch (variant) {
    case BranchFn::Zero: return head;
    case BranchFn::Plus: return head + detail::root_term(c[n - 1], r);
    case BranchFn::Minus: return head - detail::root_term(c[n - 1], r);
  }
  return head;
}

double f_derivative(double r, const WState& w, BranchFn variant) {
  check_domain(w, r, variant);
  const Eigen::Index n = w.n();
  const auto& c = w.coeffs();
  const double head = detail::sum_root_terms_deriv(c.head(n - 1), r);
  if (variant == BranchFn::Zero) return head;
  const double cn = c[n - 1];
  const double t = detail::root_term(cn, r);
  const double last = (t > 0.0) ? cn * cn / (r * r * r * t)
                                : std::numeric_limits<double>::infinity();
  return (variant == BranchFn::Plus) ? head + last : head - last;
}

CriticalValues r_crit(const WState& w) {
  if (w.nonzero_count() < 2)
    throw DegenerateState("r_crit: fewer than 2 nonzero coefficients, f0 is constant");

  const Eigen::Index n = w.n();
  const auto& c = w.coeffs();
  const double r2 = std::sqrt(c.head(n - 1).squaredNorm());

  const CurveEq h{&w, BranchFn::Zero, target_of(w)};
  const double lo = c[n - 2];
  const double h_lo = h(lo);
  double r1;
  if (h_lo >= 0.0) {
    // f0 already at or past n-2 at its left endpoint (n = 2, or heavy ties).
    r1 = lo;
  } else {
    const double hi = expand_bracket(h, lo, /*want_positive=*/true);
    r1 = refine_root(h, lo, hi, h_lo);
  }
  return {r1, r2};
}

EntanglementClass classify(const WState& w) {
  if (w.nonzero_count() == 1) return EntanglementClass::Product;
  const auto [r1, r2] = r_crit(w);
  const double cn = w.max_coeff();
  if (std::abs(cn - r2) <= kSharedTol) return EntanglementClass::Shared;
  if (cn > r2) return EntanglementClass::SlightlyEntangled;
  if (cn <= r1) return EntanglementClass::HighlyEntangledSymmetric;
  return EntanglementClass::HighlyEntangledAsymmetric;
}

BranchSolution solve_branch(const WState& w, Branch branch) {
  BranchSolution sol;
  sol.branch = branch;
  const Eigen::Index n = w.n();
  sol.r2 = std::sqrt(w.coeffs().head(n - 1).squaredNorm());
  if (branch == Branch::Trivial) return sol;

  const auto [r1, r2] = r_crit(w);
  sol.r1 = r1;
  sol.r2 = r2;

  const double cn = w.max_coeff();
  const CurveEq h{&w, branch == Branch::Plus ? BranchFn::Plus : BranchFn::Minus, target_of(w)};
  const double h_cn = h(cn);

  // f+ rises from f0(c_n), f- falls from it; if the sign at c_n already
  // matches the far side, the root has collapsed onto the endpoint. The
  // tolerance makes both branches collapse together at c_n = r1, where the
  // exact root sits at the endpoint and theta_n = pi/4.
  constexpr double kCollapseTol = 1e-12;
  const bool collapsed =
      (branch == Branch::Plus) ? (h_cn >= -kCollapseTol) : (h_cn <= kCollapseTol);
  if (collapsed) {
    sol.r = cn;
    sol.residual = std::abs(h_cn);
    return sol;
  }

  const double hi = expand_bracket(h, cn, /*want_positive=*/branch == Branch::Plus);
  sol.r = refine_root(h, cn, hi, h_cn);
  sol.residual = std::abs(h(sol.r));
  return sol;
}

BranchSolution solve_r(const WState& w) {
  const Eigen::Index n = w.n();
  if (w.nonzero_count() < 2) {
    BranchSolution sol;
    sol.r2 = std::sqrt(w.coeffs().head(n - 1).squaredNorm());
    return sol;
  }

  const auto [r1, r2] = r_crit(w);
  const double cn = w.max_coeff();

  if (std::abs(cn - r2) <= kSharedTol || cn > r2) {
    BranchSolution sol;
    sol.r1 = r1;
    sol.r2 = r2;
    return sol;
  }

  // On the c_n = r1 boundary both equations share their root; Plus is the
  // canonical report there.
  const bool on_boundary = std::abs(cn - r1) <= kBoundaryRelTol * std::max(1.0, r1);
  const Branch branch = (cn <= r1 || on_boundary) ? Branch::Plus : Branch::Minus;
  return solve_branch(w, branch);
}

std::vector<CurveRow> sample_branch_curves(const WState& w, double r_min, double r_max,
                                           int samples) {
  if (samples < 2) throw DomainError("sample_branch_curves: need samples >= 2");
  if (!(r_min >= w.max_coeff()))
    throw DomainError("sample_branch_curves: r_min below the largest coefficient");
  if (!(r_max >= r_min)) throw DomainError("sample_branch_curves: r_max below r_min");

  const double target = target_of(w);
  std::vector<CurveRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  const double step = (r_max - r_min) / static_cast<double>(samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double r = (i == samples - 1) ? r_max : r_min + step * static_cast<double>(i);
    rows.push_back({r, f_eval(r, w, BranchFn::Plus), f_eval(r, w, BranchFn::Minus), target});
  }
  return rows;
}

}  // namespace wgeom
