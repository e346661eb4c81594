#include "wgeom/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wgeom {

namespace {
constexpr double kZeroFlush = 1e-12;
constexpr double kNormTol = 1e-9;
}  // namespace

std::string to_string(EntanglementClass c) {
  switch (c) {
    case EntanglementClass::Product: return "product";
    case EntanglementClass::SlightlyEntangled: return "slightly_entangled";
    case EntanglementClass::Shared: return "shared";
    case EntanglementClass::HighlyEntangledSymmetric: return "highly_entangled_symmetric";
    case EntanglementClass::HighlyEntangledAsymmetric: return "highly_entangled_asymmetric";
  }
  return "unknown";
}

Vector WState::to_user_order(const Vector& sorted_aligned) const {
  Vector out(sorted_aligned.size());
  for (Eigen::Index j = 0; j < sorted_aligned.size(); ++j)
    out[user_index_[static_cast<std::size_t>(j)]] = sorted_aligned[j];
  return out;
}

Vector WState::to_sorted_order(const Vector& user_aligned) const {
  Vector out(user_aligned.size());
  for (Eigen::Index j = 0; j < user_aligned.size(); ++j)
    out[j] = user_aligned[user_index_[static_cast<std::size_t>(j)]];
  return out;
}

WState make_wstate(const ComplexVector& raw, bool normalize) {
  const Eigen::Index n = raw.size();
  if (n < 2)
    throw DimensionTooSmall("make_wstate: need at least 2 qubits, got " + std::to_string(n));

  Vector moduli = raw.cwiseAbs();
  const double sum_sq = moduli.squaredNorm();
  if (sum_sq == 0.0) throw AllZero("make_wstate: all coefficients are zero");

  if (normalize) {
    moduli /= std::sqrt(sum_sq);
  } else if (std::abs(sum_sq - 1.0) > kNormTol) {
    throw NotNormalized("make_wstate: squared coefficients sum to " + std::to_string(sum_sq) +
                        "; pass normalize=true or supply a unit-norm state");
  }

  for (Eigen::Index k = 0; k < n; ++k)
    if (moduli[k] < kZeroFlush) moduli[k] = 0.0;
  if (moduli.maxCoeff() == 0.0) throw AllZero("make_wstate: all coefficients are zero");

  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return moduli[a] < moduli[b]; });

  WState w;
  w.sorted_.resize(n);
  w.user_index_.resize(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    w.sorted_[j] = moduli[idx[static_cast<std::size_t>(j)]];
    w.user_index_[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j)];
  }
  w.norm_sq_ = w.sorted_.squaredNorm();
  w.nonzero_ = (w.sorted_.array() > 0.0).count();
  return w;
}

WState make_wstate(const Vector& raw, bool normalize) {
  return make_wstate(raw.cast<std::complex<double>>().eval(), normalize);
}

ProductState::ProductState(Vector t, double phase) : thetas(std::move(t)), phi(phase) {
  if (thetas.size() < 2)
    throw DimensionTooSmall("ProductState: need at least 2 qubits");
  for (Eigen::Index k = 0; k < thetas.size(); ++k)
    if (!(thetas[k] >= 0.0 && thetas[k] <= M_PI / 2 + 1e-15))
      throw DomainError("ProductState: theta_" + std::to_string(k) + " outside [0, pi/2]");
}

UnitVector::UnitVector(Vector v) : x(std::move(v)) {
  if (x.size() < 2) throw DimensionTooSmall("UnitVector: need dimension >= 2");
  if (std::abs(x.squaredNorm() - 1.0) > 1e-9)
    throw RegionViolation("UnitVector: squared components sum to " +
                          std::to_string(x.squaredNorm()) + ", not 1");
  for (Eigen::Index k = 0; k < x.size(); ++k)
    if (x[k] < 0.0 || x[k] > 1.0)
      throw RegionViolation("UnitVector: component " + std::to_string(k) +
                            " outside [0, 1]; direction cosines required");
}

double overlap_product_w(const ProductState& p, const WState& w) {
  if (p.n() != w.n())
    throw DimensionMismatch("overlap_product_w: product state has " + std::to_string(p.n()) +
                            " qubits, W state has " + std::to_string(w.n()));
  const Vector c = w.user_coeffs();
  const Vector weights = c.array() * p.thetas.array().cos();
  const Vector sines = p.thetas.array().sin();
  return detail::sum_excluded_products(weights, sines);
}

}  // namespace wgeom
