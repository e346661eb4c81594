#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wgeom {

using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionTooSmall : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct AllZero : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DegenerateState : Error { using Error::Error; };
struct BracketFailure : Error { using Error::Error; };
struct BranchMismatch : Error { using Error::Error; };
struct InconsistentInputs : Error { using Error::Error; };
struct NotHighlyEntangled : Error { using Error::Error; };
struct RegionViolation : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Entanglement classes
// ---------------------------------------------------------------------------

enum class EntanglementClass {
  Product,
  SlightlyEntangled,
  Shared,
  HighlyEntangledSymmetric,
  HighlyEntangledAsymmetric,
};

std::string to_string(EntanglementClass c);

// ---------------------------------------------------------------------------
// WState
// ---------------------------------------------------------------------------

/// A single-excitation n-qubit state, held as nonnegative amplitudes.
/// Stored internally in ascending order; the permutation back to the caller's
/// order is kept so every derived quantity can be reported in user order.
class WState {
 public:
  Eigen::Index n() const { return sorted_.size(); }

  /// Amplitudes in ascending order, c_1 <= ... <= c_n.
  const Vector& coeffs() const { return sorted_; }

  /// Amplitudes in the order the caller supplied them.
  Vector user_coeffs() const { return to_user_order(sorted_); }

  double max_coeff() const { return sorted_[sorted_.size() - 1]; }
  double norm_sq() const { return norm_sq_; }
  Eigen::Index nonzero_count() const { return nonzero_; }

  /// Original index of the j-th sorted amplitude.
  Eigen::Index user_index(Eigen::Index sorted_pos) const {
    return user_index_[static_cast<std::size_t>(sorted_pos)];
  }

  /// Scatter a sorted-aligned vector back into user order.
  Vector to_user_order(const Vector& sorted_aligned) const;

  /// Gather a user-aligned vector into sorted order.
  Vector to_sorted_order(const Vector& user_aligned) const;

 private:
  friend WState make_wstate(const ComplexVector& raw, bool normalize);

  Vector sorted_;
  std::vector<Eigen::Index> user_index_;
  double norm_sq_ = 0.0;
  Eigen::Index nonzero_ = 0;
};

/// Build a WState from raw amplitudes. Phases are stripped entrywise (the
/// overlap is invariant under local phase redefinitions), amplitudes below
/// 1e-12 are flushed to exact zero, and the result is stably sorted.
/// With normalize=false the squared amplitudes must already sum to 1
/// within 1e-9.
WState make_wstate(const ComplexVector& raw, bool normalize);
WState make_wstate(const Vector& raw, bool normalize);

// ---------------------------------------------------------------------------
// ProductState
// ---------------------------------------------------------------------------

/// Candidate nearest product state: qubit k is sin(theta_k)|0> + e^{i phi} cos(theta_k)|1>.
/// Each local factor is unit-norm by construction; phi is canonically 0.
struct ProductState {
  Vector thetas;
  double phi = 0.0;

  ProductState(Vector t, double phase = 0.0);

  Eigen::Index n() const { return thetas.size(); }
};

// ---------------------------------------------------------------------------
// UnitVector
// ---------------------------------------------------------------------------

/// Euclidean dual of a highly entangled state: x_k = cos(theta_k).
struct UnitVector {
  Vector x;

  explicit UnitVector(Vector v);

  Eigen::Index n() const { return x.size(); }
};

// ---------------------------------------------------------------------------
// Overlap
// ---------------------------------------------------------------------------

/// <u_1...u_n|W_n> at phi = 0: sum_k c_k cos(theta_k) prod_{j!=k} sin(theta_j).
/// Coefficients are taken in user order so they pair with p.thetas.
double overlap_product_w(const ProductState& p, const WState& w);

namespace detail {

/// term_k = weight_k * prod_{j!=k} factor_j, summed over k, computed with
/// prefix/suffix products so zero factors stay exact.
template <typename D1, typename D2>
double sum_excluded_products(const Eigen::MatrixBase<D1>& weights,
                             const Eigen::MatrixBase<D2>& factors) {
  const Eigen::Index n = weights.size();
  Vector suffix(n + 1);
  suffix[n] = 1.0;
  for (Eigen::Index k = n - 1; k >= 0; --k) suffix[k] = suffix[k + 1] * factors[k];
  double prefix = 1.0;
  double total = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    total += weights[k] * prefix * suffix[k + 1];
    prefix *= factors[k];
  }
  return total;
}

}  // namespace detail

}  // namespace wgeom
