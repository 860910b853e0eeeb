#pragma once

#include <string>
#include <vector>

#include "tspectral/spectral.hpp"
#include "tspectral/tensor.hpp"

namespace tspectral {

/// One checked inequality instance: lower <= value <= upper.
///
/// satisfied == (lower - tol <= value <= upper + tol) with
/// tol = 1e-8 * max(1, |value|).
struct BoundReport {
  double lower = 0.0;
  double value = 0.0;
  double upper = 0.0;
  double slack_lower = 0.0;  // value - lower
  double slack_upper = 0.0;  // upper - value
  bool satisfied = false;
  std::string context;
};

BoundReport make_report(double lower, double value, double upper, std::string context);

/// Uniform assertion tolerance of every bound check.
double bound_tolerance(double value);

/// y^T M_A y with y = unfold(X) and M_A = (bcirc(A) + bcirc(A)^T) / 2.
/// A is n x n x p real, X is n x 1 x p with ||unfold(X)||_2 = 1 (within 1e-10).
double rayleigh_value(const Tensor3& a, const Tensor3& x);

/// (bcirc(A) + bcirc(A)^H) / 2.
DenseMatrix symmetrized_bcirc(const Tensor3& a);

struct SymmetrizedBounds {
  double mu_min = 0.0;
  double mu_max = 0.0;
  double radius_symmetrized = 0.0;  // rho(M_A)
  double radius_tensor = 0.0;       // rho_T(A), over the whole bcirc spectrum
  /// One report per real T-eigenvalue: mu_min <= lambda <= mu_max.
  std::vector<BoundReport> eigenvalue_reports;
  /// 0 <= rho_T(A) <= rho(M_A).
  BoundReport radius_report;

  [[nodiscard]] bool satisfied() const;
};

SymmetrizedBounds symmetrized_bounds(const Tensor3& a);

/// Von Neumann trace bounds for Hermitian PSD A, B over the full sorted
/// spectra of length N = n*p:
///   sum_i lambda_i(A) lambda_{N-i+1}(B) <= tr(A*B) <= sum_i lambda_i(A) lambda_i(B).
BoundReport vn_trace_bounds(const Tensor3& a, const Tensor3& b);

struct HermitianTraceBounds {
  BoundReport report;
  double shift = 0.0;
  /// tr((A + sI) * (B + sI)) evaluated directly.
  double shifted_trace = 0.0;
  /// tr(A*B) + s (tr A + tr B) + N s^2.
  double shift_identity = 0.0;
  bool shift_identity_holds = false;  // agreement within 1e-9 relative
};

/// Same formulas as vn_trace_bounds for Hermitian (possibly indefinite) A, B.
/// The shift defaults to 1 + max(|lambda_min(A)|, |lambda_min(B)|).
HermitianTraceBounds hermitian_trace_bounds(const Tensor3& a, const Tensor3& b);
HermitianTraceBounds hermitian_trace_bounds(const Tensor3& a, const Tensor3& b, double shift);

/// lambda_min(B) tr(A)^2 / N <= tr(A*B*A) <= lambda_max(B) tr(A)^2 for PSD A, B.
BoundReport sandwich_bounds(const Tensor3& a, const Tensor3& b);

/// lambda_min(A) <= tr(A*B) / tr(B) <= lambda_max(A) for Hermitian A and PSD B
/// with tr(B) > 0.
BoundReport extremal_ratio_bounds(const Tensor3& a, const Tensor3& b);

enum class Extreme { min, max };

/// PSD B = X * X^H with tr(B) = 1 built from a bcirc eigenvector of A for its
/// smallest or largest eigenvalue, so that tr(A*B) equals that eigenvalue.
Tensor3 extremal_witness(const Tensor3& a, Extreme which);

struct RelaxedBounds {
  BoundReport report;
  /// |tr(A*B) - tr(Abar*B)|, Abar = (A + A^T) / 2.
  double symmetrization_residual = 0.0;
};

/// Bounds for symmetric (not necessarily PSD) B and arbitrary real A. The
/// containment is recorded in the report, never enforced.
RelaxedBounds symmetric_relax_bounds(const Tensor3& a, const Tensor3& b);

enum class KyFanSide { max, min };

struct KyFanResult {
  double value = 0.0;
  /// k x n x p optimizer with U * U^H = I_k.
  Tensor3 optimizer;
  /// ||U * U^H - I_k||_F
  double isometry_residual = 0.0;
  /// tr(U * H * U^H), which should reproduce `value`.
  double achieved = 0.0;
};

/// Extremal tr(U * H * U^H) over k x n x p partial isometries: the sum over
/// Fourier slices of each slice's top-k (or bottom-k) eigenvalues.
KyFanResult ky_fan_sum(const Tensor3& h, Index k, KyFanSide side);

}  // namespace tspectral
