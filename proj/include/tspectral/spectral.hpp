#pragma once

#include <string>
#include <vector>

#include "tspectral/tensor.hpp"
#include "tspectral/transform.hpp"

namespace tspectral {

/// Relative tolerances shared by the structural checks.
namespace tolerance {
/// ||A - A^H||_F <= hermitian * (1 + ||A||_F)
inline constexpr double hermitian = 1e-10;
/// Eigenvalues >= -psd * max(1, lambda_max) count as non-negative (and are
/// clamped to zero before a square root).
inline constexpr double psd = 1e-9;
/// Eigenvalues must exceed pd * max(1, lambda_max) for log and negative powers.
inline constexpr double pd = 1e-12;
/// Imaginary parts of Hermitian spectra up to this are zeroed.
inline constexpr double real_spectrum = 1e-9;
}  // namespace tolerance

/// The n*p eigenvalues of bcirc(A), sorted by descending real part, then
/// descending imaginary part, ties broken by ascending Fourier-slice index.
///
/// Only the real members are T-eigenvalues in the strict sense (A*X = lambda*X
/// with a real lambda); the full bcirc spectrum is kept because the trace
/// bounds are stated over it.
struct Spectrum {
  std::vector<Complex> values;
  /// Fourier slice each value came from; -1 when computed from dense bcirc.
  std::vector<Index> slice;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] std::vector<double> real_values() const;
  [[nodiscard]] double max_real() const { return values.front().real(); }
  [[nodiscard]] double min_real() const { return values.back().real(); }
  [[nodiscard]] double spectral_radius() const;
};

/// Fourier path: union of the eigenvalues of the Fourier slices.
Spectrum t_eigenvalues(const Tensor3& a);

/// Oracle path: eigenvalues of the dense bcirc(A) matrix.
Spectrum t_eigenvalues_dense(const Tensor3& a);

struct HermitianCheck {
  bool hermitian = false;
  double residual = 0.0;   // ||A - A^H||_F
  double tolerance = 0.0;  // 1e-10 * (1 + ||A||_F)
};

/// Requires square slices.
HermitianCheck is_hermitian(const Tensor3& a);

struct DefinitenessCheck {
  bool holds = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double threshold = 0.0;
};

/// min eigenvalue >= -1e-9 * max(1, lambda_max). PreconditionError unless Hermitian.
DefinitenessCheck is_psd(const Tensor3& a);

/// min eigenvalue > 1e-12 * max(1, lambda_max). PreconditionError unless Hermitian.
DefinitenessCheck is_pd(const Tensor3& a);

/// Per-Fourier-slice eigendecomposition of a Hermitian tensor.
///
/// Slice k satisfies A_hat(k) = vectors[k] * diag(values[k]) * vectors[k]^H
/// with values sorted descending. For real input the decompositions of
/// mirrored slices are exact conjugates, so anything rebuilt from them
/// transforms back to a real tensor.
struct FourierEig {
  Index n = 0;
  bool real_input = false;
  std::vector<Eigen::VectorXd> values;
  std::vector<DenseMatrix> vectors;

  [[nodiscard]] Index tubes() const noexcept { return static_cast<Index>(values.size()); }
  [[nodiscard]] double max_eigenvalue() const;
  [[nodiscard]] double min_eigenvalue() const;
};

/// PreconditionError unless `a` is Hermitian.
FourierEig fourier_hermitian_eig(const Tensor3& a);

/// Q * L * Q^H with Q unitary and L f-diagonal with real diagonal tubes.
struct EigFactors {
  Tensor3 Q;
  Tensor3 L;
};

EigFactors hermitian_eig(const Tensor3& a);

/// A = U * S * V^H with U (m x m x p), S (m x n x p) f-diagonal, V (n x n x p).
struct TSvdFactors {
  Tensor3 U;
  Tensor3 S;
  Tensor3 V;
};

/// Hermitian PSD input reuses the eigendecomposition (U = V = Q, S = L).
TSvdFactors t_svd(const Tensor3& a);

/// Singular values of bcirc(A), descending (per-slice singular values pooled).
std::vector<double> t_singular_values(const Tensor3& a);

/// Scalar function applied to the spectrum of a Hermitian tensor.
struct TensorFunction {
  enum class Kind { sqrt, log, pow, inv_sqrt };
  Kind kind = Kind::sqrt;
  double exponent = 1.0;  // used by pow only

  static TensorFunction sqrt() { return {Kind::sqrt, 0.5}; }
  static TensorFunction log() { return {Kind::log, 0.0}; }
  static TensorFunction pow(double t) { return {Kind::pow, t}; }
  static TensorFunction inv_sqrt() { return {Kind::inv_sqrt, -0.5}; }

  [[nodiscard]] std::string name() const;
};

/// Q * f(L) * Q^H. sqrt needs PSD (eigenvalues within -psd tolerance are
/// clamped to zero, below that DomainError); log, inv_sqrt and negative powers
/// need PD (SingularityError otherwise). Real input gives real output.
Tensor3 t_function(const Tensor3& a, TensorFunction f);

/// Fourier slices of f(A) from an existing decomposition.
SpectralSlices apply_function(const FourierEig& eig, TensorFunction f);

/// M with A = M * M^H, built as M = Q * L^(1/2). DomainError if A is not PSD.
Tensor3 psd_factor(const Tensor3& a);

/// (A + A^H) / 2, exactly Hermitian.
Tensor3 hermitian_part(const Tensor3& a);

}  // namespace tspectral
