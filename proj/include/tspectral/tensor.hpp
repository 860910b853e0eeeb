#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace tspectral {

using Index = Eigen::Index;
using Complex = std::complex<double>;

/// Carrier for bcirc/unfold outputs and Fourier-domain slices.
using DenseMatrix = Eigen::MatrixXcd;

enum class ScalarKind { real, complex };

/// How the trace of a tensor is defined.
///
/// `bcirc` is trace(bcirc(T)) = p * trace(T(:,:,1)) and is the library-wide
/// default. `slice1` is trace(T(:,:,1)) alone; it differs by the factor p and
/// exists only so callers can compare against results computed that way.
enum class TraceConvention { bcirc, slice1 };

/// Dense m x n x p third-order tensor.
///
/// Entries are stored slice-major, then row-major: entry (i, j, k) lives at
/// k*m*n + i*n + j, so the first m*n entries are the first frontal slice and
/// unfold() is a contiguous reinterpretation. Real-kind tensors keep no
/// imaginary storage at all. All indices are zero-based.
class Tensor3 {
 public:
  /// 1 x 1 x 1 real zero.
  Tensor3();

  static Tensor3 zeros(Index m, Index n, Index p, ScalarKind kind = ScalarKind::real);
  static Tensor3 from_real(Index m, Index n, Index p, std::vector<double> data);
  static Tensor3 from_complex(Index m, Index n, Index p, std::vector<Complex> data);

  /// Builds a tensor from p frontal slices of identical shape. With no kind
  /// given, the result is real iff every imaginary part is exactly zero.
  static Tensor3 from_slices(std::span<const DenseMatrix> slices,
                             std::optional<ScalarKind> kind = std::nullopt);

  [[nodiscard]] Index rows() const noexcept { return m_; }
  [[nodiscard]] Index cols() const noexcept { return n_; }
  [[nodiscard]] Index tubes() const noexcept { return p_; }
  [[nodiscard]] std::size_t size() const noexcept { return re_.size(); }
  [[nodiscard]] ScalarKind kind() const noexcept {
    return im_.empty() ? ScalarKind::real : ScalarKind::complex;
  }
  [[nodiscard]] bool is_real() const noexcept { return im_.empty(); }
  [[nodiscard]] bool square_slices() const noexcept { return m_ == n_; }

  [[nodiscard]] Complex operator()(Index i, Index j, Index k) const {
    const auto idx = offset(i, j, k);
    return {re_[idx], im_.empty() ? 0.0 : im_[idx]};
  }

  [[nodiscard]] std::span<const double> real_data() const noexcept { return re_; }
  /// Empty for real-kind tensors.
  [[nodiscard]] std::span<const double> imag_data() const noexcept { return im_; }

  /// Largest entry modulus.
  [[nodiscard]] double max_abs() const noexcept;

  /// Same entries as a complex-kind tensor.
  [[nodiscard]] Tensor3 as_complex() const;

  /// Discards imaginary parts. Throws NumericError if any exceeds `tolerance`.
  [[nodiscard]] Tensor3 as_real(double tolerance) const;

  friend bool operator==(const Tensor3& a, const Tensor3& b);

 private:
  Tensor3(Index m, Index n, Index p, std::vector<double> re, std::vector<double> im);

  [[nodiscard]] std::size_t offset(Index i, Index j, Index k) const noexcept {
    return static_cast<std::size_t>((k * m_ + i) * n_ + j);
  }

  Index m_ = 1;
  Index n_ = 1;
  Index p_ = 1;
  std::vector<double> re_;
  std::vector<double> im_;
};

Tensor3 operator+(const Tensor3& a, const Tensor3& b);
Tensor3 operator-(const Tensor3& a, const Tensor3& b);
Tensor3 operator-(const Tensor3& a);
Tensor3 operator*(double alpha, const Tensor3& a);
Tensor3 operator*(Complex alpha, const Tensor3& a);

/// Neutral element of the T-product: first slice I_n, the rest zero.
Tensor3 identity(Index n, Index p);

/// Frontal slice k (zero-based) as an m x n matrix.
DenseMatrix frontal_slice(const Tensor3& t, Index k);

/// The mp x np block-circulant matrix whose (i, j) block is slice (i - j) mod p.
DenseMatrix bcirc(const Tensor3& t);

/// The mp x n matrix stacking the frontal slices vertically.
DenseMatrix unfold(const Tensor3& t);

/// Inverse of unfold(). Rows of `m` must be divisible by `p`.
Tensor3 fold(const DenseMatrix& m, Index p, std::optional<ScalarKind> kind = std::nullopt);

/// Conjugate transpose: slice 1 is conjugate-transposed in place, slices
/// 2..p are conjugate-transposed and reversed. bcirc(T^H) == bcirc(T)^H.
Tensor3 conj_transpose(const Tensor3& t);

/// Requires square slices.
Complex trace(const Tensor3& t, TraceConvention convention = TraceConvention::bcirc);

/// sqrt(trace(T^H * T)) under the bcirc trace, i.e. sqrt(p) times the
/// entrywise 2-norm.
double frobenius_norm(const Tensor3& t);

/// Entrywise 2-norm without the sqrt(p) factor.
double entry_norm(const Tensor3& t);

}  // namespace tspectral
