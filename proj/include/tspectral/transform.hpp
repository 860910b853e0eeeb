#pragma once

#include <vector>

#include "tspectral/tensor.hpp"

namespace tspectral {

/// The p frontal slices of a tensor after a DFT along every tube.
///
/// Slice k is sum_j T(:,:,j) * w^(j*k) with w = exp(-2*pi*i/p), the forward
/// transform being unnormalized. These are exactly the diagonal blocks of
/// bcirc(T) after the unitary block-DFT similarity.
struct SpectralSlices {
  Index rows = 0;
  Index cols = 0;
  std::vector<DenseMatrix> slices;

  [[nodiscard]] Index tubes() const noexcept { return static_cast<Index>(slices.size()); }
  [[nodiscard]] const DenseMatrix& operator[](Index k) const {
    return slices[static_cast<std::size_t>(k)];
  }
  [[nodiscard]] DenseMatrix& operator[](Index k) { return slices[static_cast<std::size_t>(k)]; }

  /// slice(k) == conj(slice(p - k)) for k = 1..p-1, within
  /// `rel_tol * max(1, max |entry|)`. Holds for transforms of real tensors.
  [[nodiscard]] bool conjugate_symmetric(double rel_tol = 1e-12) const;
};

/// Index of the slice paired with k under conjugate symmetry.
[[nodiscard]] constexpr Index mirror_slice(Index k, Index p) noexcept { return (p - k) % p; }

SpectralSlices to_fourier(const Tensor3& t);

enum class OutputKind {
  /// Real iff the slices are conjugate symmetric; the residue is discarded.
  automatic,
  /// Real, or NumericError when the imaginary residue exceeds
  /// 1e-8 * (1 + max |entry|).
  real,
  complex,
};

/// Inverse DFT along tubes (carries the 1/p factor).
Tensor3 from_fourier(const SpectralSlices& s, OutputKind kind = OutputKind::automatic);

/// Slice-wise product of two Fourier representations.
SpectralSlices multiply(const SpectralSlices& a, const SpectralSlices& b);

enum class ProductPath { dense, fft };

/// fold(bcirc(A) * unfold(B)): the reference T-product.
Tensor3 tprod_dense(const Tensor3& a, const Tensor3& b);

/// T-product through slice-wise products in the Fourier domain.
Tensor3 tprod_fft(const Tensor3& a, const Tensor3& b);

inline Tensor3 tprod(const Tensor3& a, const Tensor3& b, ProductPath path) {
  return path == ProductPath::dense ? tprod_dense(a, b) : tprod_fft(a, b);
}

/// Shorthand for the FFT path, used throughout the library.
inline Tensor3 operator*(const Tensor3& a, const Tensor3& b) { return tprod_fft(a, b); }

}  // namespace tspectral
