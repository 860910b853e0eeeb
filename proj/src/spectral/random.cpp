#include "tspectral/random.hpp"

#include <sstream>

#include <Eigen/QR>

#include "tspectral/error.hpp"
#include "tspectral/spectral.hpp"
#include "tspectral/transform.hpp"

namespace tspectral {
namespace {

DenseMatrix complex_gaussian_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  DenseMatrix out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      out(i, j) = {re, im};
    }
  return out;
}

// k x n block with orthonormal rows.
DenseMatrix orthonormal_rows(Index k, Index n, Rng& rng) {
  const DenseMatrix g = complex_gaussian_matrix(n, k, rng);
  Eigen::HouseholderQR<DenseMatrix> qr(g);
  const DenseMatrix q = qr.householderQ() * DenseMatrix::Identity(n, k);
  return q.adjoint();
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

Tensor3 random_gaussian(Index m, Index n, Index p, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> data(static_cast<std::size_t>(m * n * p));
  for (auto& v : data) v = normal(rng);
  return Tensor3::from_real(m, n, p, std::move(data));
}

Tensor3 random_complex_gaussian(Index m, Index n, Index p, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> data(static_cast<std::size_t>(m * n * p));
  for (auto& v : data) {
    const double re = normal(rng);
    const double im = normal(rng);
    v = {re, im};
  }
  return Tensor3::from_complex(m, n, p, std::move(data));
}

Tensor3 random_hermitian(Index n, Index p, Rng& rng, bool complex_entries) {
  const Tensor3 g =
      complex_entries ? random_complex_gaussian(n, n, p, rng) : random_gaussian(n, n, p, rng);
  return hermitian_part(g);
}

Tensor3 random_psd(Index n, Index p, Rng& rng) {
  const Tensor3 m = random_gaussian(n, n, p, rng);
  return hermitian_part(m * conj_transpose(m));
}

Tensor3 random_psd(Index n, Index p, std::uint64_t seed) {
  Rng rng(seed);
  return random_psd(n, p, rng);
}

Tensor3 random_partial_isometry(Index k, Index n, Index p, Rng& rng) {
  if (k < 1 || k > n) {
    std::ostringstream os;
    os << "partial isometry needs 1 <= k <= n, got k = " << k << ", n = " << n;
    throw DomainError(os.str());
  }
  SpectralSlices slices{k, n, {}};
  for (Index s = 0; s < p; ++s) slices.slices.push_back(orthonormal_rows(k, n, rng));
  return from_fourier(slices, OutputKind::complex);
}

Tensor3 random_unitary(Index n, Index p, Rng& rng) { return random_partial_isometry(n, n, p, rng); }

}  // namespace tspectral
