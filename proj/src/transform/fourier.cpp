#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include <fftw3.h>

#include "tspectral/error.hpp"
#include "tspectral/transform.hpp"

namespace tspectral {
namespace {

// The FFTW planner is not re-entrant; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place DFT along the tube dimension of a slice-major buffer holding
// `tube_count` interleaved tubes of length p.
void tube_dft(std::vector<Complex>& buffer, Index tube_count, Index p, int sign) {
  if (p == 1) return;
  auto* data = reinterpret_cast<fftw_complex*>(buffer.data());
  const int length = static_cast<int>(p);
  const int stride = static_cast<int>(tube_count);
  fftw_plan plan = nullptr;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_many_dft(1, &length, stride, data, nullptr, stride, 1, data, nullptr, stride,
                              1, sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw NumericError("FFTW failed to create a plan");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace

bool SpectralSlices::conjugate_symmetric(double rel_tol) const {
  const Index p = tubes();
  double scale = 1.0;
  for (const auto& s : slices) scale = std::max(scale, s.cwiseAbs().maxCoeff());
  const double tol = rel_tol * scale;
  for (Index k = 0; k < p; ++k) {
    const DenseMatrix diff = (*this)[k] - (*this)[mirror_slice(k, p)].conjugate();
    if (diff.size() > 0 && diff.cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

SpectralSlices to_fourier(const Tensor3& t) {
  const Index m = t.rows(), n = t.cols(), p = t.tubes();
  std::vector<Complex> buffer(t.size());
  const auto re = t.real_data();
  const auto im = t.imag_data();
  for (std::size_t i = 0; i < buffer.size(); ++i) buffer[i] = {re[i], im.empty() ? 0.0 : im[i]};
  tube_dft(buffer, m * n, p, FFTW_FORWARD);

  SpectralSlices out{m, n, {}};
  out.slices.reserve(static_cast<std::size_t>(p));
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  for (Index k = 0; k < p; ++k)
    out.slices.emplace_back(Eigen::Map<const RowMajor>(buffer.data() + k * m * n, m, n));
  return out;
}

Tensor3 from_fourier(const SpectralSlices& s, OutputKind kind) {
  const Index m = s.rows, n = s.cols, p = s.tubes();
  if (p < 1) throw ShapeError("from_fourier: no slices");
  std::vector<Complex> buffer(static_cast<std::size_t>(m * n * p));
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  for (Index k = 0; k < p; ++k) {
    if (s[k].rows() != m || s[k].cols() != n) throw ShapeError("from_fourier: ragged slices");
    Eigen::Map<RowMajor>(buffer.data() + k * m * n, m, n) = s[k];
  }
  tube_dft(buffer, m * n, p, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(p);
  for (auto& v : buffer) v *= scale;

  const bool want_real =
      kind == OutputKind::real || (kind == OutputKind::automatic && s.conjugate_symmetric());
  if (!want_real) return Tensor3::from_complex(m, n, p, std::move(buffer));

  double max_entry = 0.0;
  double max_imag = 0.0;
  std::vector<double> re(buffer.size());
  for (std::size_t i = 0; i < buffer.size(); ++i) {
    re[i] = buffer[i].real();
    max_entry = std::max(max_entry, std::abs(buffer[i]));
    max_imag = std::max(max_imag, std::abs(buffer[i].imag()));
  }
  const double tol = 1e-8 * (1.0 + max_entry);
  if (kind == OutputKind::real && max_imag > tol) {
    std::ostringstream os;
    os << "from_fourier: imaginary residue " << max_imag << " exceeds " << tol
       << " but real output was demanded";
    throw NumericError(os.str());
  }
  return Tensor3::from_real(m, n, p, std::move(re));
}

SpectralSlices multiply(const SpectralSlices& a, const SpectralSlices& b) {
  if (a.cols != b.rows || a.tubes() != b.tubes()) {
    std::ostringstream os;
    os << "T-product shape mismatch: " << a.rows << "x" << a.cols << "x" << a.tubes() << " * "
       << b.rows << "x" << b.cols << "x" << b.tubes();
    throw ShapeError(os.str());
  }
  SpectralSlices out{a.rows, b.cols, {}};
  out.slices.resize(a.slices.size());
  // Each slice writes a disjoint output, so any evaluation order gives the
  // same bits.
  for (std::size_t k = 0; k < a.slices.size(); ++k) out.slices[k].noalias() = a.slices[k] * b.slices[k];
  return out;
}

}  // namespace tspectral
