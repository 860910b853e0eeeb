#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "tspectral/error.hpp"
#include "tspectral/spectral.hpp"

namespace tspectral {
namespace {

void require_square(const Tensor3& a, const char* op) {
  if (!a.square_slices()) {
    std::ostringstream os;
    os << op << " requires square slices, got " << a.rows() << "x" << a.cols();
    throw ShapeError(os.str());
  }
}

void sort_spectrum(Spectrum& s) {
  std::vector<std::size_t> order(s.values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const Complex a = s.values[x], b = s.values[y];
    if (a.real() != b.real()) return a.real() > b.real();
    if (a.imag() != b.imag()) return a.imag() > b.imag();
    return s.slice[x] < s.slice[y];
  });
  Spectrum sorted;
  sorted.values.reserve(order.size());
  sorted.slice.reserve(order.size());
  for (auto i : order) {
    sorted.values.push_back(s.values[i]);
    sorted.slice.push_back(s.slice[i]);
  }
  s = std::move(sorted);
}

void zero_small_imaginary(Spectrum& s) {
  for (auto& v : s.values) {
    if (std::abs(v.imag()) > tolerance::real_spectrum) {
      std::ostringstream os;
      os << "Hermitian spectrum has imaginary part " << v.imag();
      throw NumericError(os.str());
    }
    v = {v.real(), 0.0};
  }
}

// Eigenpairs of a Hermitian matrix, descending.
void descending_eig(const DenseMatrix& h, bool real_valued, Eigen::VectorXd& values,
                    DenseMatrix& vectors) {
  const Index n = h.rows();
  values.resize(n);
  vectors.resize(n, n);
  if (real_valued) {
    const Eigen::MatrixXd r = h.real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (r + r.transpose()));
    if (solver.info() != Eigen::Success) throw NumericError("symmetric eigensolver did not converge");
    for (Index c = 0; c < n; ++c) {
      values(c) = solver.eigenvalues()(n - 1 - c);
      vectors.col(c) = solver.eigenvectors().col(n - 1 - c).cast<Complex>();
    }
    return;
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(0.5 * (h + h.adjoint()));
  if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver did not converge");
  for (Index c = 0; c < n; ++c) {
    values(c) = solver.eigenvalues()(n - 1 - c);
    vectors.col(c) = solver.eigenvectors().col(n - 1 - c);
  }
}

}  // namespace

std::vector<double> Spectrum::real_values() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.real());
  return out;
}

double Spectrum::spectral_radius() const {
  double r = 0.0;
  for (const auto& v : values) r = std::max(r, std::abs(v));
  return r;
}

HermitianCheck is_hermitian(const Tensor3& a) {
  require_square(a, "is_hermitian");
  HermitianCheck check;
  check.residual = frobenius_norm(a - conj_transpose(a));
  check.tolerance = tolerance::hermitian * (1.0 + frobenius_norm(a));
  check.hermitian = check.residual <= check.tolerance;
  return check;
}

Spectrum t_eigenvalues(const Tensor3& a) {
  require_square(a, "t_eigenvalues");
  Spectrum s;
  const Index n = a.rows(), p = a.tubes();
  s.values.reserve(static_cast<std::size_t>(n * p));
  s.slice.reserve(static_cast<std::size_t>(n * p));
  if (is_hermitian(a).hermitian) {
    const FourierEig eig = fourier_hermitian_eig(a);
    for (Index k = 0; k < p; ++k) {
      for (Index i = 0; i < n; ++i) {
        s.values.emplace_back(eig.values[static_cast<std::size_t>(k)](i), 0.0);
        s.slice.push_back(k);
      }
    }
  } else {
    const SpectralSlices hat = to_fourier(a);
    for (Index k = 0; k < p; ++k) {
      Eigen::ComplexEigenSolver<DenseMatrix> solver(hat[k], /*computeEigenvectors=*/false);
      if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
      for (Index i = 0; i < n; ++i) {
        s.values.push_back(solver.eigenvalues()(i));
        s.slice.push_back(k);
      }
    }
  }
  sort_spectrum(s);
  return s;
}

Spectrum t_eigenvalues_dense(const Tensor3& a) {
  require_square(a, "t_eigenvalues_dense");
  const DenseMatrix b = bcirc(a);
  Spectrum s;
  const bool hermitian = is_hermitian(a).hermitian;
  if (hermitian) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(0.5 * (b + b.adjoint()),
                                                      Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
    for (Index i = 0; i < b.rows(); ++i) s.values.emplace_back(solver.eigenvalues()(i), 0.0);
  } else {
    Eigen::ComplexEigenSolver<DenseMatrix> solver(b, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
    for (Index i = 0; i < b.rows(); ++i) s.values.push_back(solver.eigenvalues()(i));
  }
  s.slice.assign(s.values.size(), -1);
  if (hermitian) zero_small_imaginary(s);
  sort_spectrum(s);
  return s;
}

double FourierEig::max_eigenvalue() const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : values) best = std::max(best, v.maxCoeff());
  return best;
}

double FourierEig::min_eigenvalue() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : values) best = std::min(best, v.minCoeff());
  return best;
}

FourierEig fourier_hermitian_eig(const Tensor3& a) {
  require_square(a, "Hermitian eigendecomposition");
  const HermitianCheck check = is_hermitian(a);
  if (!check.hermitian) {
    std::ostringstream os;
    os << "tensor is not Hermitian: ||A - A^H||_F = " << check.residual << " exceeds tolerance "
       << check.tolerance << " (1e-10 * (1 + ||A||_F))";
    throw PreconditionError(os.str());
  }
  const SpectralSlices hat = to_fourier(a);
  const Index p = a.tubes();
  FourierEig eig;
  eig.n = a.rows();
  eig.real_input = a.is_real();
  eig.values.resize(static_cast<std::size_t>(p));
  eig.vectors.resize(static_cast<std::size_t>(p));
  for (Index k = 0; k < p; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const Index mirror = mirror_slice(k, p);
    if (eig.real_input && mirror < k) {
      const auto um = static_cast<std::size_t>(mirror);
      eig.values[uk] = eig.values[um];
      eig.vectors[uk] = eig.vectors[um].conjugate();
      continue;
    }
    // Self-paired slices of a real tensor are real symmetric matrices.
    descending_eig(hat[k], eig.real_input && mirror == k, eig.values[uk], eig.vectors[uk]);
  }
  return eig;
}

DefinitenessCheck is_psd(const Tensor3& a) {
  const FourierEig eig = fourier_hermitian_eig(a);
  DefinitenessCheck check;
  check.max_eigenvalue = eig.max_eigenvalue();
  check.min_eigenvalue = eig.min_eigenvalue();
  check.threshold = -tolerance::psd * std::max(1.0, check.max_eigenvalue);
  check.holds = check.min_eigenvalue >= check.threshold;
  return check;
}

DefinitenessCheck is_pd(const Tensor3& a) {
  const FourierEig eig = fourier_hermitian_eig(a);
  DefinitenessCheck check;
  check.max_eigenvalue = eig.max_eigenvalue();
  check.min_eigenvalue = eig.min_eigenvalue();
  check.threshold = tolerance::pd * std::max(1.0, check.max_eigenvalue);
  check.holds = check.min_eigenvalue > check.threshold;
  return check;
}

EigFactors hermitian_eig(const Tensor3& a) {
  const FourierEig eig = fourier_hermitian_eig(a);
  const Index p = eig.tubes();
  SpectralSlices q{eig.n, eig.n, {}};
  SpectralSlices l{eig.n, eig.n, {}};
  for (Index k = 0; k < p; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    q.slices.push_back(eig.vectors[uk]);
    l.slices.push_back(eig.values[uk].cast<Complex>().asDiagonal());
  }
  const OutputKind kind = eig.real_input ? OutputKind::real : OutputKind::complex;
  return {from_fourier(q, kind), from_fourier(l, kind)};
}

Tensor3 hermitian_part(const Tensor3& a) {
  require_square(a, "hermitian_part");
  return 0.5 * (a + conj_transpose(a));
}

}  // namespace tspectral
