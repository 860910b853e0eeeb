#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "tspectral/error.hpp"
#include "tspectral/geometry.hpp"
#include "tspectral/spectral.hpp"
#include "tspectral/transform.hpp"

namespace tspectral {
namespace {

void require_same_square(const Tensor3& a, const Tensor3& b, const char* op) {
  if (!a.square_slices() || !b.square_slices() || a.rows() != b.rows() ||
      a.tubes() != b.tubes()) {
    std::ostringstream os;
    os << op << ": expected two n x n x p tensors, got " << a.rows() << "x" << a.cols() << "x"
       << a.tubes() << " and " << b.rows() << "x" << b.cols() << "x" << b.tubes();
    throw ShapeError(os.str());
  }
}

FourierEig psd_eig(const Tensor3& t, const char* op, const char* name) {
  FourierEig eig = fourier_hermitian_eig(t);
  const double floor = -tolerance::psd * std::max(1.0, eig.max_eigenvalue());
  if (eig.min_eigenvalue() < floor) {
    std::ostringstream os;
    os << op << ": " << name << " is not positive semidefinite (min eigenvalue "
       << eig.min_eigenvalue() << ")";
    throw DomainError(os.str());
  }
  return eig;
}

double convention_scale(TraceConvention convention, Index p) {
  return convention == TraceConvention::bcirc ? 1.0 : 1.0 / static_cast<double>(p);
}

}  // namespace

double dist_frobenius(const Tensor3& a, const Tensor3& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.tubes() != b.tubes())
    throw ShapeError("dist_frobenius: shape mismatch");
  return frobenius_norm(a - b);
}

double dist_bures_wasserstein(const Tensor3& a, const Tensor3& b, TraceConvention convention) {
  require_same_square(a, b, "dist_bures_wasserstein");
  const SpectralSlices root_a = apply_function(psd_eig(a, "dist_bures_wasserstein", "A"),
                                               TensorFunction::sqrt());
  const SpectralSlices root_b = apply_function(psd_eig(b, "dist_bures_wasserstein", "B"),
                                               TensorFunction::sqrt());

  // (A^(1/2) B A^(1/2))^(1/2) has the singular values of B^(1/2) A^(1/2) as
  // eigenvalues. Summing those avoids squaring the condition number of A.
  // The bcirc trace is the sum of the Fourier-slice traces.
  double trace_root = 0.0;
  for (Index k = 0; k < root_a.tubes(); ++k) {
    const DenseMatrix m = root_b[k] * root_a[k];
    Eigen::JacobiSVD<DenseMatrix> svd(m);
    trace_root += svd.singularValues().sum();
  }
  const double scale = convention_scale(convention, a.tubes());
  const double radicand = scale * (trace(a).real() + trace(b).real() - 2.0 * trace_root);
  if (radicand < -1e-8) {
    std::ostringstream os;
    os << "dist_bures_wasserstein: radicand " << radicand << " is below -1e-8";
    throw NumericError(os.str());
  }
  return std::sqrt(std::max(radicand, 0.0));
}

PrincipalBuresWasserstein bures_wasserstein_principal(const Tensor3& a, const Tensor3& b,
                                                      TraceConvention convention) {
  require_same_square(a, b, "bures_wasserstein_principal");
  const SpectralSlices hat_a = to_fourier(a);
  const SpectralSlices hat_b = to_fourier(b);
  Complex trace_root = 0.0;
  Complex trace_sum = 0.0;
  for (Index k = 0; k < hat_a.tubes(); ++k) {
    const DenseMatrix root_a = hat_a[k].sqrt();
    const DenseMatrix middle = root_a * hat_b[k] * root_a;
    trace_root += DenseMatrix(middle.sqrt()).trace();
    trace_sum += hat_a[k].trace() + hat_b[k].trace();
  }
  PrincipalBuresWasserstein out;
  out.radicand = convention_scale(convention, a.tubes()) * (trace_sum - 2.0 * trace_root);
  const Complex root = std::sqrt(out.radicand);
  out.distance = root.real();
  out.imaginary = root.imag();
  return out;
}

double dist_log_euclidean(const Tensor3& a, const Tensor3& b) {
  require_same_square(a, b, "dist_log_euclidean");
  return frobenius_norm(t_function(a, TensorFunction::log()) -
                        t_function(b, TensorFunction::log()));
}

}  // namespace tspectral
