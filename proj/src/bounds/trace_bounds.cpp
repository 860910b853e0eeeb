#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "tspectral/bounds.hpp"
#include "tspectral/error.hpp"
#include "tspectral/transform.hpp"

namespace tspectral {
namespace {

void require_square_pair(const Tensor3& a, const Tensor3& b, const char* op) {
  if (!a.square_slices() || !b.square_slices() || a.rows() != b.rows() ||
      a.tubes() != b.tubes()) {
    std::ostringstream os;
    os << op << ": expected two n x n x p tensors, got " << a.rows() << "x" << a.cols() << "x"
       << a.tubes() << " and " << b.rows() << "x" << b.cols() << "x" << b.tubes();
    throw ShapeError(os.str());
  }
}

void require_hermitian(const Tensor3& t, const char* op, const char* name) {
  const HermitianCheck check = is_hermitian(t);
  if (!check.hermitian) {
    std::ostringstream os;
    os << op << ": " << name << " is not Hermitian (residual " << check.residual
       << " > tolerance " << check.tolerance << ")";
    throw PreconditionError(os.str());
  }
}

void require_psd(const Tensor3& t, const char* op, const char* name) {
  require_hermitian(t, op, name);
  const DefinitenessCheck check = is_psd(t);
  if (!check.holds) {
    std::ostringstream os;
    os << op << ": " << name << " is not positive semidefinite (min eigenvalue "
       << check.min_eigenvalue << ")";
    throw PreconditionError(os.str());
  }
}

// Descending real spectrum of a Hermitian tensor.
std::vector<double> hermitian_spectrum(const Tensor3& t) { return t_eigenvalues(t).real_values(); }

double aligned_sum(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double opposed_sum(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[n - 1 - i];
  return s;
}

double real_trace(const Tensor3& t) { return trace(t).real(); }

}  // namespace

double bound_tolerance(double value) { return 1e-8 * std::max(1.0, std::abs(value)); }

BoundReport make_report(double lower, double value, double upper, std::string context) {
  BoundReport r;
  r.lower = lower;
  r.value = value;
  r.upper = upper;
  r.slack_lower = value - lower;
  r.slack_upper = upper - value;
  const double tol = bound_tolerance(value);
  r.satisfied = lower - tol <= value && value <= upper + tol;
  r.context = std::move(context);
  return r;
}

DenseMatrix symmetrized_bcirc(const Tensor3& a) {
  const DenseMatrix b = bcirc(a);
  return 0.5 * (b + b.adjoint());
}

double rayleigh_value(const Tensor3& a, const Tensor3& x) {
  if (!a.square_slices() || x.rows() != a.rows() || x.cols() != 1 || x.tubes() != a.tubes()) {
    std::ostringstream os;
    os << "rayleigh_value: A must be n x n x p and X n x 1 x p, got " << a.rows() << "x"
       << a.cols() << "x" << a.tubes() << " and " << x.rows() << "x" << x.cols() << "x"
       << x.tubes();
    throw ShapeError(os.str());
  }
  const Eigen::VectorXcd y = unfold(x).col(0);
  if (std::abs(y.norm() - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "rayleigh_value: unfold(X) must be a unit vector, norm is " << y.norm();
    throw PreconditionError(os.str());
  }
  return (y.adjoint() * symmetrized_bcirc(a) * y)(0, 0).real();
}

bool SymmetrizedBounds::satisfied() const {
  return radius_report.satisfied &&
         std::all_of(eigenvalue_reports.begin(), eigenvalue_reports.end(),
                     [](const BoundReport& r) { return r.satisfied; });
}

SymmetrizedBounds symmetrized_bounds(const Tensor3& a) {
  if (!a.square_slices()) throw ShapeError("symmetrized_bounds requires square slices");
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(symmetrized_bcirc(a), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
  const auto& mu = solver.eigenvalues();

  SymmetrizedBounds out;
  out.mu_min = mu.minCoeff();
  out.mu_max = mu.maxCoeff();
  out.radius_symmetrized = mu.cwiseAbs().maxCoeff();

  const Spectrum spectrum = t_eigenvalues(a);
  out.radius_tensor = spectrum.spectral_radius();
  for (const Complex& lambda : spectrum.values) {
    if (std::abs(lambda.imag()) > tolerance::real_spectrum * std::max(1.0, std::abs(lambda)))
      continue;
    out.eigenvalue_reports.push_back(
        make_report(out.mu_min, lambda.real(), out.mu_max, "symmetrized-bcirc eigenvalue range"));
  }
  out.radius_report = make_report(0.0, out.radius_tensor, out.radius_symmetrized,
                                  "spectral radius rho_T(A) <= rho(M_A)");
  return out;
}

BoundReport vn_trace_bounds(const Tensor3& a, const Tensor3& b) {
  require_square_pair(a, b, "vn_trace_bounds");
  require_psd(a, "vn_trace_bounds", "A");
  require_psd(b, "vn_trace_bounds", "B");
  const auto la = hermitian_spectrum(a);
  const auto lb = hermitian_spectrum(b);
  return make_report(opposed_sum(la, lb), real_trace(a * b), aligned_sum(la, lb),
                     "von Neumann trace bounds (PSD)");
}

HermitianTraceBounds hermitian_trace_bounds(const Tensor3& a, const Tensor3& b) {
  require_square_pair(a, b, "hermitian_trace_bounds");
  require_hermitian(a, "hermitian_trace_bounds", "A");
  require_hermitian(b, "hermitian_trace_bounds", "B");
  const double low = std::min(t_eigenvalues(a).min_real(), t_eigenvalues(b).min_real());
  return hermitian_trace_bounds(a, b, 1.0 + std::abs(std::min(low, 0.0)));
}

HermitianTraceBounds hermitian_trace_bounds(const Tensor3& a, const Tensor3& b, double shift) {
  require_square_pair(a, b, "hermitian_trace_bounds");
  require_hermitian(a, "hermitian_trace_bounds", "A");
  require_hermitian(b, "hermitian_trace_bounds", "B");
  const auto la = hermitian_spectrum(a);
  const auto lb = hermitian_spectrum(b);
  const double value = real_trace(a * b);

  HermitianTraceBounds out;
  out.report = make_report(opposed_sum(la, lb), value, aligned_sum(la, lb),
                           "von Neumann trace bounds (Hermitian)");
  out.shift = shift;
  const Tensor3 id = identity(a.rows(), a.tubes());
  out.shifted_trace = real_trace((a + shift * id) * (b + shift * id));
  const auto big_n = static_cast<double>(a.rows() * a.tubes());
  out.shift_identity =
      value + shift * (real_trace(a) + real_trace(b)) + big_n * shift * shift;
  out.shift_identity_holds = std::abs(out.shifted_trace - out.shift_identity) <=
                             1e-9 * std::max(1.0, std::abs(out.shift_identity));
  return out;
}

BoundReport sandwich_bounds(const Tensor3& a, const Tensor3& b) {
  require_square_pair(a, b, "sandwich_bounds");
  require_psd(a, "sandwich_bounds", "A");
  require_psd(b, "sandwich_bounds", "B");
  const auto lb = hermitian_spectrum(b);
  const double tr_a = real_trace(a);
  const auto big_n = static_cast<double>(a.rows() * a.tubes());
  return make_report(lb.back() * tr_a * tr_a / big_n, real_trace(a * b * a),
                     lb.front() * tr_a * tr_a, "sandwich bounds tr(A*B*A)");
}

BoundReport extremal_ratio_bounds(const Tensor3& a, const Tensor3& b) {
  require_square_pair(a, b, "extremal_ratio_bounds");
  require_hermitian(a, "extremal_ratio_bounds", "A");
  const double tr_b = real_trace(b);
  if (!(tr_b > 0.0)) {
    std::ostringstream os;
    os << "extremal_ratio_bounds: tr(B) must be positive, got " << tr_b;
    throw DomainError(os.str());
  }
  require_psd(b, "extremal_ratio_bounds", "B");
  const Spectrum la = t_eigenvalues(a);
  return make_report(la.min_real(), real_trace(a * b) / tr_b, la.max_real(),
                     "extremal ratio bounds tr(A*B)/tr(B)");
}

Tensor3 extremal_witness(const Tensor3& a, Extreme which) {
  if (!a.square_slices()) throw ShapeError("extremal_witness requires square slices");
  require_hermitian(a, "extremal_witness", "A");
  const DenseMatrix m = symmetrized_bcirc(a);
  // Eigen sorts ascending.
  const Index col = which == Extreme::min ? 0 : m.rows() - 1;
  DenseMatrix x;
  if (a.is_real()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real());
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
    x = solver.eigenvectors().col(col).cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m);
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
    x = solver.eigenvectors().col(col);
  }
  // Every block-cyclic shift of the eigenvector is again an eigenvector, and
  // bcirc(X) has p such shifts as columns, so tr(X * X^H) = p * ||x||^2.
  x /= std::sqrt(static_cast<double>(a.tubes()));
  const Tensor3 xt = fold(x, a.tubes(), a.is_real() ? ScalarKind::real : ScalarKind::complex);
  return hermitian_part(xt * conj_transpose(xt));
}

RelaxedBounds symmetric_relax_bounds(const Tensor3& a, const Tensor3& b) {
  require_square_pair(a, b, "symmetric_relax_bounds");
  require_hermitian(b, "symmetric_relax_bounds", "B");
  const Tensor3 a_bar = hermitian_part(a);
  const Spectrum la = t_eigenvalues(a_bar);
  const double lb_min = t_eigenvalues(b).min_real();
  const double tr_a = real_trace(a);
  const double tr_b = real_trace(b);
  const auto big_n = static_cast<double>(a.rows() * a.tubes());
  const double value = real_trace(a * b);

  RelaxedBounds out;
  out.report = make_report(la.min_real() * tr_b - lb_min * (big_n * la.min_real() - tr_a), value,
                           la.max_real() * tr_b - lb_min * (big_n * la.max_real() - tr_a),
                           "relaxed bounds for symmetric B (recorded only)");
  out.symmetrization_residual = std::abs(value - real_trace(a_bar * b));
  return out;
}

}  // namespace tspectral
