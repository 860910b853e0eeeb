#include <cstdio>
#include <sstream>

#include "tspectral/error.hpp"
#include "tspectral/geometry.hpp"
#include "tspectral/spectral.hpp"
#include "tspectral/transform.hpp"

namespace tspectral {

Tensor3 geodesic(const Tensor3& a, const Tensor3& b, double t, GeodesicOptions options) {
  if (!a.square_slices() || !b.square_slices() || a.rows() != b.rows() ||
      a.tubes() != b.tubes())
    throw ShapeError("geodesic: expected two n x n x p tensors of equal shape");
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream os;
    os << "geodesic: t = " << t << " outside [0, 1]";
    throw DomainError(os.str());
  }
  if (options.regularization < 0.0) throw DomainError("geodesic: regularization must be >= 0");

  const Tensor3 base = options.regularization > 0.0
                           ? a + options.regularization * identity(a.rows(), a.tubes())
                           : a;
  const FourierEig eig_a = fourier_hermitian_eig(base);
  const DefinitenessCheck pd = is_pd(base);
  if (!pd.holds) {
    std::ostringstream os;
    os << "geodesic: A is not positive definite (min eigenvalue " << pd.min_eigenvalue
       << "); pass a regularization to add eps * I";
    throw SingularityError(os.str());
  }
  const DefinitenessCheck psd_b = is_psd(b);
  if (!psd_b.holds) {
    std::ostringstream os;
    os << "geodesic: B is not positive semidefinite (min eigenvalue " << psd_b.min_eigenvalue
       << ")";
    throw DomainError(os.str());
  }

  const OutputKind kind = base.is_real() ? OutputKind::real : OutputKind::complex;
  const Tensor3 root = from_fourier(apply_function(eig_a, TensorFunction::sqrt()), kind);
  const Tensor3 inv_root = from_fourier(apply_function(eig_a, TensorFunction::inv_sqrt()), kind);
  const Tensor3 inner = hermitian_part(inv_root * b * inv_root);
  return hermitian_part(root * t_function(inner, TensorFunction::pow(t)) * root);
}

GeodesicProfile geodesic_trace_profile(const Tensor3& a, const Tensor3& b, Index num_samples,
                                       bool retain_tensors, GeodesicOptions options,
                                       TraceConvention convention) {
  if (num_samples < 2) throw DomainError("geodesic_trace_profile: need at least 2 samples");
  GeodesicProfile out;
  for (Index i = 0; i < num_samples; ++i) {
    const double t =
        i == num_samples - 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(num_samples - 1);
    Tensor3 g = geodesic(a, b, t, options);
    out.ts.push_back(t);
    out.traces.push_back(trace(g, convention).real());
    if (retain_tensors) out.tensors.push_back(std::move(g));
  }
  return out;
}

void write_profile_csv(const GeodesicProfile& profile, std::ostream& out) {
  out << "t,trace\n";
  char buf[64];
  for (std::size_t i = 0; i < profile.ts.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", profile.ts[i], profile.traces[i]);
    out << buf;
  }
}

}  // namespace tspectral
