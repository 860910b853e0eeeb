#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "tspectral/error.hpp"
#include "tspectral/spectral.hpp"

namespace tspectral {
namespace {

OutputKind output_for(bool real_input) {
  return real_input ? OutputKind::real : OutputKind::complex;
}

bool needs_definite(const TensorFunction& f) {
  return f.kind == TensorFunction::Kind::log || f.kind == TensorFunction::Kind::inv_sqrt ||
         (f.kind == TensorFunction::Kind::pow && f.exponent < 0.0);
}

double evaluate(const TensorFunction& f, double x) {
  switch (f.kind) {
    case TensorFunction::Kind::sqrt: return std::sqrt(x);
    case TensorFunction::Kind::log: return std::log(x);
    case TensorFunction::Kind::inv_sqrt: return 1.0 / std::sqrt(x);
    case TensorFunction::Kind::pow: return f.exponent == 0.0 ? 1.0 : std::pow(x, f.exponent);
  }
  return 0.0;
}

// Singular triples of one slice, written into full U (m x m), diag S, V (n x n).
void slice_svd(const DenseMatrix& a, bool real_valued, DenseMatrix& u, Eigen::VectorXd& s,
               DenseMatrix& v) {
  if (real_valued) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a.real(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    u = svd.matrixU().cast<Complex>();
    v = svd.matrixV().cast<Complex>();
    s = svd.singularValues();
    return;
  }
  Eigen::JacobiSVD<DenseMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  u = svd.matrixU();
  v = svd.matrixV();
  s = svd.singularValues();
}

DenseMatrix rectangular_diagonal(Index rows, Index cols, const Eigen::VectorXd& d) {
  DenseMatrix out = DenseMatrix::Zero(rows, cols);
  for (Index i = 0; i < d.size(); ++i) out(i, i) = d(i);
  return out;
}

}  // namespace

std::string TensorFunction::name() const {
  switch (kind) {
    case Kind::sqrt: return "sqrt";
    case Kind::log: return "log";
    case Kind::inv_sqrt: return "inv_sqrt";
    case Kind::pow: {
      std::ostringstream os;
      os << "pow(" << exponent << ")";
      return os.str();
    }
  }
  return "unknown";
}

SpectralSlices apply_function(const FourierEig& eig, TensorFunction f) {
  const double scale = std::max(1.0, eig.max_eigenvalue());
  const double lowest = eig.min_eigenvalue();
  if (needs_definite(f)) {
    const double floor = tolerance::pd * scale;
    if (lowest <= floor) {
      std::ostringstream os;
      os << f.name() << " requires a positive definite tensor: min eigenvalue " << lowest
         << " <= " << floor;
      throw SingularityError(os.str());
    }
  } else {
    const double floor = -tolerance::psd * scale;
    if (lowest < floor) {
      std::ostringstream os;
      os << f.name() << " requires a positive semidefinite tensor: min eigenvalue " << lowest
         << " < " << floor;
      throw DomainError(os.str());
    }
  }

  SpectralSlices out{eig.n, eig.n, {}};
  out.slices.reserve(eig.values.size());
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    Eigen::VectorXcd mapped(eig.n);
    for (Index i = 0; i < eig.n; ++i)
      mapped(i) = evaluate(f, std::max(eig.values[k](i), 0.0));
    const DenseMatrix& q = eig.vectors[k];
    out.slices.emplace_back(q * mapped.asDiagonal() * q.adjoint());
  }
  return out;
}

Tensor3 t_function(const Tensor3& a, TensorFunction f) {
  const FourierEig eig = fourier_hermitian_eig(a);
  return from_fourier(apply_function(eig, f), output_for(eig.real_input));
}

Tensor3 psd_factor(const Tensor3& a) {
  const FourierEig eig = fourier_hermitian_eig(a);
  const double floor = -tolerance::psd * std::max(1.0, eig.max_eigenvalue());
  if (eig.min_eigenvalue() < floor) {
    std::ostringstream os;
    os << "psd_factor: tensor is not positive semidefinite, min eigenvalue "
       << eig.min_eigenvalue();
    throw DomainError(os.str());
  }
  SpectralSlices m{eig.n, eig.n, {}};
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const Eigen::VectorXcd root = eig.values[k].cwiseMax(0.0).cwiseSqrt().cast<Complex>();
    m.slices.emplace_back(eig.vectors[k] * root.asDiagonal());
  }
  return from_fourier(m, output_for(eig.real_input));
}

TSvdFactors t_svd(const Tensor3& a) {
  if (a.square_slices() && is_hermitian(a).hermitian && is_psd(a).holds) {
    const FourierEig eig = fourier_hermitian_eig(a);
    SpectralSlices q{eig.n, eig.n, {}};
    SpectralSlices s{eig.n, eig.n, {}};
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
      q.slices.push_back(eig.vectors[k]);
      s.slices.emplace_back(eig.values[k].cwiseMax(0.0).cast<Complex>().asDiagonal());
    }
    const auto kind = output_for(eig.real_input);
    Tensor3 u = from_fourier(q, kind);
    return {u, from_fourier(s, kind), u};
  }

  const Index m = a.rows(), n = a.cols(), p = a.tubes();
  const SpectralSlices hat = to_fourier(a);
  SpectralSlices u{m, m, {}}, s{m, n, {}}, v{n, n, {}};
  u.slices.resize(static_cast<std::size_t>(p));
  s.slices.resize(static_cast<std::size_t>(p));
  v.slices.resize(static_cast<std::size_t>(p));
  for (Index k = 0; k < p; ++k) {
    const Index mirror = mirror_slice(k, p);
    if (a.is_real() && mirror < k) {
      u[k] = u[mirror].conjugate();
      s[k] = s[mirror];
      v[k] = v[mirror].conjugate();
      continue;
    }
    Eigen::VectorXd sigma;
    slice_svd(hat[k], a.is_real() && mirror == k, u[k], sigma, v[k]);
    s[k] = rectangular_diagonal(m, n, sigma);
  }
  const auto kind = output_for(a.is_real());
  return {from_fourier(u, kind), from_fourier(s, kind), from_fourier(v, kind)};
}

std::vector<double> t_singular_values(const Tensor3& a) {
  const SpectralSlices hat = to_fourier(a);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::min(a.rows(), a.cols()) * a.tubes()));
  for (const auto& slice : hat.slices) {
    Eigen::JacobiSVD<DenseMatrix> svd(slice);
    for (Index i = 0; i < svd.singularValues().size(); ++i) out.push_back(svd.singularValues()(i));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace tspectral
