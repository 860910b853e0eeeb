#include "tspectral/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "tspectral/error.hpp"

namespace tspectral {
namespace {

void require_dims(Index m, Index n, Index p) {
  if (m < 1 || n < 1 || p < 1) {
    std::ostringstream os;
    os << "tensor dimensions must be positive, got " << m << "x" << n << "x" << p;
    throw ShapeError(os.str());
  }
}

std::size_t volume(Index m, Index n, Index p) {
  return static_cast<std::size_t>(m) * static_cast<std::size_t>(n) * static_cast<std::size_t>(p);
}

void require_same_shape(const Tensor3& a, const Tensor3& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.tubes() != b.tubes()) {
    std::ostringstream os;
    os << op << ": shape mismatch " << a.rows() << "x" << a.cols() << "x" << a.tubes() << " vs "
       << b.rows() << "x" << b.cols() << "x" << b.tubes();
    throw ShapeError(os.str());
  }
}

// Elementwise combination a*x + b*y over complex entries; the result is real
// when both operands and both coefficients are real.
Tensor3 combine(Complex alpha, const Tensor3& x, Complex beta, const Tensor3& y) {
  require_same_shape(x, y, "tensor arithmetic");
  const bool real = x.is_real() && y.is_real() && alpha.imag() == 0.0 && beta.imag() == 0.0;
  const auto n = x.size();
  const auto xr = x.real_data(), xi = x.imag_data(), yr = y.real_data(), yi = y.imag_data();
  if (real) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = alpha.real() * xr[i] + beta.real() * yr[i];
    return Tensor3::from_real(x.rows(), x.cols(), x.tubes(), std::move(out));
  }
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex xv{xr[i], xi.empty() ? 0.0 : xi[i]};
    const Complex yv{yr[i], yi.empty() ? 0.0 : yi[i]};
    out[i] = alpha * xv + beta * yv;
  }
  return Tensor3::from_complex(x.rows(), x.cols(), x.tubes(), std::move(out));
}

}  // namespace

Tensor3::Tensor3() : re_(1, 0.0) {}

Tensor3::Tensor3(Index m, Index n, Index p, std::vector<double> re, std::vector<double> im)
    : m_(m), n_(n), p_(p), re_(std::move(re)), im_(std::move(im)) {}

Tensor3 Tensor3::zeros(Index m, Index n, Index p, ScalarKind kind) {
  require_dims(m, n, p);
  const auto len = volume(m, n, p);
  std::vector<double> im;
  if (kind == ScalarKind::complex) im.assign(len, 0.0);
  return Tensor3(m, n, p, std::vector<double>(len, 0.0), std::move(im));
}

Tensor3 Tensor3::from_real(Index m, Index n, Index p, std::vector<double> data) {
  require_dims(m, n, p);
  if (data.size() != volume(m, n, p)) {
    std::ostringstream os;
    os << "data length " << data.size() << " does not equal m*n*p = " << volume(m, n, p);
    throw ShapeError(os.str());
  }
  return Tensor3(m, n, p, std::move(data), {});
}

Tensor3 Tensor3::from_complex(Index m, Index n, Index p, std::vector<Complex> data) {
  require_dims(m, n, p);
  if (data.size() != volume(m, n, p)) {
    std::ostringstream os;
    os << "data length " << data.size() << " does not equal m*n*p = " << volume(m, n, p);
    throw ShapeError(os.str());
  }
  std::vector<double> re(data.size()), im(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    re[i] = data[i].real();
    im[i] = data[i].imag();
  }
  return Tensor3(m, n, p, std::move(re), std::move(im));
}

Tensor3 Tensor3::from_slices(std::span<const DenseMatrix> slices, std::optional<ScalarKind> kind) {
  if (slices.empty()) throw ShapeError("from_slices: at least one slice is required");
  const Index m = slices.front().rows();
  const Index n = slices.front().cols();
  const auto p = static_cast<Index>(slices.size());
  require_dims(m, n, p);
  std::vector<double> re(volume(m, n, p)), im(volume(m, n, p));
  bool any_imag = false;
  std::size_t idx = 0;
  for (const auto& s : slices) {
    if (s.rows() != m || s.cols() != n) throw ShapeError("from_slices: slices differ in shape");
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < n; ++j, ++idx) {
        re[idx] = s(i, j).real();
        im[idx] = s(i, j).imag();
        any_imag = any_imag || im[idx] != 0.0;
      }
    }
  }
  const auto resolved = kind.value_or(any_imag ? ScalarKind::complex : ScalarKind::real);
  if (resolved == ScalarKind::real) {
    if (any_imag) throw NumericError("from_slices: real kind requested for complex entries");
    im.clear();
  }
  return Tensor3(m, n, p, std::move(re), std::move(im));
}

double Tensor3::max_abs() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < re_.size(); ++i) {
    const double v = im_.empty() ? std::abs(re_[i]) : std::hypot(re_[i], im_[i]);
    best = std::max(best, v);
  }
  return best;
}

Tensor3 Tensor3::as_complex() const {
  if (!im_.empty()) return *this;
  return Tensor3(m_, n_, p_, re_, std::vector<double>(re_.size(), 0.0));
}

Tensor3 Tensor3::as_real(double tolerance) const {
  if (im_.empty()) return *this;
  double worst = 0.0;
  for (double v : im_) worst = std::max(worst, std::abs(v));
  if (worst > tolerance) {
    std::ostringstream os;
    os << "imaginary residue " << worst << " exceeds tolerance " << tolerance;
    throw NumericError(os.str());
  }
  return Tensor3(m_, n_, p_, re_, {});
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  if (a.m_ != b.m_ || a.n_ != b.n_ || a.p_ != b.p_) return false;
  if (a.re_ != b.re_) return false;
  const auto zero = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
  };
  if (a.im_.empty() || b.im_.empty()) return zero(a.im_) && zero(b.im_);
  return a.im_ == b.im_;
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) { return combine(1.0, a, 1.0, b); }
Tensor3 operator-(const Tensor3& a, const Tensor3& b) { return combine(1.0, a, -1.0, b); }
Tensor3 operator-(const Tensor3& a) { return combine(-1.0, a, 0.0, a); }
Tensor3 operator*(double alpha, const Tensor3& a) { return combine(alpha, a, 0.0, a); }
Tensor3 operator*(Complex alpha, const Tensor3& a) { return combine(alpha, a, 0.0, a); }

Tensor3 identity(Index n, Index p) {
  require_dims(n, n, p);
  std::vector<double> data(volume(n, n, p), 0.0);
  for (Index i = 0; i < n; ++i) data[static_cast<std::size_t>(i * n + i)] = 1.0;
  return Tensor3::from_real(n, n, p, std::move(data));
}

DenseMatrix frontal_slice(const Tensor3& t, Index k) {
  if (k < 0 || k >= t.tubes()) {
    std::ostringstream os;
    os << "frontal slice index " << k << " out of range [0, " << t.tubes() << ")";
    throw DomainError(os.str());
  }
  DenseMatrix out(t.rows(), t.cols());
  for (Index i = 0; i < t.rows(); ++i)
    for (Index j = 0; j < t.cols(); ++j) out(i, j) = t(i, j, k);
  return out;
}

DenseMatrix bcirc(const Tensor3& t) {
  const Index m = t.rows(), n = t.cols(), p = t.tubes();
  DenseMatrix out(m * p, n * p);
  for (Index k = 0; k < p; ++k) {
    const DenseMatrix slice = frontal_slice(t, k);
    // Slice k sits on the k-th block subdiagonal, wrapping around.
    for (Index col = 0; col < p; ++col) {
      const Index row = (col + k) % p;
      out.block(row * m, col * n, m, n) = slice;
    }
  }
  return out;
}

DenseMatrix unfold(const Tensor3& t) {
  const Index m = t.rows(), n = t.cols(), p = t.tubes();
  DenseMatrix out(m * p, n);
  for (Index k = 0; k < p; ++k) out.block(k * m, 0, m, n) = frontal_slice(t, k);
  return out;
}

Tensor3 fold(const DenseMatrix& m, Index p, std::optional<ScalarKind> kind) {
  if (p < 1 || m.rows() % p != 0) {
    std::ostringstream os;
    os << "fold: " << m.rows() << " rows are not divisible by p = " << p;
    throw ShapeError(os.str());
  }
  const Index rows = m.rows() / p;
  std::vector<DenseMatrix> slices;
  slices.reserve(static_cast<std::size_t>(p));
  for (Index k = 0; k < p; ++k) slices.emplace_back(m.block(k * rows, 0, rows, m.cols()));
  return Tensor3::from_slices(slices, kind);
}

Tensor3 conj_transpose(const Tensor3& t) {
  const Index p = t.tubes();
  std::vector<DenseMatrix> slices(static_cast<std::size_t>(p));
  for (Index k = 0; k < p; ++k) {
    const Index src = (p - k) % p;
    slices[static_cast<std::size_t>(k)] = frontal_slice(t, src).adjoint();
  }
  return Tensor3::from_slices(slices, t.kind());
}

Complex trace(const Tensor3& t, TraceConvention convention) {
  if (!t.square_slices()) {
    std::ostringstream os;
    os << "trace requires square slices, got " << t.rows() << "x" << t.cols();
    throw ShapeError(os.str());
  }
  Complex sum = 0.0;
  for (Index i = 0; i < t.rows(); ++i) sum += t(i, i, 0);
  return convention == TraceConvention::bcirc ? static_cast<double>(t.tubes()) * sum : sum;
}

double entry_norm(const Tensor3& t) {
  double sum = 0.0;
  for (double v : t.real_data()) sum += v * v;
  for (double v : t.imag_data()) sum += v * v;
  return std::sqrt(sum);
}

double frobenius_norm(const Tensor3& t) {
  return std::sqrt(static_cast<double>(t.tubes())) * entry_norm(t);
}

}  // namespace tspectral
