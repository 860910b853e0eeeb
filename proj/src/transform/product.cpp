#include <sstream>

#include "tspectral/error.hpp"
#include "tspectral/transform.hpp"

namespace tspectral {
namespace {

void require_conformable(const Tensor3& a, const Tensor3& b) {
  if (a.cols() != b.rows() || a.tubes() != b.tubes()) {
    std::ostringstream os;
    os << "T-product shape mismatch: " << a.rows() << "x" << a.cols() << "x" << a.tubes()
       << " * " << b.rows() << "x" << b.cols() << "x" << b.tubes();
    throw ShapeError(os.str());
  }
}

ScalarKind product_kind(const Tensor3& a, const Tensor3& b) {
  return a.is_real() && b.is_real() ? ScalarKind::real : ScalarKind::complex;
}

}  // namespace

Tensor3 tprod_dense(const Tensor3& a, const Tensor3& b) {
  require_conformable(a, b);
  const DenseMatrix product = bcirc(a) * unfold(b);
  return fold(product, a.tubes(), product_kind(a, b));
}

Tensor3 tprod_fft(const Tensor3& a, const Tensor3& b) {
  require_conformable(a, b);
  const auto kind = product_kind(a, b) == ScalarKind::real ? OutputKind::real : OutputKind::complex;
  return from_fourier(multiply(to_fourier(a), to_fourier(b)), kind);
}

}  // namespace tspectral
