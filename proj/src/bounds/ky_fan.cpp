#include <sstream>

#include "tspectral/bounds.hpp"
#include "tspectral/error.hpp"
#include "tspectral/transform.hpp"

namespace tspectral {

KyFanResult ky_fan_sum(const Tensor3& h, Index k, KyFanSide side) {
  if (!h.square_slices()) throw ShapeError("ky_fan_sum requires square slices");
  if (k < 1 || k > h.rows()) {
    std::ostringstream os;
    os << "ky_fan_sum: k = " << k << " outside [1, " << h.rows() << "]";
    throw DomainError(os.str());
  }
  const FourierEig eig = fourier_hermitian_eig(h);
  const Index n = eig.n;
  const Index first = side == KyFanSide::max ? 0 : n - k;

  KyFanResult out;
  SpectralSlices u{k, n, {}};
  for (std::size_t s = 0; s < eig.values.size(); ++s) {
    out.value += eig.values[s].segment(first, k).sum();
    u.slices.emplace_back(eig.vectors[s].middleCols(first, k).adjoint());
  }
  out.optimizer = from_fourier(u, eig.real_input ? OutputKind::real : OutputKind::complex);

  const Tensor3 uh = conj_transpose(out.optimizer);
  out.isometry_residual = frobenius_norm(out.optimizer * uh - identity(k, h.tubes()));
  out.achieved = trace(out.optimizer * h * uh).real();
  return out;
}

}  // namespace tspectral
