#pragma once

#include <ostream>
#include <vector>

#include "tspectral/tensor.hpp"

namespace tspectral {

/// ||A - B||_F.
double dist_frobenius(const Tensor3& a, const Tensor3& b);

/// Bures-Wasserstein distance between PSD Hermitian tensors,
///
///   d(A, B) = [tr A + tr B - 2 tr (A^(1/2) * B * A^(1/2))^(1/2)]^(1/2),
///
/// evaluated slice by slice in the Fourier domain. A radicand in [-1e-8, 0)
/// is treated as zero; anything lower raises NumericError. Non-PSD input
/// raises DomainError.
double dist_bures_wasserstein(const Tensor3& a, const Tensor3& b,
                              TraceConvention convention = TraceConvention::bcirc);

struct PrincipalBuresWasserstein {
  /// Real part of the principal square root of the radicand.
  double distance = 0.0;
  Complex radicand;
  /// Imaginary part of the principal square root of the radicand.
  double imaginary = 0.0;
};

/// The same formula with principal (Schur-based) matrix square roots and no
/// definiteness requirement. Indefinite inputs give a complex radicand; the
/// result carries it along so callers can judge how meaningful the real part is.
PrincipalBuresWasserstein bures_wasserstein_principal(
    const Tensor3& a, const Tensor3& b, TraceConvention convention = TraceConvention::bcirc);

/// ||log A - log B||_F for positive definite A, B (SingularityError otherwise).
double dist_log_euclidean(const Tensor3& a, const Tensor3& b);

struct GeodesicOptions {
  /// When positive, eps * I is added to A before it is inverted.
  double regularization = 0.0;
};

/// G(t) = A^(1/2) * (A^(-1/2) * B * A^(-1/2))^t * A^(1/2) for PD A, PSD B and
/// t in [0, 1].
Tensor3 geodesic(const Tensor3& a, const Tensor3& b, double t, GeodesicOptions options = {});

struct GeodesicProfile {
  std::vector<double> ts;
  std::vector<double> traces;
  /// Empty unless retention was requested.
  std::vector<Tensor3> tensors;
};

/// Traces of G(t) at `num_samples` uniformly spaced t in [0, 1].
GeodesicProfile geodesic_trace_profile(const Tensor3& a, const Tensor3& b, Index num_samples,
                                       bool retain_tensors = false,
                                       GeodesicOptions options = {},
                                       TraceConvention convention = TraceConvention::bcirc);

/// Header `t,trace`, one row per sample, 17 significant digits.
void write_profile_csv(const GeodesicProfile& profile, std::ostream& out);

}  // namespace tspectral
