#pragma once

#include <cstdint>
#include <random>

#include "tspectral/tensor.hpp"

namespace tspectral {

using Rng = std::mt19937_64;

/// Independent stream for trial `trial` of a sweep seeded with `seed`, so
/// trials can run in any order and still see the same inputs.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Standard Gaussian entries.
Tensor3 random_gaussian(Index m, Index n, Index p, Rng& rng);

/// Real and imaginary parts independent standard Gaussians.
Tensor3 random_complex_gaussian(Index m, Index n, Index p, Rng& rng);

/// (G + G^H) / 2 for a Gaussian G; complex when `complex_entries`.
Tensor3 random_hermitian(Index n, Index p, Rng& rng, bool complex_entries = false);

/// M * M^H for a real standard-Gaussian M, symmetrized to be exactly Hermitian.
Tensor3 random_psd(Index n, Index p, Rng& rng);

/// Deterministic in `seed`.
Tensor3 random_psd(Index n, Index p, std::uint64_t seed);

/// k x n x p tensor with U * U^H = I_k: every Fourier slice is an
/// orthonormalized complex Gaussian k x n block.
Tensor3 random_partial_isometry(Index k, Index n, Index p, Rng& rng);

/// n x n x p unitary tensor (U * U^H = U^H * U = I).
Tensor3 random_unitary(Index n, Index p, Rng& rng);

}  // namespace tspectral
