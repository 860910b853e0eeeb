#pragma once

// Reference implementations used by the tests. Each one follows the textbook
// definition with explicit loops and only reads tensors through operator(),
// so none of them shares code with the library routine it checks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tspectral/tensor.hpp"

namespace oracle {

using tspectral::Complex;
using tspectral::DenseMatrix;
using tspectral::Index;
using tspectral::Tensor3;

inline std::string fixture(const std::string& name) {
  return std::string(TSPECTRAL_FIXTURE_DIR) + "/" + name;
}

inline DenseMatrix slice(const Tensor3& t, Index k) {
  DenseMatrix s(t.rows(), t.cols());
  for (Index i = 0; i < t.rows(); ++i)
    for (Index j = 0; j < t.cols(); ++j) s(i, j) = t(i, j, k);
  return s;
}

inline Tensor3 from_slices(const std::vector<DenseMatrix>& slices) {
  const Index m = slices[0].rows(), n = slices[0].cols();
  const auto p = static_cast<Index>(slices.size());
  std::vector<Complex> data;
  for (Index k = 0; k < p; ++k)
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < n; ++j) data.push_back(slices[static_cast<std::size_t>(k)](i, j));
  return Tensor3::from_complex(m, n, p, std::move(data));
}

// Block (i, j) is slice (i - j) mod p.
inline DenseMatrix bcirc(const Tensor3& t) {
  const Index m = t.rows(), n = t.cols(), p = t.tubes();
  DenseMatrix b = DenseMatrix::Zero(m * p, n * p);
  for (Index bi = 0; bi < p; ++bi)
    for (Index bj = 0; bj < p; ++bj) {
      const Index k = ((bi - bj) % p + p) % p;
      for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j) b(bi * m + i, bj * n + j) = t(i, j, k);
    }
  return b;
}

// C(k) = sum_j A((k - j) mod p) B(j).
inline Tensor3 tprod(const Tensor3& a, const Tensor3& b) {
  const Index p = a.tubes();
  std::vector<DenseMatrix> out;
  for (Index k = 0; k < p; ++k) {
    DenseMatrix c = DenseMatrix::Zero(a.rows(), b.cols());
    for (Index j = 0; j < p; ++j) c += slice(a, ((k - j) % p + p) % p) * slice(b, j);
    out.push_back(c);
  }
  return from_slices(out);
}

// Naive DFT along tubes with w = exp(-2 pi i / p), unnormalized.
inline std::vector<DenseMatrix> dft_slices(const Tensor3& t) {
  const Index p = t.tubes();
  std::vector<DenseMatrix> out;
  for (Index k = 0; k < p; ++k) {
    DenseMatrix s = DenseMatrix::Zero(t.rows(), t.cols());
    for (Index j = 0; j < p; ++j) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k * j) /
                           static_cast<double>(p);
      s += std::polar(1.0, angle) * slice(t, j);
    }
    out.push_back(s);
  }
  return out;
}

inline Eigen::VectorXcd dense_eigenvalues(const DenseMatrix& m) {
  Eigen::ComplexEigenSolver<DenseMatrix> solver(m, false);
  return solver.eigenvalues();
}

// Ascending eigenvalues of a Hermitian matrix.
inline Eigen::VectorXd hermitian_eigenvalues(const DenseMatrix& m) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(0.5 * (m + m.adjoint()),
                                                    Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// f applied to the spectrum of a Hermitian PSD matrix, negatives clamped.
template <class F>
DenseMatrix hermitian_apply(const DenseMatrix& m, F f) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(0.5 * (m + m.adjoint()));
  Eigen::VectorXd v = solver.eigenvalues();
  for (Index i = 0; i < v.size(); ++i) v(i) = f(std::max(v(i), 0.0));
  return solver.eigenvectors() * v.asDiagonal() * solver.eigenvectors().adjoint();
}

inline DenseMatrix psd_sqrt(const DenseMatrix& m) {
  return hermitian_apply(m, [](double x) { return std::sqrt(x); });
}

// Classical matrix Bures-Wasserstein distance.
inline double matrix_bures_wasserstein(const DenseMatrix& a, const DenseMatrix& b) {
  const DenseMatrix ra = psd_sqrt(a);
  const DenseMatrix middle = psd_sqrt(ra * b * ra);
  const double radicand = (a.trace() + b.trace() - 2.0 * middle.trace()).real();
  return std::sqrt(std::max(radicand, 0.0));
}

// Bures-Wasserstein distance computed directly on bcirc matrices, with the
// bcirc trace divided by `scale` (1 for the bcirc convention, p for slice1).
inline double bcirc_bures_wasserstein(const Tensor3& a, const Tensor3& b, double scale = 1.0) {
  const DenseMatrix ma = oracle::bcirc(a), mb = oracle::bcirc(b);
  const DenseMatrix ra = psd_sqrt(ma);
  const DenseMatrix middle = psd_sqrt(ra * mb * ra);
  const double radicand = (ma.trace() + mb.trace() - 2.0 * middle.trace()).real() / scale;
  return std::sqrt(std::max(radicand, 0.0));
}

inline double max_abs_diff(const Tensor3& a, const Tensor3& b) {
  double d = 0.0;
  for (Index k = 0; k < a.tubes(); ++k)
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j, k) - b(i, j, k)));
  return d;
}

inline bool same_shape(const Tensor3& a, const Tensor3& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.tubes() == b.tubes();
}

// Largest gap when each value of `a` is paired with the nearest unused value
// of `b`. Infinity when the sizes differ.
inline double multiset_gap(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return INFINITY;
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const Complex& x : a) {
    std::size_t best = b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!used[j] && (best == b.size() || std::abs(b[j] - x) < std::abs(b[best] - x))) best = j;
    used[best] = true;
    worst = std::max(worst, std::abs(b[best] - x));
  }
  return worst;
}

}  // namespace oracle
