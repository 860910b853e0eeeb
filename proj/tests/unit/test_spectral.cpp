#include <cmath>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "tspectral/error.hpp"
#include "tspectral/io.hpp"
#include "tspectral/random.hpp"
#include "tspectral/spectral.hpp"
#include "tspectral/transform.hpp"

using namespace tspectral;

namespace {

Tensor3 fixture(const std::string& name) { return read_tensor(oracle::fixture(name)); }

double rel_residual(const Tensor3& x, const Tensor3& ref) {
  return frobenius_norm(x - ref) / std::max(1.0, frobenius_norm(ref));
}

std::vector<Complex> bcirc_spectrum(const Tensor3& t) {
  const Eigen::VectorXcd v = oracle::dense_eigenvalues(oracle::bcirc(t));
  return {v.data(), v.data() + v.size()};
}

}  // namespace

TEST(Eigenvalues, ExampleTwo) {
  const Spectrum s = t_eigenvalues(fixture("A2.json"));
  const double expected[] = {4 + std::sqrt(2.0), 4 - std::sqrt(2.0), 2, 0};
  ASSERT_EQ(s.values.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(s.values[i].real(), expected[i], 1e-12);
    EXPECT_EQ(s.values[i].imag(), 0.0);
  }
  // Reference values are truncated to two decimals (2.5858 appears as 2.58).
  const double printed[] = {5.41, 2.58, 2, 0};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s.values[i].real(), printed[i], 1e-2);
}

TEST(Eigenvalues, ExampleOne) {
  const Spectrum s = t_eigenvalues(fixture("A1.json"));
  const double r = std::sqrt(17.0);
  const double expected[] = {(5 + r) / 2, 3, 2, (5 - r) / 2};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s.values[i].real(), expected[i], 1e-12);
}

TEST(Eigenvalues, Identity) {
  const Spectrum s = t_eigenvalues(identity(2, 3));
  ASSERT_EQ(s.values.size(), 6u);
  for (const Complex& z : s.values) EXPECT_NEAR(std::abs(z - 1.0), 0.0, 1e-14);
}

TEST(Eigenvalues, FourierPathMatchesDenseOracle) {
  gen::Source src(41);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = src.size(1, 6), p = src.size(1, 5);
    const Tensor3 t = trial % 2 ? src.complex(n, n, p) : src.real(n, n, p);
    const Spectrum s = t_eigenvalues(t);
    ASSERT_EQ(static_cast<Index>(s.values.size()), n * p);
    EXPECT_LE(oracle::multiset_gap(s.values, bcirc_spectrum(t)), 1e-8);
    EXPECT_LE(oracle::multiset_gap(t_eigenvalues_dense(t).values, s.values), 1e-8);
  }
}

TEST(Eigenvalues, SortedDescendingWithSliceTies) {
  const Spectrum s = t_eigenvalues(identity(2, 3));
  for (std::size_t i = 1; i < s.slice.size(); ++i) EXPECT_LE(s.slice[i - 1], s.slice[i]);
  gen::Source src(42);
  const Spectrum r = t_eigenvalues(src.real(4, 4, 3));
  for (std::size_t i = 1; i < r.values.size(); ++i)
    EXPECT_GE(r.values[i - 1].real(), r.values[i].real());
}

TEST(Eigenvalues, HermitianSpectrumIsReal) {
  gen::Source src(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor3 h = src.hermitian(src.size(1, 5), src.size(1, 5), trial % 2 == 1);
    for (const Complex& z : t_eigenvalues(h).values) EXPECT_EQ(z.imag(), 0.0);
  }
}

TEST(Eigenvalues, NonSquareRejected) {
  EXPECT_THROW(t_eigenvalues(Tensor3::zeros(2, 3, 2)), ShapeError);
}

TEST(Structure, IsHermitian) {
  EXPECT_TRUE(is_hermitian(fixture("A2.json")).hermitian);
  EXPECT_TRUE(is_hermitian(identity(3, 4)).hermitian);
  EXPECT_FALSE(is_hermitian(fixture("A3_literal.json")).hermitian);
  EXPECT_GT(is_hermitian(fixture("A3_literal.json")).residual,
            is_hermitian(fixture("A3_literal.json")).tolerance);
  // Read as frontal slices, the example-3 tensor is Hermitian.
  EXPECT_TRUE(is_hermitian(fixture("A3.json")).hermitian);
}

TEST(Structure, IsPsd) {
  const DefinitenessCheck a2 = is_psd(fixture("A2.json"));
  EXPECT_TRUE(a2.holds);
  EXPECT_NEAR(a2.min_eigenvalue, 0.0, 1e-12);
  EXPECT_FALSE(is_pd(fixture("A2.json")).holds);
  EXPECT_FALSE(is_psd(identity(2, 2) - 2.0 * identity(2, 2)).holds);
  EXPECT_THROW(is_psd(fixture("A3_literal.json")), PreconditionError);
  EXPECT_FALSE(is_psd(fixture("A3.json")).holds);

  gen::Source src(44);
  for (int trial = 0; trial < 20; ++trial) {
    EXPECT_TRUE(is_psd(src.psd(src.size(1, 5), src.size(1, 5))).holds);
    EXPECT_TRUE(is_pd(src.psd(3, 3, 0.5)).holds);
  }
}

TEST(HermitianEig, Reconstructs) {
  gen::Source src(45);
  const Tensor3 a2 = fixture("A2.json");
  const EigFactors f = hermitian_eig(a2);
  EXPECT_LE(rel_residual(f.Q * f.L * conj_transpose(f.Q), a2), 1e-9);

  const EigFactors id = hermitian_eig(identity(3, 2));
  EXPECT_LE(rel_residual(id.Q * id.L * conj_transpose(id.Q), identity(3, 2)), 1e-12);
  EXPECT_LE(rel_residual(id.L, identity(3, 2)), 1e-12);

  const Tensor3 h = src.hermitian(4, 3, true);
  const EigFactors g = hermitian_eig(h);
  EXPECT_LE(frobenius_norm(g.Q * conj_transpose(g.Q) - identity(4, 3)), 1e-9);
  EXPECT_LE(rel_residual(g.Q * g.L * conj_transpose(g.Q), h), 1e-9);
  EXPECT_THROW(hermitian_eig(fixture("A3_literal.json")), PreconditionError);
}

TEST(HermitianEig, RealInputGivesRealFactors) {
  gen::Source src(46);
  const EigFactors f = hermitian_eig(src.hermitian(3, 4));
  EXPECT_TRUE(f.Q.is_real());
  EXPECT_TRUE(f.L.is_real());
}

TEST(TSvd, IdentityAndExampleOne) {
  const TSvdFactors id = t_svd(identity(2, 3));
  EXPECT_LE(rel_residual(id.S, identity(2, 3)), 1e-12);

  const std::vector<double> sv = t_singular_values(fixture("A1.json"));
  const double r = std::sqrt(17.0);
  const double expected[] = {(5 + r) / 2, 3, 2, (5 - r) / 2};
  ASSERT_EQ(sv.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(sv[i], expected[i], 1e-12);
}

TEST(TSvd, ReconstructsRectangular) {
  gen::Source src(47);
  for (int trial = 0; trial < 30; ++trial) {
    const Index m = src.size(1, 5), n = src.size(1, 5), p = src.size(1, 5);
    const Tensor3 a = trial % 2 ? src.complex(m, n, p) : src.real(m, n, p);
    const TSvdFactors f = t_svd(a);
    EXPECT_LE(rel_residual(f.U * f.S * conj_transpose(f.V), a), 1e-9);
    EXPECT_LE(frobenius_norm(f.U * conj_transpose(f.U) - identity(m, p)), 1e-9);
    EXPECT_LE(frobenius_norm(f.V * conj_transpose(f.V) - identity(n, p)), 1e-9);
    const SpectralSlices s = to_fourier(f.S);
    for (Index k = 0; k < p; ++k) {
      const DenseMatrix& d = s[k];
      for (Index i = 0; i < d.rows(); ++i)
        for (Index j = 0; j < d.cols(); ++j)
          if (i != j) EXPECT_LE(std::abs(d(i, j)), 1e-12);
      for (Index i = 0; i < std::min(m, n); ++i) {
        EXPECT_GE(d(i, i).real(), -1e-14);
        EXPECT_NEAR(d(i, i).imag(), 0.0, 1e-12);
        if (i > 0) EXPECT_LE(d(i, i).real(), d(i - 1, i - 1).real() + 1e-14);
      }
    }
    if (a.is_real()) {
      EXPECT_TRUE(f.U.is_real());
      EXPECT_TRUE(f.V.is_real());
    }
  }
}

TEST(TSvd, SingularValuesUnitarilyInvariant) {
  gen::Source src(48);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = src.size(1, 4), p = src.size(1, 4);
    const Tensor3 a = src.real(n, n, p);
    const Tensor3 u = hermitian_eig(src.hermitian(n, p, true)).Q;
    const Tensor3 v = hermitian_eig(src.hermitian(n, p)).Q;
    const auto s0 = t_singular_values(a);
    const auto s1 = t_singular_values(u * a * conj_transpose(v));
    ASSERT_EQ(s0.size(), s1.size());
    for (std::size_t i = 0; i < s0.size(); ++i) EXPECT_NEAR(s0[i], s1[i], 1e-9);
  }
}

TEST(TensorFunctions, SqrtAndPowers) {
  EXPECT_LE(rel_residual(t_function(identity(3, 2), TensorFunction::sqrt()), identity(3, 2)),
            1e-14);
  gen::Source src(49);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = src.size(1, 5), p = src.size(1, 5);
    const Tensor3 a = src.psd(n, p);
    const Tensor3 r = t_function(a, TensorFunction::sqrt());
    EXPECT_TRUE(r.is_real());
    EXPECT_TRUE(is_hermitian(r).hermitian);
    EXPECT_TRUE(is_psd(r).holds);
    EXPECT_LE(rel_residual(r * r, a), 1e-10);

    const Tensor3 pd = src.psd(n, p, 0.5);
    EXPECT_LE(rel_residual(t_function(pd, TensorFunction::pow(1.0)), pd), 1e-10);
    EXPECT_LE(rel_residual(t_function(pd, TensorFunction::pow(0.0)), identity(n, p)), 1e-12);
    const Tensor3 is = t_function(pd, TensorFunction::inv_sqrt());
    EXPECT_LE(rel_residual(is * pd * is, identity(n, p)), 1e-9);
  }
}

TEST(TensorFunctions, LogOfScalarTensor) {
  const Tensor3 l = t_function(3.0 * identity(2, 3), TensorFunction::log());
  EXPECT_LE(rel_residual(l, std::log(3.0) * identity(2, 3)), 1e-14);
}

TEST(TensorFunctions, DomainErrors) {
  const Tensor3 neg = -1.0 * identity(2, 2);
  EXPECT_THROW(t_function(neg, TensorFunction::sqrt()), DomainError);
  EXPECT_THROW(t_function(fixture("A2.json"), TensorFunction::log()), SingularityError);
  EXPECT_THROW(t_function(fixture("A2.json"), TensorFunction::inv_sqrt()), SingularityError);
  EXPECT_THROW(t_function(fixture("A3_literal.json"), TensorFunction::sqrt()), PreconditionError);
  // Singular but PSD is fine for sqrt.
  EXPECT_NO_THROW(t_function(fixture("A2.json"), TensorFunction::sqrt()));
}

TEST(PsdFactor, Reconstructs) {
  const Tensor3 m = psd_factor(identity(2, 3));
  EXPECT_LE(rel_residual(m * conj_transpose(m), identity(2, 3)), 1e-12);
  const Tensor3 f = psd_factor(fixture("A2.json"));
  EXPECT_LE(frobenius_norm(f * conj_transpose(f) - fixture("A2.json")), 1e-8);
  gen::Source src(50);
  const Tensor3 a = src.psd(5, 3);
  const Tensor3 g = psd_factor(a);
  EXPECT_LE(rel_residual(g * conj_transpose(g), a), 1e-8);
  EXPECT_THROW(psd_factor(identity(2, 2) - 2.0 * identity(2, 2)), DomainError);
}

TEST(RandomGenerators, Contracts) {
  EXPECT_EQ(random_psd(2, 2, 0), random_psd(2, 2, 0));
  EXPECT_NE(random_psd(2, 2, 0), random_psd(2, 2, 1));
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_TRUE(is_psd(random_psd(3, 4, seed)).holds);
  const Tensor3 one = random_psd(1, 1, 7);
  EXPECT_GE(one(0, 0, 0).real(), 0.0);

  Rng rng = trial_rng(5, 0);
  const Tensor3 u = random_partial_isometry(2, 4, 3, rng);
  EXPECT_LE(frobenius_norm(u * conj_transpose(u) - identity(2, 3)), 1e-12);
}

TEST(Concavity, TraceSqrtIsStrictlyConcave) {
  gen::Source src(51);
  const auto trace_sqrt = [](const Tensor3& x) {
    return trace(t_function(x, TensorFunction::sqrt())).real();
  };
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = src.size(1, 4), p = src.size(1, 4);
    const Tensor3 x = src.psd(n, p), y = src.psd(n, p);
    const double a = src.uniform(0.05, 0.95);
    const double lhs = trace_sqrt(a * x + (1 - a) * y);
    EXPECT_GT(lhs - (a * trace_sqrt(x) + (1 - a) * trace_sqrt(y)), 1e-12);
    EXPECT_NEAR(trace_sqrt(a * x + (1 - a) * x), trace_sqrt(x), 1e-10);
  }
}
