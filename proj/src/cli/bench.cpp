#include "tspectral/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>

#include <Eigen/QR>

#include "tspectral/bounds.hpp"
#include "tspectral/error.hpp"
#include "tspectral/geometry.hpp"
#include "tspectral/random.hpp"
#include "tspectral/spectral.hpp"
#include "tspectral/transform.hpp"

namespace tspectral {
namespace {

using Clock = std::chrono::steady_clock;

// Keeps results observable so the timed calls are not optimized away.
volatile double sink = 0.0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Builds the inputs for one grid point and returns the timed call.
std::function<void()> prepare(const std::string& op, Index n, Index p, Rng& rng) {
  if (op == "tprod-dense" || op == "tprod-fft") {
    auto a = std::make_shared<Tensor3>(random_gaussian(n, n, p, rng));
    auto b = std::make_shared<Tensor3>(random_gaussian(n, n, p, rng));
    const bool dense = op == "tprod-dense";
    return [a, b, dense] {
      const Tensor3 c = dense ? tprod_dense(*a, *b) : tprod_fft(*a, *b);
      sink = sink + c(0, 0, 0).real();
    };
  }
  if (op == "eig") {
    auto a = std::make_shared<Tensor3>(random_gaussian(n, n, p, rng));
    return [a] { sink = sink + t_eigenvalues_dense(*a).spectral_radius(); };
  }
  if (op == "bw-dist") {
    auto a = std::make_shared<Tensor3>(random_psd(n, p, rng));
    auto b = std::make_shared<Tensor3>(random_psd(n, p, rng));
    return [a, b] { sink = sink + dist_bures_wasserstein(*a, *b); };
  }
  if (op == "kyfan") {
    auto h = std::make_shared<Tensor3>(random_hermitian(n, p, rng));
    const Index k = std::max<Index>(1, n / 2);
    return [h, k] { sink = sink + ky_fan_sum(*h, k, KyFanSide::max).value; };
  }
  throw DomainError("unknown bench op '" + op + "'");
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Seconds per call, with enough calls per repetition to clear timer noise.
double time_call(const std::function<void()>& call, Index reps) {
  auto start = Clock::now();
  call();
  const double first = seconds_since(start);
  const auto inner = static_cast<Index>(std::max(1.0, std::ceil(2e-3 / std::max(first, 1e-9))));
  std::vector<double> samples;
  for (Index r = 0; r < reps; ++r) {
    start = Clock::now();
    for (Index i = 0; i < inner; ++i) call();
    samples.push_back(seconds_since(start) / static_cast<double>(inner));
  }
  return median(std::move(samples));
}

}  // namespace

const std::vector<std::string>& bench_ops() {
  static const std::vector<std::string> ops{"tprod-dense", "tprod-fft", "eig", "bw-dist", "kyfan"};
  return ops;
}

BenchGrid default_grid(const std::string& op) {
  BenchGrid g;
  if (op == "tprod-dense" || op == "tprod-fft") {
    g.ns = {8};
    g.ps = {32, 64, 128, 256};
  } else if (op == "eig") {
    g.ns = {8, 16, 32};
    g.ps = {8};
  } else if (op == "bw-dist" || op == "kyfan") {
    g.ns = {4};
    g.ps = {8, 16, 32, 64};
  } else {
    throw DomainError("unknown bench op '" + op + "'");
  }
  return g;
}

std::vector<BenchSample> run_bench(const std::string& op, const BenchGrid& grid) {
  if (std::find(bench_ops().begin(), bench_ops().end(), op) == bench_ops().end())
    throw DomainError("unknown bench op '" + op + "'");
  if (grid.reps < 1) throw DomainError("bench: reps must be positive");
  std::vector<BenchSample> out;
  std::uint64_t point = 0;
  for (const Index n : grid.ns) {
    for (const Index p : grid.ps) {
      if (n < 1 || p < 1) throw DomainError("bench: sizes must be positive");
      Rng rng = trial_rng(grid.seed, point++);
      const auto call = prepare(op, n, p, rng);
      out.push_back({op, n, p, time_call(call, grid.reps)});
    }
  }
  return out;
}

BenchFit fit_exponents(const std::vector<BenchSample>& samples) {
  std::set<Index> ns, ps;
  for (const auto& s : samples) {
    ns.insert(s.n);
    ps.insert(s.p);
  }
  const bool fit_n = ns.size() > 1, fit_p = ps.size() > 1;
  const Index cols = 1 + (fit_n ? 1 : 0) + (fit_p ? 1 : 0);
  BenchFit fit;
  if (cols == 1) return fit;

  const auto rows = static_cast<Index>(samples.size());
  Eigen::MatrixXd x(rows, cols);
  Eigen::VectorXd y(rows);
  for (Index i = 0; i < rows; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    Index c = 0;
    x(i, c++) = 1.0;
    if (fit_n) x(i, c++) = std::log(static_cast<double>(s.n));
    if (fit_p) x(i, c++) = std::log(static_cast<double>(s.p));
    y(i) = std::log(std::max(s.median_seconds, 1e-12));
  }
  const Eigen::VectorXd beta = x.colPivHouseholderQr().solve(y);
  Index c = 1;
  if (fit_n) fit.n_exponent = beta(c++);
  if (fit_p) fit.p_exponent = beta(c++);
  return fit;
}

void write_bench_csv(const std::vector<BenchSample>& samples, std::ostream& out) {
  out << "op,n,p,median_seconds\n";
  char buf[64];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.17g", s.median_seconds);
    out << s.op << ',' << s.n << ',' << s.p << ',' << buf << '\n';
  }
}

}  // namespace tspectral
