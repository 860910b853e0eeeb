#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tspectral/tensor.hpp"

namespace tspectral {

struct BenchSample {
  std::string op;
  Index n = 0;
  Index p = 0;
  double median_seconds = 0.0;
};

struct BenchGrid {
  std::vector<Index> ns;
  std::vector<Index> ps;
  Index reps = 5;
  std::uint64_t seed = 0;
};

/// Least-squares fit of log(time) = c + a log(n) + b log(p). An exponent is
/// absent when its dimension takes a single value on the grid.
struct BenchFit {
  std::optional<double> n_exponent;
  std::optional<double> p_exponent;
};

/// tprod-dense, tprod-fft, eig, bw-dist, kyfan.
const std::vector<std::string>& bench_ops();

/// Grid used when the caller supplies none.
BenchGrid default_grid(const std::string& op);

/// Median wall-clock time of `op` at every (n, p) of the grid. DomainError
/// for an unknown op.
std::vector<BenchSample> run_bench(const std::string& op, const BenchGrid& grid);

BenchFit fit_exponents(const std::vector<BenchSample>& samples);

/// Header `op,n,p,median_seconds`.
void write_bench_csv(const std::vector<BenchSample>& samples, std::ostream& out);

}  // namespace tspectral
