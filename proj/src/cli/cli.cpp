#include "tspectral/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tspectral/bench.hpp"
#include "tspectral/bounds.hpp"
#include "tspectral/error.hpp"
#include "tspectral/geometry.hpp"
#include "tspectral/io.hpp"
#include "tspectral/random.hpp"
#include "tspectral/spectral.hpp"
#include "tspectral/sweep.hpp"
#include "tspectral/transform.hpp"

namespace tspectral::cli {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed4(double x) {
  if (std::abs(x) < 5e-5) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string fixed4(Complex z) {
  if (std::abs(z.imag()) < 5e-5) return fixed4(z.real());
  return fixed4(z.real()) + (z.imag() < 0 ? "-" : "+") + fixed4(std::abs(z.imag())) + "i";
}

std::string full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json report_json(const BoundReport& r) {
  return {{"context", r.context}, {"lower", r.lower},
          {"satisfied", r.satisfied}, {"slack_lower", r.slack_lower},
          {"slack_upper", r.slack_upper}, {"upper", r.upper},
          {"value", r.value}};
}

std::uint64_t default_seed() {
  const char* env = std::getenv(seed_env);
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(seed_env) + " is not an unsigned integer: '" + env + "'");
  }
}

// Everything one invocation produces besides its exit code.
struct Run {
  Run(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  std::ostream& out;
  std::ostream& err;
  TraceConvention convention = TraceConvention::bcirc;
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::vector<BoundReport> reports;
  json timing = json::object();
  Clock::time_point mark = Clock::now();

  void lap(const std::string& phase) {
    const auto now = Clock::now();
    timing[phase] = std::chrono::duration<double>(now - mark).count();
    mark = now;
  }

  Tensor3 load(const std::string& key, const std::string& path) {
    inputs[key] = path;
    return read_tensor(path);
  }

  void print(const BoundReport& r) {
    reports.push_back(r);
    out << "context: " << r.context << '\n'
        << "lower: " << fixed4(r.lower) << '\n'
        << "value: " << fixed4(r.value) << '\n'
        << "upper: " << fixed4(r.upper) << '\n'
        << "slack_lower: " << fixed4(r.slack_lower) << '\n'
        << "slack_upper: " << fixed4(r.slack_upper) << '\n'
        << "satisfied: " << (r.satisfied ? "yes" : "no") << '\n';
  }

  json report() const {
    json bounds = json::array();
    for (const auto& r : reports) bounds.push_back(report_json(r));
    return {{"bound_reports", bounds}, {"command", command}, {"inputs", inputs},
            {"outputs", outputs}, {"timing", timing}};
  }
};

const char* convention_name(TraceConvention c) {
  return c == TraceConvention::bcirc ? "bcirc" : "slice1";
}

// --- tprod ------------------------------------------------------------------

struct TprodArgs {
  std::string a, b, out, path = "fft";
};

int cmd_tprod(Run& run, const TprodArgs& args) {
  const Tensor3 a = run.load("a", args.a);
  const Tensor3 b = run.load("b", args.b);
  run.inputs["path"] = args.path;
  run.lap("load");
  const Tensor3 c = tprod(a, b, args.path == "dense" ? ProductPath::dense : ProductPath::fft);
  run.lap("compute");
  if (!args.out.empty()) {
    write_tensor(c, args.out);
    run.outputs["tensor"] = args.out;
  }
  const Complex tr = c.square_slices() ? trace(c, run.convention) : Complex(NAN, 0.0);
  const double fro = frobenius_norm(c);
  if (c.square_slices()) {
    run.out << "trace: " << fixed4(tr) << '\n';
    run.outputs["trace"] = complex_json(tr);
  }
  run.out << "frobenius_norm: " << fixed4(fro) << '\n';
  run.outputs["frobenius_norm"] = fro;
  return ok;
}

// --- eig --------------------------------------------------------------------

struct EigArgs {
  std::string a;
  bool dense = false;
};

int cmd_eig(Run& run, const EigArgs& args) {
  const Tensor3 a = run.load("a", args.a);
  run.inputs["dense"] = args.dense;
  run.lap("load");
  const Spectrum s = args.dense ? t_eigenvalues_dense(a) : t_eigenvalues(a);
  run.lap("compute");
  json values = json::array();
  for (const Complex& z : s.values) {
    run.out << fixed4(z) << '\n';
    values.push_back(complex_json(z));
  }
  run.outputs["eigenvalues"] = values;
  return ok;
}

// --- bounds -----------------------------------------------------------------

struct BoundsArgs {
  std::string a, b, out;
  std::optional<double> shift;
  Index k = 1;
  std::string side = "max";
  std::string extreme = "max";
};

int report_exit(const BoundReport& r) { return r.satisfied ? ok : failure; }

int cmd_bounds(Run& run, const std::string& which, const BoundsArgs& args) {
  run.inputs["bound"] = which;
  const Tensor3 a = run.load("a", args.a);
  std::optional<Tensor3> b;
  if (!args.b.empty()) b = run.load("b", args.b);
  run.lap("load");
  const auto need_b = [&]() -> const Tensor3& {
    if (!b) throw UsageError("bounds " + which + " needs a second tensor");
    return *b;
  };

  if (which == "symmetrized") {
    const SymmetrizedBounds s = symmetrized_bounds(a);
    run.lap("compute");
    run.out << "mu_min: " << fixed4(s.mu_min) << '\n'
            << "mu_max: " << fixed4(s.mu_max) << '\n'
            << "rho_symmetrized: " << fixed4(s.radius_symmetrized) << '\n'
            << "rho_tensor: " << fixed4(s.radius_tensor) << '\n';
    std::size_t inside = 0;
    for (const auto& r : s.eigenvalue_reports) {
      run.reports.push_back(r);
      if (r.satisfied) ++inside;
    }
    run.out << "real eigenvalues in range: " << inside << '/' << s.eigenvalue_reports.size()
            << '\n';
    run.print(s.radius_report);
    run.outputs["mu_min"] = s.mu_min;
    run.outputs["mu_max"] = s.mu_max;
    run.outputs["rho_symmetrized"] = s.radius_symmetrized;
    run.outputs["rho_tensor"] = s.radius_tensor;
    return s.satisfied() ? ok : failure;
  }
  if (which == "rayleigh") {
    const double v = rayleigh_value(a, need_b());
    run.lap("compute");
    run.out << "rayleigh: " << fixed4(v) << '\n';
    run.outputs["rayleigh"] = v;
    return ok;
  }
  if (which == "vn") {
    const BoundReport r = vn_trace_bounds(a, need_b());
    run.lap("compute");
    run.print(r);
    return report_exit(r);
  }
  if (which == "hermitian") {
    const HermitianTraceBounds h =
        args.shift ? hermitian_trace_bounds(a, need_b(), *args.shift)
                   : hermitian_trace_bounds(a, need_b());
    run.lap("compute");
    run.print(h.report);
    run.out << "shift: " << fixed4(h.shift) << '\n'
            << "shifted_trace: " << fixed4(h.shifted_trace) << '\n'
            << "shift_identity: " << fixed4(h.shift_identity) << '\n'
            << "shift_identity_holds: " << (h.shift_identity_holds ? "yes" : "no") << '\n';
    run.outputs["shift"] = h.shift;
    run.outputs["shifted_trace"] = h.shifted_trace;
    run.outputs["shift_identity"] = h.shift_identity;
    return h.report.satisfied && h.shift_identity_holds ? ok : failure;
  }
  if (which == "sandwich") {
    const BoundReport r = sandwich_bounds(a, need_b());
    run.lap("compute");
    run.print(r);
    return report_exit(r);
  }
  if (which == "ratio") {
    const BoundReport r = extremal_ratio_bounds(a, need_b());
    run.lap("compute");
    run.print(r);
    return report_exit(r);
  }
  if (which == "relax") {
    const RelaxedBounds r = symmetric_relax_bounds(a, need_b());
    run.lap("compute");
    run.print(r.report);
    run.out << "symmetrization_residual: " << full(r.symmetrization_residual) << '\n'
            << "(recorded only)\n";
    run.outputs["symmetrization_residual"] = r.symmetrization_residual;
    return ok;
  }
  if (which == "witness") {
    const Extreme e = args.extreme == "min" ? Extreme::min : Extreme::max;
    const Tensor3 w = extremal_witness(a, e);
    const BoundReport r = extremal_ratio_bounds(a, w);
    run.lap("compute");
    if (!args.out.empty()) {
      write_tensor(w, args.out);
      run.outputs["tensor"] = args.out;
    }
    run.print(r);
    run.outputs["ratio"] = r.value;
    return report_exit(r);
  }
  if (which == "kyfan") {
    const KyFanResult r =
        ky_fan_sum(a, args.k, args.side == "min" ? KyFanSide::min : KyFanSide::max);
    run.lap("compute");
    if (!args.out.empty()) {
      write_tensor(r.optimizer, args.out);
      run.outputs["optimizer"] = args.out;
    }
    run.out << "value: " << fixed4(r.value) << '\n'
            << "achieved: " << fixed4(r.achieved) << '\n'
            << "isometry_residual: " << full(r.isometry_residual) << '\n';
    run.inputs["k"] = args.k;
    run.inputs["side"] = args.side;
    run.outputs["value"] = r.value;
    run.outputs["achieved"] = r.achieved;
    run.outputs["isometry_residual"] = r.isometry_residual;
    const bool good = r.isometry_residual <= 1e-9 &&
                      std::abs(r.achieved - r.value) <= bound_tolerance(r.value);
    return good ? ok : failure;
  }
  throw UsageError("unknown bounds subcommand '" + which + "'");
}

// --- dist -------------------------------------------------------------------

struct DistArgs {
  std::string a, b, metric = "bw";
};

int cmd_dist(Run& run, const DistArgs& args) {
  const Tensor3 a = run.load("a", args.a);
  const Tensor3 b = run.load("b", args.b);
  run.inputs["metric"] = args.metric;
  run.lap("load");
  if (args.metric == "bw-principal") {
    const PrincipalBuresWasserstein r = bures_wasserstein_principal(a, b, run.convention);
    run.lap("compute");
    run.out << "distance: " << full(r.distance) << '\n'
            << "imaginary: " << full(r.imaginary) << '\n';
    run.outputs["distance"] = r.distance;
    run.outputs["imaginary"] = r.imaginary;
    run.outputs["radicand"] = complex_json(r.radicand);
    return ok;
  }
  double d = 0.0;
  if (args.metric == "fro") {
    d = dist_frobenius(a, b);
  } else if (args.metric == "bw") {
    d = dist_bures_wasserstein(a, b, run.convention);
  } else {
    d = dist_log_euclidean(a, b);
  }
  run.lap("compute");
  run.out << "distance: " << full(d) << '\n';
  run.outputs["distance"] = d;
  return ok;
}

// --- geodesic ---------------------------------------------------------------

struct GeodesicArgs {
  std::string a, b, out;
  std::optional<double> t;
  std::optional<Index> samples;
  double regularization = 0.0;
};

int cmd_geodesic(Run& run, const GeodesicArgs& args) {
  if (args.t.has_value() == args.samples.has_value())
    throw UsageError("geodesic needs exactly one of --t and --samples");
  const Tensor3 a = run.load("a", args.a);
  const Tensor3 b = run.load("b", args.b);
  run.inputs["regularization"] = args.regularization;
  run.lap("load");
  const GeodesicOptions options{args.regularization};
  if (args.t) {
    run.inputs["t"] = *args.t;
    const Tensor3 g = geodesic(a, b, *args.t, options);
    run.lap("compute");
    if (!args.out.empty()) {
      write_tensor(g, args.out);
      run.outputs["tensor"] = args.out;
    }
    const Complex tr = trace(g, run.convention);
    run.out << "trace: " << fixed4(tr) << '\n';
    run.outputs["trace"] = complex_json(tr);
    return ok;
  }
  run.inputs["samples"] = *args.samples;
  const GeodesicProfile profile =
      geodesic_trace_profile(a, b, *args.samples, false, options, run.convention);
  run.lap("compute");
  if (args.out.empty()) {
    write_profile_csv(profile, run.out);
  } else {
    std::ofstream f(args.out);
    if (!f) throw ParseError("cannot open '" + args.out + "' for writing");
    write_profile_csv(profile, f);
    run.outputs["csv"] = args.out;
    run.out << "wrote " << profile.ts.size() << " samples to " << args.out << '\n';
  }
  run.outputs["traces"] = profile.traces;
  return ok;
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
  std::string kind, out;
  Index n = 2, p = 2;
  std::optional<std::uint64_t> seed;
  bool complex_entries = false;
};

int cmd_gen(Run& run, const GenArgs& args) {
  const std::uint64_t seed = args.seed ? *args.seed : default_seed();
  run.inputs["kind"] = args.kind;
  run.inputs["n"] = args.n;
  run.inputs["p"] = args.p;
  run.inputs["seed"] = seed;
  run.inputs["complex"] = args.complex_entries;
  Rng rng = trial_rng(seed, 0);
  Tensor3 t;
  if (args.kind == "psd") {
    if (args.complex_entries) {
      const Tensor3 m = random_complex_gaussian(args.n, args.n, args.p, rng);
      t = hermitian_part(m * conj_transpose(m));
    } else {
      t = random_psd(args.n, args.p, rng);
    }
  } else if (args.kind == "hermitian") {
    t = random_hermitian(args.n, args.p, rng, args.complex_entries);
  } else {
    t = args.complex_entries ? random_complex_gaussian(args.n, args.n, args.p, rng)
                             : random_gaussian(args.n, args.n, args.p, rng);
  }
  run.lap("compute");
  if (args.out.empty()) {
    run.out << tensor_to_json(t);
  } else {
    write_tensor(t, args.out);
    run.outputs["tensor"] = args.out;
  }
  return ok;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string a;
  bool hermitian = false, psd = false, pd = false;
};

int cmd_verify(Run& run, VerifyArgs args) {
  if (!args.hermitian && !args.psd && !args.pd) args.hermitian = args.psd = true;
  const Tensor3 a = run.load("a", args.a);
  run.lap("load");
  bool all = true;
  const HermitianCheck h = is_hermitian(a);
  if (args.hermitian) {
    run.out << "hermitian: " << (h.hermitian ? "yes" : "no") << " (residual " << full(h.residual)
            << ", tolerance " << full(h.tolerance) << ")\n";
    run.outputs["hermitian"] = {{"holds", h.hermitian}, {"residual", h.residual},
                                {"tolerance", h.tolerance}};
    all = all && h.hermitian;
  }
  const auto definiteness = [&](const char* name, auto check) {
    if (!h.hermitian) {
      run.out << name << ": no (not Hermitian)\n";
      run.outputs[name] = {{"holds", false}};
      all = false;
      return;
    }
    const DefinitenessCheck d = check(a);
    run.out << name << ": " << (d.holds ? "yes" : "no") << " (min eigenvalue "
            << full(d.min_eigenvalue) << ", threshold " << full(d.threshold) << ")\n";
    run.outputs[name] = {{"holds", d.holds},
                         {"min_eigenvalue", d.min_eigenvalue},
                         {"max_eigenvalue", d.max_eigenvalue},
                         {"threshold", d.threshold}};
    all = all && d.holds;
  };
  if (args.psd) definiteness("psd", [](const Tensor3& t) { return is_psd(t); });
  if (args.pd) definiteness("pd", [](const Tensor3& t) { return is_pd(t); });
  run.lap("compute");
  return all ? ok : failure;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string property;
  Index trials = 100;
  std::optional<std::uint64_t> seed;
};

int cmd_sweep(Run& run, const SweepArgs& args) {
  const auto& names = sweep_names();
  if (std::find(names.begin(), names.end(), args.property) == names.end())
    throw UsageError("unknown sweep property '" + args.property + "'");
  SweepOptions options;
  options.trials = args.trials;
  options.seed = args.seed ? *args.seed : default_seed();
  run.inputs["property"] = args.property;
  run.inputs["trials"] = args.trials;
  run.inputs["seed"] = options.seed;
  const SweepResult r = run_sweep(args.property, options);
  run.lap("compute");
  run.out << r.property << ": " << r.passed << '/' << r.trials << " passed";
  if (!r.asserted) run.out << " (recorded only, " << r.failed() << " violations)";
  run.out << '\n' << "worst margin: " << full(r.worst_margin) << '\n';
  if (!r.notes.empty()) run.out << r.notes << '\n';
  if (!r.first_failure.empty()) run.out << "first failure: " << r.first_failure << '\n';
  run.reports = r.violations;
  run.outputs["passed"] = r.passed;
  run.outputs["failed"] = r.failed();
  run.outputs["asserted"] = r.asserted;
  run.outputs["worst_margin"] = r.worst_margin;
  run.outputs["notes"] = r.notes;
  run.outputs["first_failure"] = r.first_failure;
  return r.ok() ? ok : failure;
}

// --- bench ------------------------------------------------------------------

struct BenchArgs {
  std::string op, out;
  std::vector<Index> ns, ps;
  Index reps = 5;
  std::optional<std::uint64_t> seed;
};

int cmd_bench(Run& run, const BenchArgs& args) {
  BenchGrid grid = default_grid(args.op);
  if (!args.ns.empty()) grid.ns = args.ns;
  if (!args.ps.empty()) grid.ps = args.ps;
  grid.reps = args.reps;
  grid.seed = args.seed ? *args.seed : default_seed();
  run.inputs["op"] = args.op;
  run.inputs["n"] = grid.ns;
  run.inputs["p"] = grid.ps;
  run.inputs["reps"] = grid.reps;
  run.inputs["seed"] = grid.seed;
  const auto samples = run_bench(args.op, grid);
  const BenchFit fit = fit_exponents(samples);
  run.lap("compute");

  if (args.out.empty()) {
    write_bench_csv(samples, run.out);
  } else {
    std::ofstream f(args.out);
    if (!f) throw ParseError("cannot open '" + args.out + "' for writing");
    write_bench_csv(samples, f);
    run.outputs["csv"] = args.out;
  }
  const std::string prefix = args.out.empty() ? "# " : "";
  if (fit.n_exponent) {
    run.out << prefix << "n_exponent: " << fixed4(*fit.n_exponent) << '\n';
    run.outputs["n_exponent"] = *fit.n_exponent;
  }
  if (fit.p_exponent) {
    run.out << prefix << "p_exponent: " << fixed4(*fit.p_exponent) << '\n';
    run.outputs["p_exponent"] = *fit.p_exponent;
  }
  return ok;
}

void write_report(const Run& run, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open report '" + path + "' for writing");
  f << run.report().dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral toolkit for third-order tensors under the T-product", "tspectral"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string convention = "bcirc";
  std::string report_path;
  app.add_option("--convention", convention, "Trace convention")
      ->check(CLI::IsMember({"bcirc", "slice1"}));
  app.add_option("--report", report_path, "Write a JSON run report to this file");

  const auto seed_option = [](CLI::App* sub, std::optional<std::uint64_t>& seed) {
    sub->add_option("--seed", seed,
                    std::string("Random seed (default: $") + seed_env + " or 0)");
  };

  TprodArgs tprod_args;
  auto* tprod_cmd = app.add_subcommand("tprod", "T-product C = A * B");
  tprod_cmd->add_option("a", tprod_args.a, "Left tensor file")->required();
  tprod_cmd->add_option("b", tprod_args.b, "Right tensor file")->required();
  tprod_cmd->add_option("-o,--out", tprod_args.out, "Output tensor file");
  tprod_cmd->add_option("--path", tprod_args.path, "Algorithm")
      ->check(CLI::IsMember({"dense", "fft"}));

  EigArgs eig_args;
  auto* eig_cmd = app.add_subcommand("eig", "T-eigenvalues (the bcirc spectrum)");
  eig_cmd->add_option("a", eig_args.a, "Tensor file")->required();
  eig_cmd->add_flag("--dense", eig_args.dense, "Use the dense bcirc eigensolver");

  std::string bounds_which;
  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "Check a trace or eigenvalue bound");
  bounds_cmd->add_option("bound", bounds_which, "Which bound")
      ->required()
      ->check(CLI::IsMember({"symmetrized", "rayleigh", "vn", "hermitian", "sandwich", "ratio",
                             "relax", "witness", "kyfan"}));
  bounds_cmd->add_option("a", bounds_args.a, "First tensor file")->required();
  bounds_cmd->add_option("b", bounds_args.b, "Second tensor file");
  bounds_cmd->add_option("-o,--out", bounds_args.out, "Output tensor (witness, kyfan)");
  bounds_cmd->add_option("--shift", bounds_args.shift, "Identity shift (hermitian)");
  bounds_cmd->add_option("--k", bounds_args.k, "Number of eigenvalues (kyfan)");
  bounds_cmd->add_option("--side", bounds_args.side, "kyfan side")
      ->check(CLI::IsMember({"max", "min"}));
  bounds_cmd->add_option("--extreme", bounds_args.extreme, "witness endpoint")
      ->check(CLI::IsMember({"max", "min"}));

  DistArgs dist_args;
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two tensors");
  dist_cmd->add_option("a", dist_args.a, "First tensor file")->required();
  dist_cmd->add_option("b", dist_args.b, "Second tensor file")->required();
  dist_cmd->add_option("--metric", dist_args.metric, "Metric")
      ->check(CLI::IsMember({"fro", "bw", "bw-principal", "le"}));

  GeodesicArgs geo_args;
  auto* geo_cmd = app.add_subcommand("geodesic", "Geodesic interpolation G(t)");
  geo_cmd->add_option("a", geo_args.a, "Start tensor file (positive definite)")->required();
  geo_cmd->add_option("b", geo_args.b, "End tensor file (PSD)")->required();
  geo_cmd->add_option("--t", geo_args.t, "Single parameter in [0, 1]");
  geo_cmd->add_option("--samples", geo_args.samples, "Trace profile with this many samples")
      ->check(CLI::PositiveNumber);
  geo_cmd->add_option("-o,--out", geo_args.out, "Output tensor (--t) or CSV (--samples)");
  geo_cmd->add_option("--regularization", geo_args.regularization, "Add eps * I to A");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random tensor");
  gen_cmd->add_option("kind", gen_args.kind, "psd, hermitian or random")
      ->required()
      ->check(CLI::IsMember({"psd", "hermitian", "random"}));
  gen_cmd->add_option("--n", gen_args.n, "Slice size")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p", gen_args.p, "Number of frontal slices")->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--out", gen_args.out, "Output tensor file (default stdout)");
  gen_cmd->add_flag("--complex", gen_args.complex_entries, "Complex entries");
  seed_option(gen_cmd, gen_args.seed);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check structural properties");
  verify_cmd->add_option("a", verify_args.a, "Tensor file")->required();
  verify_cmd->add_flag("--hermitian", verify_args.hermitian, "Check A = A^H");
  verify_cmd->add_flag("--psd", verify_args.psd, "Check positive semidefiniteness");
  verify_cmd->add_flag("--pd", verify_args.pd, "Check positive definiteness");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Randomized property sweep");
  sweep_cmd->add_option("property", sweep_args.property, "Property name")->required();
  sweep_cmd->add_option("--trials", sweep_args.trials, "Number of trials")
      ->check(CLI::NonNegativeNumber);
  seed_option(sweep_cmd, sweep_args.seed);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Timing benchmark with exponent fit");
  bench_cmd->add_option("op", bench_args.op, "Operation")
      ->required()
      ->check(CLI::IsMember(bench_ops()));
  bench_cmd->add_option("--n", bench_args.ns, "Slice sizes")->delimiter(',');
  bench_cmd->add_option("--p", bench_args.ps, "Tube lengths")->delimiter(',');
  bench_cmd->add_option("--reps", bench_args.reps, "Repetitions per point")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("-o,--out", bench_args.out, "CSV output file (default stdout)");
  seed_option(bench_cmd, bench_args.seed);

  std::vector<const char*> argv{"tspectral"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  Run run(out, err);
  run.convention = convention == "slice1" ? TraceConvention::slice1 : TraceConvention::bcirc;
  run.inputs["convention"] = convention_name(run.convention);
  const auto started = Clock::now();
  int code = ok;
  try {
    if (*tprod_cmd) {
      run.command = "tprod";
      code = cmd_tprod(run, tprod_args);
    } else if (*eig_cmd) {
      run.command = "eig";
      code = cmd_eig(run, eig_args);
    } else if (*bounds_cmd) {
      run.command = "bounds";
      code = cmd_bounds(run, bounds_which, bounds_args);
    } else if (*dist_cmd) {
      run.command = "dist";
      code = cmd_dist(run, dist_args);
    } else if (*geo_cmd) {
      run.command = "geodesic";
      code = cmd_geodesic(run, geo_args);
    } else if (*gen_cmd) {
      run.command = "gen";
      code = cmd_gen(run, gen_args);
    } else if (*verify_cmd) {
      run.command = "verify";
      code = cmd_verify(run, verify_args);
    } else if (*sweep_cmd) {
      run.command = "sweep";
      code = cmd_sweep(run, sweep_args);
    } else if (*bench_cmd) {
      run.command = "bench";
      code = cmd_bench(run, bench_args);
    }
    run.timing["total"] = std::chrono::duration<double>(Clock::now() - started).count();
    if (!report_path.empty()) write_report(run, report_path);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
  return code;
}

}  // namespace tspectral::cli
