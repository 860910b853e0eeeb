#include "tspectral/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "tspectral/error.hpp"
#include "tspectral/geometry.hpp"
#include "tspectral/random.hpp"
#include "tspectral/spectral.hpp"
#include "tspectral/transform.hpp"

namespace tspectral {
namespace {

struct Trial {
  bool pass = true;
  double margin = std::numeric_limits<double>::infinity();
  std::string why;
  std::vector<BoundReport> failed_reports;
  // Auxiliary quantity whose maximum over trials goes into the notes.
  double aux = 0.0;

  void check(bool ok, double m, const std::string& what) {
    margin = std::min(margin, m);
    if (!ok && pass) why = what;
    if (!ok) pass = false;
  }

  void check(const BoundReport& r) {
    const double m = std::min(r.slack_lower, r.slack_upper);
    if (!r.satisfied) failed_reports.push_back(r);
    check(r.satisfied, m, r.context);
  }
};

using TrialFn = std::function<Trial(Rng&, Index, const SweepOptions&)>;

Index draw(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

double real_trace(const Tensor3& t) { return trace(t).real(); }

std::string describe(Index n, Index p) {
  std::ostringstream os;
  os << "n=" << n << " p=" << p;
  return os.str();
}

Trial vn_trial(Rng& rng, Index, const SweepOptions&) {
  const Index n = draw(rng, 1, 4), p = draw(rng, 1, 4);
  const Tensor3 a = random_psd(n, p, rng);
  const Tensor3 b = random_psd(n, p, rng);
  Trial t;
  t.check(vn_trace_bounds(a, b));
  if (!t.pass) t.why += " " + describe(n, p);
  return t;
}

Trial hermitian_trial(Rng& rng, Index trial, const SweepOptions&) {
  const Index n = draw(rng, 1, 4), p = draw(rng, 1, 4);
  const bool complex_entries = trial % 2 == 1;
  const Tensor3 a = random_hermitian(n, p, rng, complex_entries);
  const Tensor3 b = random_hermitian(n, p, rng, complex_entries);
  const HermitianTraceBounds h = hermitian_trace_bounds(a, b);
  Trial t;
  t.check(h.report);
  const double gap = std::abs(h.shifted_trace - h.shift_identity);
  t.check(h.shift_identity_holds, 1e-9 * std::max(1.0, std::abs(h.shift_identity)) - gap,
          "shift identity");
  if (!t.pass) t.why += " " + describe(n, p);
  return t;
}

Trial sandwich_trial(Rng& rng, Index, const SweepOptions&) {
  const Index n = draw(rng, 1, 4), p = draw(rng, 1, 4);
  const Tensor3 a = random_psd(n, p, rng);
  const Tensor3 b = random_psd(n, p, rng);
  Trial t;
  t.check(sandwich_bounds(a, b));
  if (!t.pass) t.why += " " + describe(n, p);
  return t;
}

Trial ratio_trial(Rng& rng, Index trial, const SweepOptions& options) {
  const Index n = draw(rng, 1, 4), p = draw(rng, 1, 4);
  const Tensor3 a = random_hermitian(n, p, rng, trial % 2 == 1);
  Trial t;
  for (Index s = 0; s < options.ratio_samples; ++s)
    t.check(extremal_ratio_bounds(a, random_psd(n, p, rng)));

  const Spectrum spectrum = t_eigenvalues(a);
  const double lo = extremal_ratio_bounds(a, extremal_witness(a, Extreme::min)).value;
  const double hi = extremal_ratio_bounds(a, extremal_witness(a, Extreme::max)).value;
  const double gap_lo = std::abs(lo - spectrum.min_real());
  const double gap_hi = std::abs(hi - spectrum.max_real());
  t.check(gap_lo <= 1e-6, 1e-6 - gap_lo, "lower endpoint not achieved");
  t.check(gap_hi <= 1e-6, 1e-6 - gap_hi, "upper endpoint not achieved");
  if (!t.pass) t.why += " " + describe(n, p);
  return t;
}

Trial kyfan_trial(Rng& rng, Index trial, const SweepOptions& options) {
  const Index n = draw(rng, 1, 4), p = draw(rng, 1, 3);
  const Tensor3 h = random_hermitian(n, p, rng, trial % 2 == 1);
  const double tr = real_trace(h);
  Trial t;
  double previous_max = 0.0;
  double previous_step = std::numeric_limits<double>::infinity();
  for (Index k = 1; k <= n; ++k) {
    const KyFanResult hi = ky_fan_sum(h, k, KyFanSide::max);
    const KyFanResult lo = ky_fan_sum(h, k, KyFanSide::min);
    const double tol = bound_tolerance(hi.value);
    for (const KyFanResult* r : {&hi, &lo}) {
      t.check(r->isometry_residual <= 1e-9, 1e-9 - r->isometry_residual, "optimizer not isometric");
      const double gap = std::abs(r->achieved - r->value);
      t.check(gap <= bound_tolerance(r->value), bound_tolerance(r->value) - gap,
              "optimizer does not achieve the sum");
    }
    for (Index s = 0; s < options.isometry_samples; ++s) {
      const Tensor3 u = random_partial_isometry(k, n, p, rng);
      const double v = real_trace(u * h * conj_transpose(u));
      t.check(v <= hi.value + tol, hi.value - v, "sampled isometry exceeds the max sum");
      t.check(v >= lo.value - bound_tolerance(lo.value), v - lo.value,
              "sampled isometry below the min sum");
    }
    // The k-th increment is the sum over slices of each slice's k-th largest
    // eigenvalue, so increments cannot grow.
    const double step = hi.value - previous_max;
    if (k > 1) t.check(step <= previous_step + tol, previous_step - step, "max sum not concave in k");
    previous_step = step;
    previous_max = hi.value;
    if (k == n) {
      const double gap = std::abs(hi.value - tr);
      const double allowed = 1e-9 * std::max(1.0, std::abs(tr));
      t.check(gap <= allowed, allowed - gap, "k = n sum differs from trace");
    }
  }
  if (!t.pass) t.why += " " + describe(n, p);
  return t;
}

double trace_sqrt(const Tensor3& x) { return real_trace(t_function(x, TensorFunction::sqrt())); }

Trial concavity_trial(Rng& rng, Index, const SweepOptions& options) {
  const Index n = draw(rng, 1, 4), p = draw(rng, 1, 4);
  const Tensor3 x = random_psd(n, p, rng);
  const Tensor3 y = random_psd(n, p, rng);
  const double a = options.concavity_weight;
  Trial t;
  const double margin =
      trace_sqrt(a * x + (1.0 - a) * y) - (a * trace_sqrt(x) + (1.0 - a) * trace_sqrt(y));
  t.check(margin > 1e-12, margin, "strict concavity");
  const double gap = std::abs(trace_sqrt(a * x + (1.0 - a) * x) - trace_sqrt(x));
  t.check(gap <= 1e-10, 1e-10 - gap, "equality at X = Y");
  if (!t.pass) t.why += " " + describe(n, p);
  return t;
}

Trial bw_axioms_trial(Rng& rng, Index, const SweepOptions&) {
  const Index n = draw(rng, 1, 3), p = draw(rng, 1, 3);
  const Tensor3 a = random_psd(n, p, rng);
  const Tensor3 b = random_psd(n, p, rng);
  const Tensor3 c = random_psd(n, p, rng);
  const double ab = dist_bures_wasserstein(a, b), ba = dist_bures_wasserstein(b, a);
  const double bc = dist_bures_wasserstein(b, c), ac = dist_bures_wasserstein(a, c);
  const double aa = dist_bures_wasserstein(a, a);
  Trial t;
  t.check(ab >= 0.0 && bc >= 0.0 && ac >= 0.0, std::min({ab, bc, ac}), "negative distance");
  t.check(std::abs(ab - ba) <= 1e-8, 1e-8 - std::abs(ab - ba), "symmetry");
  t.check(aa <= 1e-6, 1e-6 - aa, "d(A, A) != 0");
  t.check((ab <= 1e-6) == (frobenius_norm(a - b) <= 1e-6), ab, "identity of indiscernibles");
  t.check(ac <= ab + bc + 1e-8, ab + bc - ac, "triangle A-B-C");
  t.check(ab <= ac + bc + 1e-8, ac + bc - ab, "triangle A-C-B");
  t.check(bc <= ab + ac + 1e-8, ab + ac - bc, "triangle B-A-C");
  if (!t.pass) t.why += " " + describe(n, p);
  return t;
}

Trial relax_trial(Rng& rng, Index trial, const SweepOptions&) {
  const Index n = draw(rng, 1, 4), p = draw(rng, 1, 4);
  const Tensor3 a = trial % 2 == 0 ? random_hermitian(n, p, rng) : random_gaussian(n, n, p, rng);
  const Tensor3 b = trial % 4 < 2 ? random_psd(n, p, rng) : random_hermitian(n, p, rng);
  const RelaxedBounds r = symmetric_relax_bounds(a, b);
  Trial t;
  t.check(r.report);
  t.aux = r.symmetrization_residual;
  if (!t.pass) t.why += " " + describe(n, p);
  return t;
}

Trial midpoint_trial(Rng& rng, Index, const SweepOptions&) {
  const Index n = draw(rng, 1, 3), p = draw(rng, 1, 3);
  const Tensor3 shift = 0.1 * identity(n, p);
  const Tensor3 a = random_psd(n, p, rng) + shift;
  const Tensor3 b = random_psd(n, p, rng) + shift;
  const Tensor3 g = geodesic(a, b, 0.5);
  const double defect =
      dist_bures_wasserstein(a, g) + dist_bures_wasserstein(g, b) - dist_bures_wasserstein(a, b);
  Trial t;
  t.check(std::abs(defect) <= 2e-6, 2e-6 - std::abs(defect), "midpoint additivity");
  t.aux = std::abs(defect);
  if (!t.pass) t.why += " " + describe(n, p);
  return t;
}

struct Property {
  TrialFn fn;
  bool asserted;
  const char* aux_label = nullptr;
};

const std::map<std::string, Property>& properties() {
  static const std::map<std::string, Property> table{
      {"vn-bounds", {vn_trial, true}},
      {"hermitian-bounds", {hermitian_trial, true}},
      {"sandwich", {sandwich_trial, true}},
      {"ratio", {ratio_trial, true}},
      {"kyfan", {kyfan_trial, true}},
      {"concavity", {concavity_trial, true}},
      {"bw-metric-axioms", {bw_axioms_trial, true}},
      {"relax-bounds", {relax_trial, false, "max |tr(A*B) - tr(Abar*B)|"}},
      {"geodesic-midpoint", {midpoint_trial, false, "max |midpoint defect|"}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names{
      "vn-bounds", "hermitian-bounds", "sandwich",     "ratio",           "kyfan",
      "concavity", "bw-metric-axioms", "relax-bounds", "geodesic-midpoint"};
  return names;
}

SweepResult run_sweep(const std::string& property, const SweepOptions& options) {
  const auto it = properties().find(property);
  if (it == properties().end()) throw DomainError("unknown sweep property '" + property + "'");
  SweepResult out;
  out.property = property;
  out.asserted = it->second.asserted;
  out.trials = options.trials;
  double worst = std::numeric_limits<double>::infinity();
  double aux = 0.0;
  for (Index i = 0; i < options.trials; ++i) {
    Rng rng = trial_rng(options.seed, static_cast<std::uint64_t>(i));
    Trial t;
    try {
      t = it->second.fn(rng, i, options);
    } catch (const Error& e) {
      t.pass = false;
      t.margin = -std::numeric_limits<double>::infinity();
      t.why = e.what();
    }
    worst = std::min(worst, t.margin);
    aux = std::max(aux, t.aux);
    if (t.pass) {
      ++out.passed;
    } else {
      if (out.first_failure.empty()) {
        std::ostringstream os;
        os << "trial " << i << ": " << t.why;
        out.first_failure = os.str();
      }
      out.violations.insert(out.violations.end(), t.failed_reports.begin(), t.failed_reports.end());
    }
  }
  out.worst_margin = options.trials > 0 ? worst : 0.0;
  if (it->second.aux_label != nullptr) {
    std::ostringstream os;
    os << it->second.aux_label << " = " << aux;
    out.notes = os.str();
  }
  return out;
}

}  // namespace tspectral
