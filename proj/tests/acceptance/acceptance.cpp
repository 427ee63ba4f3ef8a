// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qcorr/analytic.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/esd.hpp"
#include "qcorr/format.hpp"
#include "qcorr/measures.hpp"

namespace {

using namespace qcorr;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

const ModelParams kRef(0.1, 0.5, 1.0, 0.1, 0.0);

// 1. Steady-state values against the quoted numbers.
Verdict ac1() {
  Verdict v;
  const CorrelationSet closed = steady_correlations_thermal(kRef);
  const CorrelationSet direct = correlations(steady_state_zero_T(kRef).to_density(), {.cross_check = true});
  for (const auto& [name, got, paper] :
       {std::tuple{"C", closed.concurrence, 0.2999}, std::tuple{"LN", closed.log_negativity, 0.3784},
        std::tuple{"LQU", closed.lqu, 0.1597}, std::tuple{"C(measures)", direct.concurrence, 0.2999},
        std::tuple{"LN(measures)", direct.log_negativity, 0.3784}, std::tuple{"LQU(measures)", direct.lqu, 0.1597}}) {
    v.require(std::abs(got - paper) <= 5e-4, std::string(name) + " off by " + g(got - paper));
  }
  v.detail << " C=" << g(closed.concurrence) << " LN=" << g(closed.log_negativity) << " LQU=" << g(closed.lqu)
           << " (tol 5e-4)";
  return v;
}

// 2. Entanglement window in Delta from the measured steady concurrence.
Verdict ac2() {
  Verdict v;
  auto conc = [](double d) { return concurrence_general(steady_state_thermal(kRef.with_delta(d)).to_density()); };
  // coarse sweep, then bisection on the sign change
  double lo = 0.0, hi = 0.0;
  for (int i = 1; i <= 300; ++i) {
    const double d = 3.0 * i / 300;
    if (conc(d) <= 1e-12) {
      lo = 3.0 * (i - 1) / 300;
      hi = d;
      break;
    }
  }
  v.require(hi > 0.0, "no zero crossing in (0, 3]");
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (conc(mid) > 1e-12 ? lo : hi) = mid;
  }
  const double cutoff = 0.5 * (lo + hi);
  // golden-section search for the maximiser on (0, cutoff)
  double a = 0.01, b = cutoff - 0.01;
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a), d = a + r * (b - a);
  for (int it = 0; it < 80; ++it) {
    if (conc(c) > conc(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - r * (b - a);
    d = a + r * (b - a);
  }
  const double argmax = 0.5 * (a + b);
  v.require(std::abs(cutoff - 2.0025) <= 1e-3, "cutoff " + g(cutoff));
  v.require(std::abs(argmax - 0.6188) <= 1e-3, "argmax " + g(argmax));
  v.detail << " cutoff=" << g(cutoff) << " argmax=" << g(argmax) << " (tol 1e-3)";
  return v;
}

// 3. Integrator against every closed-form trajectory and the common steady state.
Verdict ac3() {
  Verdict v;
  double worst = 0.0;
  double worst_steady = 0.0;
  EvolveOptions opts{.stride = 100, .attach_correlations = false};
  for (double gamma : {0.1, 0.2}) {
    const ModelParams p = kRef.with_gamma(gamma);
    std::vector<std::pair<DensityMatrix, ClosedForm>> cases;
    cases.emplace_back(make_mixture(0.5).to_density(), [p](double t) { return analytic_mixture(t, p); });
    for (double q : {-1.0 / 3.0, 0.0, 0.5, 1.0}) {
      cases.emplace_back(make_werner(q).to_density(), [p, q](double t) { return analytic_werner(t, q, p); });
    }
    for (const auto& [rho0, closed] : cases) {
      const Trajectory tr = evolve(rho0, p, 50.0, 1e-3, opts);
      for (std::size_t i = 0; i < tr.times.size(); ++i) {
        worst = std::max(worst, (closed(tr.times[i]).to_matrix() - tr.states[i].matrix()).max_abs());
      }
      const Trajectory late = evolve(rho0, p, 150.0, 1e-3, {.stride = 150000, .attach_correlations = false});
      worst_steady =
          std::max(worst_steady, (late.states.back().matrix() - steady_state_zero_T(p).to_matrix()).max_abs());
    }
    const ModelParams free(0.0, 0.0, 1.0, gamma, 0.0);
    for (double w : {0.0, 0.2, 0.5, 0.8}) {
      const Trajectory tr = evolve(make_mixture(w).to_density(), free, 50.0, 1e-3, opts);
      for (std::size_t i = 0; i < tr.times.size(); ++i) {
        const XState x = analytic_independent_mixture(tr.times[i], w, gamma, 1.0);
        worst = std::max(worst, (x.to_matrix() - tr.states[i].matrix()).max_abs());
      }
    }
  }
  v.require(worst <= 1e-8, "trajectory deviation " + g(worst));
  v.require(worst_steady <= 1e-6, "steady deviation " + g(worst_steady));
  v.detail << " max|closed-numeric| on [0,50]=" << g(worst) << " (tol 1e-8), at t=150 vs steady=" << g(worst_steady)
           << " (tol 1e-6)";
  return v;
}

// 4. Sudden-death times.
Verdict ac4() {
  Verdict v;
  const double half = esd_time_zero_T(0.5, 0.1).gamma_tau;
  v.require(std::abs(half - std::log(1.0 + 1.0 / std::sqrt(2.0))) <= 1e-10, "w=1/2 closed form");
  double worst = 0.0;
  for (double w : {0.1, 0.3, 0.5, 0.8}) {
    worst = std::max(worst, std::abs(esd_time_thermal(w, 0.1, 0.0).gamma_tau - esd_time_zero_T(w, 0.1).gamma_tau));
  }
  v.require(worst <= 1e-8, "root vs closed form " + g(worst));
  bool mono_w = true, mono_n = true;
  double prev = INFINITY;
  for (int i = 1; i <= 50; ++i) {
    const double t = esd_time_thermal(i / 50.0, 0.1, 0.0).gamma_tau;
    mono_w = mono_w && t < prev;
    prev = t;
  }
  prev = INFINITY;
  for (int i = 0; i < 50; ++i) {
    const double t = esd_time_thermal(0.5, 0.1, i / 49.0).gamma_tau;
    mono_n = mono_n && t < prev;
    prev = t;
  }
  v.require(mono_w, "not strictly decreasing in w");
  v.require(mono_n, "not strictly decreasing in nbar");
  v.detail << " gamma*tau(1/2)=" << format_double(half) << " max|root-closed|=" << g(worst)
           << " decreasing in w: " << (mono_w ? "yes" : "no") << ", in nbar: " << (mono_n ? "yes" : "no");
  return v;
}

// 5. Closed forms against definitions on random X states.
Verdict ac5() {
  Verdict v;
  testing::Rng rng(20260101);
  double dc = 0.0, dn = 0.0, dd = 0.0;
  int min_mismatch = 0, branch = 0;
  for (int i = 0; i < 1000; ++i) {
    const XState x = testing::random_x_state(rng);
    const DensityMatrix d = x.to_density();
    dc = std::max(dc, std::abs(concurrence_x(x) - concurrence_general(d)));
    dn = std::max(dn, std::abs(negativity(d) - negativity_trace_norm(d)));
    dd = std::max(dd, std::abs(concurrence_dicke(to_dicke(x)) - concurrence_x(x)));
    if (std::abs(min_terms(x).x) > kMinBranchTol) {
      ++branch;
      if (min_trace(x) != correlated_coherence(x)) ++min_mismatch;
    }
  }
  v.require(dc <= 1e-8, "concurrence " + g(dc));
  v.require(dn <= 1e-10, "negativity " + g(dn));
  v.require(min_mismatch == 0, std::to_string(min_mismatch) + " MIN != CC");
  v.require(dd <= 1e-10, "Dicke " + g(dd));
  v.detail << " max|C_x-C_gen|=" << g(dc) << " max|N-N_tn|=" << g(dn) << " MIN==CC on " << branch
           << " x!=0 states, max|C_dicke-C_x|=" << g(dd);
  return v;
}

double bound_slack(const CorrelationSet& c) {
  const auto [nlo, nhi] = negativity_bounds(c.concurrence);
  const auto [llo, lhi] = log_negativity_bounds(c.concurrence);
  return std::min({c.negativity - nlo, nhi - c.negativity, c.log_negativity - llo, lhi - c.log_negativity});
}

// 6. Concurrence bound chains on trajectories and random states.
Verdict ac6() {
  Verdict v;
  double worst = INFINITY;
  std::size_t samples = 0;
  struct Scenario {
    DensityMatrix rho0;
    ModelParams p;
  };
  std::vector<Scenario> scenarios;
  for (double gamma : {0.1, 0.15, 0.2}) scenarios.push_back({make_mixture(0.5).to_density(), kRef.with_gamma(gamma)});
  for (double q : {-1.0 / 3.0, 0.5, 1.0}) scenarios.push_back({make_werner(q).to_density(), kRef});
  for (double d : {0.0, 0.2, 0.3, 0.4}) scenarios.push_back({make_werner(0.0).to_density(), kRef.with_delta(d)});
  for (double w : {0.2, 0.5}) scenarios.push_back({make_mixture(w).to_density(), ModelParams(0.0, 0.0, 1.0, 0.1, 0.3)});
  scenarios.push_back({make_mixture(0.5).to_density(), kRef.with_nbar(0.2)});
  for (const auto& s : scenarios) {
    const Trajectory tr = evolve(s.rho0, s.p, 100.0, 1e-3, {.stride = 10});
    for (const auto& c : tr.correlations) worst = std::min(worst, bound_slack(c));
    samples += tr.correlations.size();
  }
  testing::Rng rng(7);
  for (int i = 0; i < 1000; ++i) worst = std::min(worst, bound_slack(correlations(testing::random_x_state(rng).to_density())));
  v.require(worst >= -1e-10, "slack " + g(worst));
  v.detail << " min slack=" << g(worst) << " over " << samples << " trajectory samples + 1000 random states (need >= -1e-10)";
  return v;
}

// 7. Werner states are stationary without damping.
Verdict ac7() {
  Verdict v;
  double drift = 0.0, comm = 0.0;
  const ModelParams p = kRef.with_gamma(0.0);
  for (double q : {-1.0 / 3.0, 0.0, 0.5, 1.0}) {
    const Matrix4 w = make_werner(q).to_matrix();
    comm = std::max(comm, commutator(hamiltonian(p), w).max_abs());
    const Trajectory tr = evolve(make_werner(q).to_density(), p, 50.0, 1e-3, {.stride = 10, .attach_correlations = false});
    for (const auto& s : tr.states) drift = std::max(drift, (s.matrix() - w).max_abs());
  }
  v.require(drift <= 1e-10, "drift " + g(drift));
  v.require(comm <= 1e-12, "commutator " + g(comm));
  v.detail << " max drift=" << g(drift) << " (tol 1e-10) max|[H,rho_W]|=" << g(comm) << " (tol 1e-12)";
  return v;
}

std::array<double, 6> five_measures(const CorrelationSet& c) {
  return {c.concurrence, c.negativity, c.log_negativity, c.lqu, c.min_trace, c.correlated_coherence};
}

// 8. Correlations created by the bath from the maximally mixed state.
Verdict ac8() {
  Verdict v;
  const DensityMatrix mixed = make_werner(0.0).to_density();
  for (double d : {0.2, 0.3, 0.4}) {
    const Trajectory tr = evolve(mixed, kRef.with_delta(d), 200.0, 1e-3, {.stride = 100});
    std::array<double, 6> best{};
    for (const auto& c : tr.correlations) {
      const auto m = five_measures(c);
      for (std::size_t k = 0; k < m.size(); ++k) best[k] = std::max(best[k], m[k]);
    }
    const double least = *std::min_element(best.begin(), best.end());
    v.require(least > 1e-3, "Delta=" + g(d) + " weakest peak " + g(least));
    v.detail << " Delta=" << g(d) << ": min peak " << g(least) << ";";
  }
  const Trajectory zero = evolve(mixed, kRef.with_delta(0.0), 200.0, 1e-3, {.stride = 100});
  double largest = 0.0;
  for (const auto& c : zero.correlations)
    for (double m : five_measures(c)) largest = std::max(largest, m);
  v.require(largest <= 1e-10, "Delta=0 reaches " + g(largest));
  v.detail << " Delta=0: max " << g(largest) << " (tol 1e-10)";
  return v;
}

// 9. Entanglement is the first casualty of temperature.
Verdict ac9() {
  Verdict v;
  const ModelParams p(0.1, 0.5, 1.0, 0.01, 0.0);
  auto first_below = [&](const std::function<double(const CorrelationSet&)>& pick) {
    // geometric scan upward, then bisection; +inf if it never happens
    double lo = 0.0, n = 1e-4;
    if (pick(correlations(steady_state_thermal(p).to_density())) < 1e-6) return 0.0;
    while (n < 1e9 && pick(correlations(steady_state_thermal(p.with_nbar(n)).to_density())) >= 1e-6) {
      lo = n;
      n *= 1.5;
    }
    if (n >= 1e9) return static_cast<double>(INFINITY);
    double hi = n;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (pick(correlations(steady_state_thermal(p.with_nbar(mid)).to_density())) >= 1e-6 ? lo : hi) = mid;
    }
    return hi;
  };
  const double n_c = first_below([](const CorrelationSet& c) { return c.concurrence; });
  const double n_cc = first_below([](const CorrelationSet& c) { return c.correlated_coherence; });
  const double n_min = first_below([](const CorrelationSet& c) { return c.min_trace; });
  v.require(n_c < n_cc, "concurrence does not die first vs CC");
  v.require(n_c < n_min, "concurrence does not die first vs MIN");
  v.detail << " nbar where C<1e-6: " << g(n_c) << ", CC: " << g(n_cc) << ", MIN: " << g(n_min);
  return v;
}

// 10. Dark and revival periods of the concurrence.
Verdict ac10() {
  Verdict v;
  const Trajectory tr = evolve(make_mixture(0.5).to_density(), kRef, 100.0, 1e-3, {.stride = 10});
  const auto dark = find_dark_intervals(tr);
  v.require(!dark.empty(), "no dark interval");
  bool first_longest = true;
  for (std::size_t k = 1; k < dark.size(); ++k) first_longest = first_longest && dark[0].length() > dark[k].length();
  v.require(first_longest, "first interval is not the longest");

  const Liouvillian gen(kRef);
  auto series_intervals = [&](const Trajectory& t, const std::function<double(const CorrelationSet&)>& pick,
                              const std::function<double(const DensityMatrix&)>& measure) {
    std::vector<double> vals;
    for (const auto& c : t.correlations) vals.push_back(pick(c));
    ConcurrenceProbe probe = [&](double at) {
      const auto it = std::upper_bound(t.times.begin(), t.times.end(), at);
      const std::size_t i = static_cast<std::size_t>(it - t.times.begin()) - 1;
      return measure(validate(propagate(t.states[i].matrix(), Liouvillian(t.params), at - t.times[i], t.dt)));
    };
    return find_dark_intervals(t.times, vals, probe).size();
  };
  auto cc_of = [](const DensityMatrix& d) { return correlated_coherence_general(d); };
  const std::size_t cc_dark = series_intervals(tr, [](const CorrelationSet& c) { return c.correlated_coherence; }, cc_of);
  const std::size_t lqu_dark =
      series_intervals(tr, [](const CorrelationSet& c) { return c.lqu; }, [](const DensityMatrix& d) { return lqu(d); });
  std::size_t cc_other = 0;
  for (double gamma : {0.15, 0.2}) {
    const Trajectory t2 = evolve(make_mixture(0.5).to_density(), kRef.with_gamma(gamma), 100.0, 1e-3, {.stride = 10});
    cc_other += series_intervals(t2, [](const CorrelationSet& c) { return c.correlated_coherence; }, cc_of);
  }
  v.require(cc_dark == 0 && cc_other == 0, "CC has dark intervals");
  v.require(lqu_dark == 0, "LQU has dark intervals");
  v.detail << " concurrence dark intervals=" << dark.size();
  if (!dark.empty()) {
    v.detail << " lengths=";
    for (std::size_t k = 0; k < dark.size(); ++k) v.detail << (k ? "/" : "") << g(dark[k].length());
  }
  v.detail << "; CC dark=" << cc_dark + cc_other << " LQU dark=" << lqu_dark;
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"AC1 steady-state values", ac1},         {"AC2 entanglement cutoff", ac2},
      {"AC3 oracle equivalence", ac3},          {"AC4 ESD closed form", ac4},
      {"AC5 measure cross-validation", ac5},    {"AC6 bound chains", ac6},
      {"AC7 Werner invariance", ac7},           {"AC8 decoherence-induced correlations", ac8},
      {"AC9 thermal robustness ordering", ac9}, {"AC10 dark/revival structure", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " exception: " << e.what();
    }
    std::printf("%s %s:%s\n", v.pass ? "PASS" : "FAIL", name, v.detail.str().c_str());
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
