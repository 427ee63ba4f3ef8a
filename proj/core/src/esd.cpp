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

#include "qcorr/esd.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/format.hpp"

namespace qcorr {

namespace {

void require_weight(double w) {
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("mixture weight w must lie in [0, 1], got " + format_double(w));
}

void require_rate(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("gamma must be positive and finite, got " + format_double(gamma));
  }
}

struct FCoeffs {
  double a0, a1, a2;
};

// Coefficients of f in powers of w; x = (2 nbar + 1) gamma t.
FCoeffs f_coeffs(double x, double nbar) {
  const double k = 2.0 * nbar + 1.0;
  const double sh = std::sinh(0.5 * x);
  const double br = 1.0 + 4.0 * nbar * (nbar + 1.0) * std::exp(0.5 * x) * std::cosh(0.5 * x);
  const double k2 = k * k;
  return {4.0 * std::exp(-3.0 * x) * sh * sh * br * br, 4.0 * k2 * std::exp(-3.5 * x) * sh * br,
          -2.0 * k2 * k2 * std::exp(-3.0 * x) * std::sinh(x)};
}

constexpr double kRelativeMargin = 1e-12;

// Concurrence written as a function of s = gamma t.
double thermal_concurrence_s(double s, double w, double nbar) {
  const double k = 2.0 * nbar + 1.0;
  const double f = thermal_concurrence_f(s, w, nbar);
  return std::max(0.0, (1.0 - w) * std::exp(-k * s) - std::sqrt(std::max(f, 0.0)) / (k * k));
}

// Bisects a predicate that is false at lo and true at hi.
template <typename Pred>
double bisect(double lo, double hi, double tol, Pred&& pred) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double concurrence_of(const DensityMatrix& rho) {
  if (is_x_shaped(rho, 1e-9)) return concurrence_x(XState::from_density(rho));
  return concurrence_general(rho);
}

}  // namespace

double concurrence_independent_mixture(double t, double w, double gamma) {
  return concurrence_thermal_independent(t, w, gamma, 0.0);
}

ESDResult esd_time_zero_T(double w, double gamma) {
  require_weight(w);
  require_rate(gamma);
  ESDResult r;
  if (w == 0.0) return r;
  r.gamma_tau = std::log((1.0 + std::sqrt(1.0 - 2.0 * w * (1.0 - w))) / (2.0 * w));
  r.dark_intervals.push_back({r.gamma_tau / gamma, std::numeric_limits<double>::infinity(), false});
  return r;
}

double thermal_concurrence_f(double gamma_t, double w, double nbar) {
  const FCoeffs c = f_coeffs((2.0 * nbar + 1.0) * gamma_t, nbar);
  return c.a0 + c.a1 * w + c.a2 * w * w;
}

double concurrence_thermal_independent(double t, double w, double gamma, double nbar) {
  require_weight(w);
  if (!(nbar >= 0.0)) throw DomainError("nbar must be non-negative, got " + format_double(nbar));
  return thermal_concurrence_s(gamma * t, w, nbar);
}

double default_esd_horizon(double nbar) { return 100.0 / (2.0 * nbar + 1.0); }

ESDResult esd_time_thermal(double w, double gamma, double nbar, double horizon_gamma_t) {
  require_weight(w);
  require_rate(gamma);
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw DomainError("nbar must be non-negative and finite, got " + format_double(nbar));
  }
  const double horizon = horizon_gamma_t > 0.0 ? horizon_gamma_t : default_esd_horizon(nbar);

  ESDResult r;
  if (w == 1.0) {
    r.gamma_tau = 0.0;
    r.dark_intervals.push_back({0.0, std::numeric_limits<double>::infinity(), false});
    return r;
  }

  const double k = 2.0 * nbar + 1.0;
  const double target = k * k * k * k * (1.0 - w) * (1.0 - w);
  // Scaled so the terms stay O(1) for large gamma t. A crossing must clear a
  // relative margin: at w = 0, nbar = 0 the residual creeps up to zero from
  // below like -2e^{-s} and round-off alone would report a death near s ~ 33.
  auto residual = [&](double s) { return std::exp(2.0 * k * s) * thermal_concurrence_f(s, w, nbar) - target; };
  auto dead = [&](double s) { return residual(s) > kRelativeMargin * target; };

  constexpr int kGrid = 100000;
  const double step = horizon / kGrid;
  double lo = -1.0;
  for (int i = 1; i <= kGrid; ++i) {
    const double s = i * step;
    if (dead(s)) {
      lo = (i - 1) * step;
      break;
    }
  }
  if (lo < 0.0) throw NoDeath(horizon);

  const double root = bisect(lo, lo + step, 1e-10, dead);

  // Independent check on the concurrence itself.
  auto zero = [&](double s) {
    const double lead = (1.0 - w) * std::exp(-k * s);
    return lead - std::sqrt(std::max(thermal_concurrence_f(s, w, nbar), 0.0)) / (k * k) <= -kRelativeMargin * lead;
  };
  double first_zero = -1.0;
  for (int i = 1; i <= kGrid; ++i) {
    if (zero(i * step)) {
      first_zero = bisect((i - 1) * step, i * step, 1e-10, zero);
      break;
    }
  }
  if (first_zero < 0.0 || std::abs(first_zero - root) > 1e-8) {
    throw CrossCheckFailure("ESD root " + format_double(root) + " disagrees with first zero of the concurrence " +
                            format_double(first_zero));
  }

  r.gamma_tau = root;
  r.dark_intervals.push_back({root / gamma, std::numeric_limits<double>::infinity(), false});
  return r;
}

std::vector<DarkInterval> find_dark_intervals(const std::vector<double>& times, const std::vector<double>& values,
                                              const ConcurrenceProbe& probe) {
  if (times.size() != values.size()) throw DomainError("times and values differ in length");
  std::vector<DarkInterval> out;
  auto is_dark = [&](double t) { return probe(t) <= kDarkThreshold; };
  auto is_lit = [&](double t) { return probe(t) > kDarkThreshold; };

  bool dark = false;
  double death = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!dark) {
      if (values[i] <= kDarkThreshold) {
        death = i == 0 ? times[0] : bisect(times[i - 1], times[i], kDarkRefineTol, is_dark);
        dark = true;
      }
    } else if (values[i] > kReviveThreshold) {
      // Revival starts after the last sample that was still dark.
      std::size_t j = i - 1;
      while (j > 0 && values[j] > kDarkThreshold) --j;
      const double rebirth = bisect(times[j], times[j + 1], kDarkRefineTol, is_lit);
      out.push_back({death, rebirth, true});
      dark = false;
    }
  }
  if (dark) out.push_back({death, times.back(), false});
  return out;
}

std::vector<DarkInterval> find_dark_intervals(const Trajectory& traj, const ConcurrenceProbe& probe) {
  std::vector<double> values;
  values.reserve(traj.times.size());
  if (traj.correlations.size() == traj.times.size()) {
    for (const auto& c : traj.correlations) values.push_back(c.concurrence);
  } else {
    for (const auto& s : traj.states) values.push_back(concurrence_of(s));
  }
  return find_dark_intervals(traj.times, values, probe);
}

std::vector<DarkInterval> find_dark_intervals(const Trajectory& traj) {
  const Liouvillian gen(traj.params);
  const double max_dt = traj.dt > 0.0 ? traj.dt : 1e-3;
  ConcurrenceProbe probe = [&](double t) {
    auto it = std::upper_bound(traj.times.begin(), traj.times.end(), t);
    const std::size_t idx = it == traj.times.begin() ? 0 : static_cast<std::size_t>(it - traj.times.begin()) - 1;
    const double from = traj.times[idx];
    if (t <= from) return concurrence_of(traj.states[idx]);
    return concurrence_of(validate(propagate(traj.states[idx].matrix(), gen, t - from, max_dt)));
  };
  return find_dark_intervals(traj, probe);
}

ESDResult esd_from_trajectory(const Trajectory& traj) {
  ESDResult r;
  r.dark_intervals = find_dark_intervals(traj);
  if (!r.dark_intervals.empty()) r.gamma_tau = traj.params.gamma() * r.dark_intervals.front().death;
  return r;
}

}  // namespace qcorr
