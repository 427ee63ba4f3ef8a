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

#pragma once

// Entanglement sudden death: closed-form and root-found death times for
// uncoupled qubits, and dark/revival intervals along numerical trajectories.

#include <functional>
#include <limits>
#include <vector>

#include "qcorr/dynamics.hpp"

namespace qcorr {

/// A maximal stretch of zero concurrence, in units of 1/omega.
struct DarkInterval {
  double death = 0.0;
  double rebirth = 0.0;  ///< end of the trajectory when !revived
  bool revived = true;

  double length() const noexcept { return rebirth - death; }
};

struct ESDResult {
  /// gamma * tau; +inf when entanglement never dies.
  double gamma_tau = std::numeric_limits<double>::infinity();
  std::vector<DarkInterval> dark_intervals;

  bool infinite() const noexcept { return gamma_tau == std::numeric_limits<double>::infinity(); }
};

/// Concurrence of make_mixture(w) evolving with J = Delta = 0 at zero temperature.
double concurrence_independent_mixture(double t, double w, double gamma);

/// gamma * tau = ln((1 + sqrt(1 - 2w(1 - w))) / (2w)); infinite at w = 0.
/// DomainError unless w in [0, 1] and gamma > 0.
ESDResult esd_time_zero_T(double w, double gamma);

/// f(t) = a0 + a1 w + a2 w^2 of the thermal concurrence, as a function of gamma*t.
double thermal_concurrence_f(double gamma_t, double w, double nbar);

/// Concurrence of make_mixture(w) for uncoupled qubits in a thermal bath.
double concurrence_thermal_independent(double t, double w, double gamma, double nbar);

/// Default search horizon in units of gamma*t: 100 / (2 nbar + 1).
double default_esd_horizon(double nbar);

/// Death time from the root of e^{2(2nbar+1) gamma t} f(t) = (2nbar+1)^4 (1-w)^2,
/// bracketed on a grid over [0, horizon] and bisected to 1e-10 in gamma*t. The
/// root is cross-checked against the first zero of the concurrence itself.
/// Returns gamma_tau = 0 for w = 1; throws NoDeath when no root exists within
/// the horizon (given in gamma*t; <= 0 selects the default).
ESDResult esd_time_thermal(double w, double gamma, double nbar, double horizon_gamma_t = 0.0);

/// Concurrence at an arbitrary time, used to refine interval endpoints.
using ConcurrenceProbe = std::function<double(double)>;

inline constexpr double kDarkThreshold = 1e-12;
inline constexpr double kReviveThreshold = 1e-9;
inline constexpr double kDarkRefineTol = 1e-6;

/// Maximal intervals with concurrence <= kDarkThreshold. A dark interval ends
/// only once the concurrence exceeds kReviveThreshold; both endpoints are
/// bisected to kDarkRefineTol using `probe`.
std::vector<DarkInterval> find_dark_intervals(const Trajectory& traj, const ConcurrenceProbe& probe);

/// As above, refining by re-integrating from the nearest earlier sample.
std::vector<DarkInterval> find_dark_intervals(const Trajectory& traj);

/// Same interval logic applied to any sampled scalar series.
std::vector<DarkInterval> find_dark_intervals(const std::vector<double>& times,
                                              const std::vector<double>& values,
                                              const ConcurrenceProbe& probe);

/// First death (as gamma * tau) plus every dark interval of the trajectory.
ESDResult esd_from_trajectory(const Trajectory& traj);

}  // namespace qcorr
