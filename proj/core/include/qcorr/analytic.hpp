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

// Closed-form solutions of the master equation: full trajectories for a few
// initial states at zero temperature, and steady states at any temperature.

#include <functional>
#include <string>
#include <vector>

#include "qcorr/measures.hpp"
#include "qcorr/model.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Trajectory starting from make_mixture(0.5). Requires nbar == 0.
XState analytic_mixture(double t, const ModelParams& params);

/// Trajectory starting from make_werner(p); independent of J. Requires nbar == 0.
XState analytic_werner(double t, double p, const ModelParams& params);

/// Trajectory starting from make_mixture(w) for uncoupled qubits (J = Delta = 0).
XState analytic_independent_mixture(double t, double w, double gamma, double omega);

/// Zero-temperature steady state shared by every X-shaped initial state.
/// DegenerateParams when gamma == 0, DomainError when nbar != 0.
XState steady_state_zero_T(const ModelParams& params);

/// Steady state of the thermal master equation. DegenerateParams when gamma == 0.
XState steady_state_thermal(const ModelParams& params);

/// Steady-state measures from their closed forms where available
/// (concurrence, CC, MIN and, at nbar = 0, LQU); the remaining fields come
/// from the measures applied to steady_state_thermal.
CorrelationSet steady_correlations_thermal(const ModelParams& params);

/// Zero-temperature steady concurrence is positive iff |Delta| < this value.
double steady_entanglement_cutoff(double gamma, double omega);

/// A closed-form trajectory t -> rho(t).
using ClosedForm = std::function<XState(double)>;

struct ClosedFormDiscrepancy {
  std::string entry;        ///< rho11, rho22, rho33, rho44, rho14 or rho23
  double max_abs_error;
  double at_time;
};

/// Entries of the closed form that deviate from `reference` by more than tol.
std::vector<ClosedFormDiscrepancy> compare_closed_form(const XState& closed, const Matrix4& reference,
                                                       double t, double tol);
/// Same, for a closed form that need not be a valid state (X entries only).
std::vector<ClosedFormDiscrepancy> compare_closed_form(const Matrix4& closed, const Matrix4& reference,
                                                       double t, double tol);

}  // namespace qcorr
