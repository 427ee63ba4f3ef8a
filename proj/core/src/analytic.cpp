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

#include "qcorr/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/format.hpp"

namespace qcorr {

namespace {

void require_zero_temperature(const ModelParams& params, const char* what) {
  if (params.nbar() != 0.0) {
    throw DomainError(std::string(what) + " is a zero-temperature solution; got nbar = " +
                      format_double(params.nbar()));
  }
}

void require_damping(const ModelParams& params) {
  if (params.gamma() == 0.0) throw DegenerateParams("gamma = 0 has no unique steady state");
}

}  // namespace

XState analytic_mixture(double t, const ModelParams& params) {
  require_zero_temperature(params, "analytic_mixture");
  const double j = params.j();
  const double d = params.delta();
  const double w = params.omega();
  const double g = params.gamma();
  const double om = params.big_omega();
  const double g2 = g * g;
  const double om2 = om * om;
  const double om3 = om2 * om;
  const double lor = g2 + 4.0 * om2;  // gamma^2 + 4 Omega^2

  const double e1 = std::exp(-g * t);
  const double e2 = std::exp(-2.0 * g * t);
  const double s2 = std::sin(2.0 * om * t);
  const double c2 = std::cos(2.0 * om * t);
  const double c2j = std::cos(2.0 * j * t);
  const double s2j = std::sin(2.0 * j * t);

  const double r11 = (4.0 * om * d * d + e2 * om * (g2 + 4.0 * w * (d + w)) +
                      2.0 * d * e1 * (g * (w - 2.0 * d) * s2 - 2.0 * w * om * c2)) /
                     (4.0 * om * lor);

  const double r14_re = (-8.0 * d * w * om3 + e1 * w * om * (g2 * (w - 2.0 * d) + 4.0 * w * om2) * c2 +
                         d * om * e1 * (lor * (d + 2.0 * w) + 4.0 * g * w * om * s2)) /
                        (4.0 * om3 * lor);
  const double r14_im =
      -(4.0 * g * d * om + e1 * ((g2 * (w - 2.0 * d) + 4.0 * w * om2) * s2 - 4.0 * g * d * om * c2)) /
      (4.0 * om * lor);

  // The omega (gamma^2 + 4 Omega^2)(Delta + 2 omega) term decays as e^{-gamma t};
  // the remaining Omega^2 (gamma^2 + 4 omega (Delta + omega)) term as e^{-2 gamma t}.
  const double r22 = (4.0 * d * d * om3 +
                      e1 * (om3 * lor * c2j + g * d * (g * om * (2.0 * d - w) * c2 - 2.0 * w * om2 * s2)) -
                      e2 * om * om2 * (g2 + 4.0 * w * (d + w)) + e1 * om * w * lor * (d + 2.0 * w)) /
                     (4.0 * om3 * lor);
  const double r33 = r22 - 0.5 * e1 * c2j;
  const double r44 = 1.0 - (r11 + r22 + r33);
  return XState(r11, r22, r33, r44, {r14_re, r14_im}, {0.0, 0.25 * e1 * s2j});
}

XState analytic_werner(double t, double p, const ModelParams& params) {
  require_zero_temperature(params, "analytic_werner");
  if (!(p >= -1.0 / 3.0 && p <= 1.0)) {
    throw DomainError("Werner parameter p must lie in [-1/3, 1], got " + format_double(p));
  }
  const double d = params.delta();
  const double w = params.omega();
  const double g = params.gamma();
  const double om = params.big_omega();
  const double g2 = g * g;
  const double d2 = d * d;
  const double w2 = w * w;
  const double om2 = om * om;
  const double om3 = om2 * om;
  const double lor = g2 + 4.0 * om2;

  const double e1 = std::exp(-g * t);
  const double e2 = std::exp(-2.0 * g * t);
  const double s2 = std::sin(2.0 * om * t);
  const double c2 = std::cos(2.0 * om * t);
  const double s1 = std::sin(om * t);

  const double r11 =
      (4.0 * d2 * om - 4.0 * d2 * g * e1 * s2 + om * e2 * (4.0 * w2 - 4.0 * om2 * p + g2 * (1.0 - p))) /
      (4.0 * om * lor);

  const cplx i{0.0, 1.0};
  const cplx bracket = -4.0 * i * w * om3 - 2.0 * i * g2 * w * om * s1 * s1 + g2 * om2 * s2 +
                       2.0 * g * om2 * (om * c2 - i * w * s2);
  const cplx r14 = i * d / (2.0 * om3 * lor) * (-2.0 * (g - 2.0 * i * w) * om3 + e1 * bracket);

  const double r22 =
      (4.0 * om2 * (d2 + e2 * (p * d2 + (p - 1.0) * w2) + 2.0 * w2 * e1) +
       g2 * ((p - 1.0) * om2 * e2 + 2.0 * e1 * (d2 * c2 + w2))) /
      (4.0 * om2 * lor);

  const double r44 = (4.0 * om3 * (g2 + 3.0 * w2 + om2) - om3 * e2 * (lor * p - (g2 + 4.0 * w2)) -
                      4.0 * w2 * om * lor * e1 + 4.0 * g * d2 * e1 * (om2 * s2 - g * om * c2)) /
                     (4.0 * om3 * lor);

  return XState(r11, r22, r22, r44, r14, -0.5 * p * e1);
}

XState analytic_independent_mixture(double t, double w, double gamma, double omega) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw DomainError("mixture weight w must lie in [0, 1], got " + format_double(w));
  }
  const double half = 0.5 * (1.0 - w);
  const double sh = std::sinh(0.5 * gamma * t);
  const double ch = std::cosh(0.5 * gamma * t);
  const double e32 = std::exp(-1.5 * gamma * t);
  const double e2 = std::exp(-2.0 * gamma * t);

  const double r11 = half * e2;
  const cplx r14 = half * std::exp(cplx{-gamma * t, -2.0 * omega * t});
  const double r22 = e32 * (sh + w * ch);
  const double r33 = (1.0 - w) * e32 * sh;
  const double r44 = half * e2 + 2.0 * std::exp(-0.5 * gamma * t) * sh;
  return XState(r11, r22, r33, r44, r14, 0.0);
}

XState steady_state_zero_T(const ModelParams& params) {
  require_damping(params);
  require_zero_temperature(params, "steady_state_zero_T");
  const double d = params.delta();
  const double w = params.omega();
  const double g = params.gamma();
  const double om2 = d * d + w * w;
  const double lor = g * g + 4.0 * om2;
  const double pop = d * d / lor;
  return XState(pop, pop, pop, (g * g + 3.0 * w * w + om2) / lor, -d * cplx{2.0 * w, g} / lor, 0.0);
}

XState steady_state_thermal(const ModelParams& params) {
  require_damping(params);
  const double d = params.delta();
  const double w = params.omega();
  const double g = params.gamma();
  const double n = params.nbar();
  const double k = 2.0 * n + 1.0;
  const double om2 = d * d + w * w;
  const double lor = 4.0 * om2 + g * g * k * k;
  const double den = k * k * lor;

  const double r11 = (k * k * (d * d + g * g * n * n) + 4.0 * n * n * w * w) / den;
  const double r22 = (d * d + n * (n + 1.0) * lor) / den;
  const double r44 = (k * k * (d * d + g * g * (n + 1.0) * (n + 1.0)) + 4.0 * (n + 1.0) * (n + 1.0) * w * w) / den;
  const cplx r14 = -cplx{2.0 * w * d, g * d * k} / (k * lor);
  return XState(r11, r22, r22, r44, r14, 0.0);
}

CorrelationSet steady_correlations_thermal(const ModelParams& params) {
  require_damping(params);
  const double d = params.delta();
  const double w = params.omega();
  const double g = params.gamma();
  const double n = params.nbar();
  const double k = 2.0 * n + 1.0;
  const double om2 = d * d + w * w;
  const double lor = 4.0 * om2 + g * g * k * k;
  const double root = std::sqrt(4.0 * w * w + g * g * k * k);

  const XState rho = steady_state_thermal(params);
  const DensityMatrix dm = rho.to_density();

  CorrelationSet c;
  c.concurrence = 2.0 * std::max(0.0, (k * std::abs(d) * root - d * d) / (k * k * lor) - n * (n + 1.0) / (k * k));
  c.correlated_coherence = 2.0 * std::abs(d) * root / (k * lor);
  c.min_trace = c.correlated_coherence;
  c.l1_coherence = c.correlated_coherence;
  c.negativity = negativity(dm);
  c.log_negativity = std::log2(2.0 * c.negativity + 1.0);

  if (n == 0.0) {
    const double g2 = g * g;
    const double lor0 = g2 + 4.0 * om2;
    const double inner = std::sqrt((g2 + 4.0 * w * w) * lor0);
    const double base = g2 + 2.0 * w * w + 2.0 * om2;
    const double w11 = std::sqrt(2.0) * std::abs(d) / lor0 *
                       (std::sqrt(std::max(0.0, base - inner)) + std::sqrt(base + inner));
    const double w33 = (g2 * g2 + 4.0 * g2 * (w * w + om2) + 16.0 * (d * d * d * d + w * w * om2)) / (lor0 * lor0);
    c.lqu = 1.0 - std::max(w11, w33);
  } else {
    const WMatrix wm = w_entries(w_matrix(dm));
    c.lqu = 1.0 - std::max(wm.w11, wm.w33);
  }
  return c;
}

double steady_entanglement_cutoff(double gamma, double omega) {
  return std::sqrt(gamma * gamma + 4.0 * omega * omega);
}

std::vector<ClosedFormDiscrepancy> compare_closed_form(const XState& closed, const Matrix4& ref, double t,
                                                       double tol) {
  return compare_closed_form(closed.to_matrix(), ref, t, tol);
}

std::vector<ClosedFormDiscrepancy> compare_closed_form(const Matrix4& closed, const Matrix4& ref, double t,
                                                       double tol) {
  std::vector<ClosedFormDiscrepancy> out;
  auto check = [&](const char* name, cplx a, cplx b) {
    const double err = std::abs(a - b);
    if (err > tol) out.push_back({name, err, t});
  };
  check("rho11", closed(0, 0), ref(0, 0));
  check("rho22", closed(1, 1), ref(1, 1));
  check("rho33", closed(2, 2), ref(2, 2));
  check("rho44", closed(3, 3), ref(3, 3));
  check("rho14", closed(0, 3), ref(0, 3));
  check("rho23", closed(1, 2), ref(1, 2));
  return out;
}

}  // namespace qcorr
