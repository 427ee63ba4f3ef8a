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

#include <gtest/gtest.h>

#include <cmath>

#include "qcorr/analytic.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/esd.hpp"

namespace qcorr {
namespace {

TEST(EsdZeroT, ClosedForm) {
  EXPECT_TRUE(esd_time_zero_T(0.0, 0.1).infinite());
  EXPECT_NEAR(esd_time_zero_T(0.5, 0.1).gamma_tau, std::log(1.0 + 1.0 / std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(esd_time_zero_T(0.5, 0.1).gamma_tau, 0.53480, 5e-6);
  EXPECT_EQ(esd_time_zero_T(1.0, 0.1).gamma_tau, 0.0);
  double prev = INFINITY;
  for (int i = 1; i <= 100; ++i) {
    const double g = esd_time_zero_T(i / 100.0, 0.3).gamma_tau;
    EXPECT_LT(g, prev);
    prev = g;
  }
  EXPECT_THROW(esd_time_zero_T(1.5, 0.1), DomainError);
  EXPECT_THROW(esd_time_zero_T(0.5, 0.0), DomainError);
}

TEST(EsdZeroT, ConcurrenceVanishesAtDeath) {
  for (double w : {0.1, 0.5, 0.9}) {
    const double gamma = 0.2;
    const double tau = esd_time_zero_T(w, gamma).gamma_tau / gamma;
    EXPECT_GT(concurrence_independent_mixture(tau * (1 - 1e-6), w, gamma), 0.0);
    EXPECT_EQ(concurrence_independent_mixture(tau * (1 + 1e-6), w, gamma), 0.0);
  }
}

TEST(ThermalConcurrence, ReducesToZeroTemperature) {
  for (double w : {0.0, 0.3, 0.5, 0.8}) {
    EXPECT_NEAR(concurrence_thermal_independent(0.0, w, 0.1, 0.4), 1.0 - w, 1e-15);
    for (int i = 0; i <= 200; ++i) {
      const double t = 0.25 * i;
      const double closed = concurrence_thermal_independent(t, w, 0.1, 0.0);
      const double direct = concurrence_x(analytic_independent_mixture(t, w, 0.1, 1.0));
      EXPECT_NEAR(closed, direct, 1e-12) << w << " " << t;
    }
  }
}

TEST(ThermalConcurrence, MatchesIntegration) {
  for (double n : {0.2, 0.6}) {
    const ModelParams p(0.0, 0.0, 1.0, 0.1, n);
    const Trajectory tr = evolve(make_mixture(0.3).to_density(), p, 10.0, 1e-3, {.stride = 1000});
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
      EXPECT_NEAR(tr.correlations[i].concurrence, concurrence_thermal_independent(tr.times[i], 0.3, 0.1, n), 1e-9);
    }
  }
}

TEST(EsdThermal, AgreesWithClosedFormAtZeroTemperature) {
  for (double w : {0.1, 0.3, 0.5, 0.8}) {
    EXPECT_NEAR(esd_time_thermal(w, 0.1, 0.0).gamma_tau, esd_time_zero_T(w, 0.1).gamma_tau, 1e-8) << w;
  }
}

TEST(EsdThermal, TemperatureSpeedsUpDeath) {
  double prev = INFINITY;
  for (double n : {0.0, 0.2, 0.4, 0.6}) {
    const double g = esd_time_thermal(0.5, 0.1, n).gamma_tau;
    EXPECT_LT(g, prev) << n;
    prev = g;
  }
  // maximally entangled start dies only at finite temperature
  EXPECT_THROW(esd_time_thermal(0.0, 0.1, 0.0), NoDeath);
  EXPECT_FALSE(esd_time_thermal(0.0, 0.1, 0.1).infinite());
}

TEST(EsdThermal, EdgeCases) {
  EXPECT_EQ(esd_time_thermal(1.0, 0.1, 0.3).gamma_tau, 0.0);
  try {
    esd_time_thermal(0.0, 0.1, 0.0, 5.0);
    FAIL() << "expected NoDeath";
  } catch (const NoDeath& e) {
    EXPECT_EQ(e.horizon(), 5.0);
  }
  EXPECT_THROW(esd_time_thermal(0.5, 0.1, 0.4, 1e-3), NoDeath);
  EXPECT_THROW(esd_time_thermal(0.5, -0.1, 0.0), DomainError);
  EXPECT_THROW(esd_time_thermal(0.5, 0.1, -0.1), DomainError);
  EXPECT_DOUBLE_EQ(default_esd_horizon(0.0), 100.0);
  EXPECT_DOUBLE_EQ(default_esd_horizon(0.5), 50.0);
}

TEST(EsdThermal, RootIsTheConcurrenceZero) {
  const double gamma = 0.1;
  for (double n : {0.1, 0.5}) {
    const double tau = esd_time_thermal(0.4, gamma, n).gamma_tau / gamma;
    EXPECT_GT(concurrence_thermal_independent(tau * (1 - 1e-7), 0.4, gamma, n), 0.0);
    EXPECT_EQ(concurrence_thermal_independent(tau * (1 + 1e-7), 0.4, gamma, n), 0.0);
  }
}

TEST(DarkIntervals, SeriesLogic) {
  const std::vector<double> t = {0, 1, 2, 3, 4, 5, 6, 7};
  // 1e-10 sits between the two thresholds: still dark, no revival yet
  const std::vector<double> c = {0.5, 0.2, 0.0, 1e-10, 0.0, 0.3, 0.0, 0.0};
  auto probe = [&](double x) {
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(std::floor(x)), t.size() - 2);
    return c[i] + (c[i + 1] - c[i]) * (x - i);
  };
  const auto iv = find_dark_intervals(t, c, probe);
  ASSERT_EQ(iv.size(), 2u);
  EXPECT_NEAR(iv[0].death, 2.0, 1e-6);
  EXPECT_NEAR(iv[0].rebirth, 4.0, 1e-6);
  EXPECT_TRUE(iv[0].revived);
  EXPECT_NEAR(iv[1].death, 6.0, 1e-6);
  EXPECT_EQ(iv[1].rebirth, 7.0);
  EXPECT_FALSE(iv[1].revived);
}

TEST(DarkIntervals, MixtureFigureScenario) {
  std::vector<std::size_t> counts;
  std::vector<double> first_lengths;
  for (double gamma : {0.1, 0.15, 0.2}) {
    const ModelParams p(0.1, 0.5, 1.0, gamma);
    const Trajectory tr = evolve(make_mixture(0.5).to_density(), p, 100.0, 1e-3, {.stride = 10});
    const auto iv = find_dark_intervals(tr);
    ASSERT_FALSE(iv.empty());
    for (std::size_t k = 1; k < iv.size(); ++k) {
      EXPECT_GT(iv[0].length(), iv[k].length());
      EXPECT_GT(iv[k].death, iv[k - 1].rebirth);
    }
    for (const auto& d : iv) EXPECT_TRUE(d.revived);
    counts.push_back(iv.size());
    first_lengths.push_back(iv[0].length());
    // the closed form gives the same intervals
    ConcurrenceProbe exact = [&](double t) { return concurrence_x(analytic_mixture(t, p)); };
    const auto ref = find_dark_intervals(tr, exact);
    ASSERT_EQ(ref.size(), iv.size());
    for (std::size_t k = 0; k < iv.size(); ++k) {
      EXPECT_NEAR(iv[k].death, ref[k].death, 1e-5);
      EXPECT_NEAR(iv[k].rebirth, ref[k].rebirth, 1e-5);
    }
    // CC and LQU never switch off
    for (const auto& c : tr.correlations) {
      EXPECT_GT(c.correlated_coherence, 1e-9);
      EXPECT_GT(c.lqu, 1e-9);
    }
  }
  EXPECT_GE(counts[0], counts[1]);
  EXPECT_GE(counts[1], counts[2]);
  EXPECT_GT(first_lengths[0], first_lengths[1]);
  EXPECT_GT(first_lengths[1], first_lengths[2]);
}

TEST(DarkIntervals, SingletSettlesWithoutPermanentDeath) {
  const ModelParams p(0.1, 0.5, 1.0, 0.1);
  const Trajectory tr = evolve(make_werner(1.0).to_density(), p, 150.0, 1e-3, {.stride = 100});
  for (const auto& d : find_dark_intervals(tr)) EXPECT_TRUE(d.revived);
  EXPECT_NEAR(tr.correlations.back().concurrence, 0.2999, 5e-4);
  const ESDResult r = esd_from_trajectory(tr);
  EXPECT_EQ(r.dark_intervals.size(), find_dark_intervals(tr).size());
}

TEST(DarkIntervals, ResultFromTrajectory) {
  const ModelParams p(0.1, 0.5, 1.0, 0.1);
  const Trajectory tr = evolve(make_mixture(0.5).to_density(), p, 30.0, 1e-3, {.stride = 10});
  const ESDResult r = esd_from_trajectory(tr);
  ASSERT_FALSE(r.infinite());
  EXPECT_NEAR(r.gamma_tau, 0.1 * r.dark_intervals.front().death, 1e-15);
  EXPECT_NEAR(r.dark_intervals.front().death, 1.48, 0.01);
}

}  // namespace
}  // namespace qcorr
