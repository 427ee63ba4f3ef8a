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

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/model.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// The generator of the thermal master equation
///
///   d rho/dt = -i[H, rho] + gamma (nbar + 1) sum_q D[S-_q] rho + gamma nbar sum_q D[S+_q] rho,
///   D[A] B = A B A^dagger - {A^dagger A, B} / 2,
///
/// held both as operators and as a 16 x 16 superoperator acting on the
/// row-major vectorisation of rho.
class Liouvillian {
 public:
  using Vector = std::array<cplx, 16>;

  explicit Liouvillian(const ModelParams& params);

  const ModelParams& params() const noexcept { return params_; }

  /// Operator-form right-hand side.
  Matrix4 apply(const Matrix4& rho) const;

  /// out = L v using the superoperator.
  void apply(const Vector& v, Vector& out) const;

  const Matrix<16>& superoperator() const noexcept { return super_; }

 private:
  ModelParams params_;
  Matrix4 h_;
  std::array<Matrix4, 4> jumps_;
  std::array<double, 4> rates_;
  Matrix<16> super_;
  std::array<double, 256> re_;
  std::array<double, 256> im_;
};

Matrix4 lindblad_rhs(const Matrix4& rho, const ModelParams& params);

Liouvillian::Vector vectorize(const Matrix4& m);
Matrix4 unvectorize(const Liouvillian::Vector& v);

struct EvolveOptions {
  std::size_t stride = 1;        ///< keep every stride-th step (plus the final one)
  bool attach_correlations = true;
  bool stop_at_steady = false;   ///< end the run once max|rhs| <= steady_tol
  double steady_tol = 1e-12;
  MeasureOptions measures{};
};

struct Trajectory {
  std::vector<double> times;                ///< units of 1/omega
  std::vector<DensityMatrix> states;
  std::vector<CorrelationSet> correlations;  ///< empty unless attached
  ModelParams params;
  double dt = 0.0;                           ///< step actually used
  std::optional<double> steady_time;         ///< first t with max|rhs| <= steady_tol
};

/// Fixed-step classical Runge-Kutta integration of the master equation from
/// rho0 over [0, t_max]. The step is shrunk to t_max / ceil(t_max / dt) so
/// the grid lands on t_max. Every kept sample is validated; a failure raises
/// StepRejected with the sample time.
Trajectory evolve(const DensityMatrix& rho0, const ModelParams& params, double t_max, double dt,
                  const EvolveOptions& opts = {});

/// State after `duration`, integrated with steps no longer than max_dt.
Matrix4 propagate(const Matrix4& rho0, const Liouvillian& generator, double duration, double max_dt);

}  // namespace qcorr
