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

#include "qcorr/linalg.hpp"

namespace qcorr {

/// Physical parameters of the coupled-qubit XY model with hbar = 1.
///
/// Rates and couplings share the unit of `omega`; by convention omega = 1 so
/// every quantity is quoted as a multiple of the field strength. Validation
/// happens once, at construction.
class ModelParams {
 public:
  /// Throws DomainError unless omega > 0, gamma >= 0, nbar >= 0 and all are finite.
  ModelParams(double j, double delta, double omega = 1.0, double gamma = 0.0, double nbar = 0.0);

  double j() const noexcept { return j_; }
  double delta() const noexcept { return delta_; }
  double omega() const noexcept { return omega_; }
  double gamma() const noexcept { return gamma_; }
  double nbar() const noexcept { return nbar_; }

  /// sqrt(delta^2 + omega^2), recomputed on every call.
  double big_omega() const noexcept;

  ModelParams with_j(double v) const { return {v, delta_, omega_, gamma_, nbar_}; }
  ModelParams with_delta(double v) const { return {j_, v, omega_, gamma_, nbar_}; }
  ModelParams with_gamma(double v) const { return {j_, delta_, omega_, v, nbar_}; }
  ModelParams with_nbar(double v) const { return {j_, delta_, omega_, gamma_, v}; }

  /// True when |J|/omega or |Delta|/omega exceeds 0.5, where equal-rate
  /// local relaxation stops being a good approximation.
  bool outside_weak_coupling() const noexcept;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  double j_;
  double delta_;
  double omega_;
  double gamma_;
  double nbar_;
};

/// Single-qubit operators in the {|0>, |1>} basis, |0> being the excited level.
Matrix2 sigma_minus();  ///< S_- |0> = |1>
Matrix2 sigma_plus();
Matrix2 spin_z();  ///< diag(1/2, -1/2)
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();

/// S_- on qubit 1 (S_- (x) 1) or qubit 2 (1 (x) S_-). Throws DomainError for other indices.
Matrix4 spin_lowering(int qubit);
Matrix4 spin_raising(int qubit);

/// H = J (S+ S- + S- S+) + Delta (S+ S+ + S- S-) + omega (Sz (x) 1 + 1 (x) Sz)
/// in the basis {|00>, |01>, |10>, |11>}. Spectrum {+-J, +-Omega}.
Matrix4 hamiltonian(const ModelParams& params);

}  // namespace qcorr
