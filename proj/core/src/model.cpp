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

#include "qcorr/model.hpp"

#include <cmath>
#include <sstream>

#include "qcorr/errors.hpp"

namespace qcorr {

ModelParams::ModelParams(double j, double delta, double omega, double gamma, double nbar)
    : j_(j), delta_(delta), omega_(omega), gamma_(gamma), nbar_(nbar) {
  std::ostringstream os;
  if (!std::isfinite(j) || !std::isfinite(delta)) os << "J and Delta must be finite; ";
  if (!(omega > 0.0) || !std::isfinite(omega)) os << "omega must be > 0 (got " << omega << "); ";
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) os << "gamma must be >= 0 (got " << gamma << "); ";
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) os << "nbar must be >= 0 (got " << nbar << "); ";
  if (!os.str().empty()) throw DomainError("invalid model parameters: " + os.str());
}

double ModelParams::big_omega() const noexcept { return std::hypot(delta_, omega_); }

bool ModelParams::outside_weak_coupling() const noexcept {
  return std::abs(j_) / omega_ > 0.5 || std::abs(delta_) / omega_ > 0.5;
}

Matrix2 sigma_minus() {
  Matrix2 m;
  m(1, 0) = 1.0;
  return m;
}

Matrix2 sigma_plus() {
  Matrix2 m;
  m(0, 1) = 1.0;
  return m;
}

Matrix2 spin_z() { return Matrix2::diagonal({0.5, -0.5}); }

Matrix2 pauli_x() {
  Matrix2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Matrix2 pauli_y() {
  Matrix2 m;
  m(0, 1) = cplx{0.0, -1.0};
  m(1, 0) = cplx{0.0, 1.0};
  return m;
}

Matrix2 pauli_z() { return Matrix2::diagonal({1.0, -1.0}); }

namespace {

Matrix4 on_qubit(const Matrix2& op, int qubit) {
  switch (qubit) {
    case 1:
      return kron(op, Matrix2::identity());
    case 2:
      return kron(Matrix2::identity(), op);
    default:
      throw DomainError("qubit index must be 1 or 2, got " + std::to_string(qubit));
  }
}

}  // namespace

Matrix4 spin_lowering(int qubit) { return on_qubit(sigma_minus(), qubit); }
Matrix4 spin_raising(int qubit) { return on_qubit(sigma_plus(), qubit); }

Matrix4 hamiltonian(const ModelParams& params) {
  // Entries written out directly so that H is exactly Hermitian.
  Matrix4 h;
  h(0, 0) = params.omega();
  h(3, 3) = -params.omega();
  h(1, 2) = params.j();
  h(2, 1) = params.j();
  h(0, 3) = params.delta();
  h(3, 0) = params.delta();
  return h;
}

}  // namespace qcorr
