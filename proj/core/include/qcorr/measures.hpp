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

// Entanglement, discord-like and coherence quantifiers for two qubits.
//
// Most measures come in two flavours: a general definition valid for any
// density matrix, and a closed form for X states. The two must agree, and
// correlations() can be asked to verify that they do.

#include <string>
#include <utility>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

struct CorrelationSet {
  double concurrence = 0.0;
  double negativity = 0.0;
  double log_negativity = 0.0;
  double lqu = 0.0;
  double min_trace = 0.0;
  double correlated_coherence = 0.0;
  double l1_coherence = 0.0;
};

/// Checks the range invariants of every field and the two concurrence bound
/// chains, allowing `slack` of numerical overshoot. Returns an empty string
/// when everything holds, otherwise a description of the first violation.
std::string check_ranges(const CorrelationSet& c, double slack = 1e-10);

/// The nonzero entries of the local-uncertainty W matrix of an X state.
struct WMatrix {
  double w11 = 0.0;
  double w22 = 0.0;
  double w33 = 0.0;
  double w12 = 0.0;
};

// -- concurrence -------------------------------------------------------------

/// max{0, l1 - l2 - l3 - l4} with l_i the descending square roots of the
/// eigenvalues of sqrt(rho) rho~ sqrt(rho), rho~ = (Y (x) Y) rho* (Y (x) Y).
double concurrence_general(const DensityMatrix& rho);

/// The two competing terms 2(|r14| - sqrt(r22 r33)) and 2(|r23| - sqrt(r11 r44)).
std::pair<double, double> concurrence_terms(const XState& rho);

double concurrence_x(const XState& rho);
double concurrence_dicke(const DickeState& varrho);

// -- negativity ----------------------------------------------------------------

/// max{0, -lambda_min(rho^T_B)}
double negativity(const DensityMatrix& rho);

/// (||rho^T_B||_1 - 1) / 2
double negativity_trace_norm(const DensityMatrix& rho);

/// log2(2 N + 1)
double log_negativity(const DensityMatrix& rho);

/// Lower and upper bounds on the negativity implied by the concurrence.
std::pair<double, double> negativity_bounds(double concurrence);

/// Lower and upper bounds on the log-negativity implied by the concurrence.
std::pair<double, double> log_negativity_bounds(double concurrence);

// -- local quantum uncertainty -------------------------------------------------

/// W_ij = tr(sqrt(rho) (s_i (x) 1) sqrt(rho) (s_j (x) 1)), i, j over the
/// Pauli matrices x, y, z. Real and symmetric for every density matrix.
Matrix3 w_matrix(const DensityMatrix& rho);

/// Reads the X-state W entries; throws DomainError when W is not of the
/// block form expected for an X state (entries (1,3), (2,3) above tol).
WMatrix w_entries(const Matrix3& w, double tol = 1e-8);

/// 1 - max{(w11 + w22 + sqrt((w11 - w22)^2 + 4 w12^2)) / 2, w33}
double lqu_from_w(const WMatrix& w);

/// 1 - lambda_max(W)
double lqu(const DensityMatrix& rho);

// -- measurement-induced nonlocality --------------------------------------------

/// Default half-width of the band around x = 0 that selects the
/// max{|u1|, |u2|, |u3|} branch of the X-state formula.
inline constexpr double kMinBranchTol = 1e-9;

/// The scalars entering the X-state trace-norm MIN formula.
struct MinTerms {
  double x = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  double u3 = 0.0;
};
MinTerms min_terms(const XState& rho);

/// Closed form for X states: 2(|r14| + |r23|) if |x| > x_tol, else max |u_k|.
double min_trace(const XState& rho, double x_tol = kMinBranchTol);

/// Trace-norm MIN from its definition: the largest ||rho - Pi(rho)||_1 over
/// local projective measurements on A that leave rho_A unchanged. When the
/// Bloch vector of rho_A is longer than `degeneracy_tol` the measurement is
/// fixed along it; otherwise the measurement direction is optimised over the
/// sphere numerically.
double min_trace_general(const DensityMatrix& rho, double degeneracy_tol = kMinBranchTol);

// -- coherence -------------------------------------------------------------------

/// Sum of |rho_ij| over i != j.
double l1_coherence(const DensityMatrix& rho);
double l1_coherence(const Matrix2& rho);

/// 2(|r14| + |r23|)
double correlated_coherence(const XState& rho);

/// C_l1(rho) - C_l1(rho_A) - C_l1(rho_B) for any two-qubit state.
double correlated_coherence_general(const DensityMatrix& rho);

// -- aggregate -------------------------------------------------------------------

struct MeasureOptions {
  double x_tol = kMinBranchTol;      ///< MIN branch band
  double x_shape_tol = 1e-9;         ///< gate for the X closed forms
  bool cross_check = false;          ///< verify closed forms against definitions
  double concurrence_check_tol = 1e-7;
};

/// All seven measures. X-shaped inputs use the closed forms; anything else
/// goes through the general definitions. With cross_check set, each closed
/// form is compared against its definition and CrossCheckFailure is thrown
/// on disagreement.
CorrelationSet correlations(const DensityMatrix& rho, const MeasureOptions& opts = {});

}  // namespace qcorr
