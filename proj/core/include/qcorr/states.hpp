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

#include <iosfwd>
#include <string>

#include "qcorr/linalg.hpp"

namespace qcorr {

/// A validated two-qubit density matrix in the basis {|00>, |01>, |10>, |11>}:
/// finite, Hermitian, unit trace and positive semidefinite, each within
/// kHermitianTol. Only obtainable through validate().
class DensityMatrix {
 public:
  const Matrix4& matrix() const noexcept { return m_; }
  cplx operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  friend DensityMatrix validate(const Matrix4& rho);

 private:
  explicit DensityMatrix(const Matrix4& m) : m_(m) {}
  Matrix4 m_;
};

/// Checks finiteness, Hermiticity, unit trace and positivity in that order.
/// Throws NotHermitian, TraceNotOne or NotPSD naming the violated bound.
DensityMatrix validate(const Matrix4& rho);

/// True iff every entry off the main and anti-diagonal has magnitude <= tol.
bool is_x_shaped(const Matrix4& rho, double tol);
inline bool is_x_shaped(const DensityMatrix& rho, double tol) { return is_x_shaped(rho.matrix(), tol); }

/// The six independent entries of an X-shaped density matrix.
///
///     | r11  0    0    r14 |
///     | 0    r22  r23  0   |
///     | 0    r23* r33  0   |
///     | r14* 0    0    r44 |
///
/// Construction enforces unit trace, non-negative populations and the two
/// 2x2 positivity conditions r22 r33 >= |r23|^2, r11 r44 >= |r14|^2, all
/// within kHermitianTol.
class XState {
 public:
  XState(double r11, double r22, double r33, double r44, cplx r14, cplx r23);

  /// Reads the X entries of a validated matrix; throws DomainError if any
  /// off-pattern entry exceeds `tol`.
  static XState from_density(const DensityMatrix& rho, double tol = 1e-9);

  double rho11() const noexcept { return r11_; }
  double rho22() const noexcept { return r22_; }
  double rho33() const noexcept { return r33_; }
  double rho44() const noexcept { return r44_; }
  cplx rho14() const noexcept { return r14_; }
  cplx rho23() const noexcept { return r23_; }
  cplx rho32() const noexcept { return std::conj(r23_); }
  cplx rho41() const noexcept { return std::conj(r14_); }

  Matrix4 to_matrix() const;
  DensityMatrix to_density() const { return validate(to_matrix()); }

  friend bool operator==(const XState&, const XState&) = default;

 private:
  double r11_, r22_, r33_, r44_;
  cplx r14_, r23_;
};

/// X state expressed in the collective basis {|e>, |g>, |s>, |a>} with
/// |e> = |00>, |g> = |11>, |s>,|a> = (|01> +- |10>)/sqrt(2). The matrix is
/// block diagonal: an (e,g) block and an (s,a) block.
struct DickeState {
  double ee = 0.0;
  double gg = 0.0;
  double ss = 0.0;
  double aa = 0.0;
  cplx eg{};
  cplx sa{};

  /// Block-diagonal 4x4 matrix in the ordering (e, g, s, a).
  Matrix4 to_matrix() const;
};

DickeState to_dicke(const XState& rho);
XState from_dicke(const DickeState& varrho);

/// Unitary taking computational-basis coordinates to Dicke (e, g, s, a) coordinates.
Matrix4 dicke_basis_change();

/// diag(r11 + r22, r33 + r44)
Matrix2 reduced_A(const XState& rho);
/// diag(r11 + r33, r22 + r44)
Matrix2 reduced_B(const XState& rho);

/// tr(rho^2)
double purity(const DensityMatrix& rho);

/// w |01><01| + (1 - w)/2 (|00> + |11>)(<00| + <11|); DomainError outside [0, 1].
XState make_mixture(double w);

/// p |Psi-><Psi-| + (1 - p)/4 identity; DomainError outside [-1/3, 1].
XState make_werner(double p);

/// Writes 4 lines of 4 whitespace-separated entries `re+imi` (or `re-imi`),
/// each part printed with 17 significant digits.
void write_matrix(std::ostream& os, const Matrix4& m);
std::string format_matrix(const Matrix4& m);

/// Parses the format produced by write_matrix. Throws ParseError.
Matrix4 read_matrix(std::istream& is);
Matrix4 parse_matrix(const std::string& text);

/// read_matrix + validate from a file path.
DensityMatrix load_density_matrix(const std::string& path);

}  // namespace qcorr
