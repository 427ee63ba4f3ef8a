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

// Exact-size dense complex matrices and the Hermitian kernels needed for
// two-qubit density matrices: Jacobi eigensystems, PSD square roots, the
// trace norm and partial transposes.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qcorr {

using cplx = std::complex<double>;

/// Tolerance for Hermiticity, unit trace and positivity checks.
inline constexpr double kHermitianTol = 1e-10;

/// Row-major N x N complex matrix with value semantics.
template <std::size_t N>
class Matrix {
 public:
  static constexpr std::size_t dim = N;

  constexpr Matrix() = default;

  static constexpr Matrix zero() { return Matrix{}; }

  static constexpr Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  constexpr cplx& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  constexpr const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  constexpr std::array<cplx, N * N>& data() { return data_; }
  constexpr const std::array<cplx, N * N>& data() const { return data_; }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, double s) { return a *= cplx{s, 0.0}; }
  friend Matrix operator*(double s, Matrix a) { return a *= cplx{s, 0.0}; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix adjoint() const {
    Matrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix conj() const {
    Matrix out;
    for (std::size_t k = 0; k < N * N; ++k) out.data_[k] = std::conj(data_[k]);
    return out;
  }

  cplx trace() const {
    cplx t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entry magnitude.
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const cplx& v) {
      return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
  }

 private:
  std::array<cplx, N * N> data_{};
};

using Matrix2 = Matrix<2>;
using Matrix3 = Matrix<3>;
using Matrix4 = Matrix<4>;

/// Kronecker product of two single-qubit operators; the first factor acts on
/// the more significant index.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

template <std::size_t N>
Matrix<N> commutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b - b * a;
}

/// max |M - M^dagger| over all entries.
template <std::size_t N>
double hermiticity_error(const Matrix<N>& m) {
  return (m - m.adjoint()).max_abs();
}

template <std::size_t N>
struct HermitianEigensystem {
  std::array<double, N> values{};  ///< ascending
  Matrix<N> vectors;                ///< orthonormal eigenvectors stored as columns
};

/// Cyclic complex Jacobi diagonalisation for N in {2, 3, 4}.
///
/// Throws NotHermitian when max |M - M^dagger| exceeds kHermitianTol and
/// ConvergenceFailure when the off-diagonal Frobenius norm does not fall
/// below 1e-14 of the input norm within 100 sweeps. The Hermitian part
/// (M + M^dagger)/2 is what gets diagonalised.
template <std::size_t N>
HermitianEigensystem<N> hermitian_eigensystem(const Matrix<N>& m);

/// Eigenvalues only, ascending.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m) {
  return hermitian_eigensystem(m).values;
}

/// V f(Lambda) V^dagger from an eigensystem.
template <std::size_t N, class F>
Matrix<N> spectral_map(const HermitianEigensystem<N>& es, F&& f) {
  Matrix<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    const double fk = f(es.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < N; ++i) {
      const cplx vik = es.vectors(i, k) * fk;
      for (std::size_t j = 0; j < N; ++j) out(i, j) += vik * std::conj(es.vectors(j, k));
    }
  }
  return out;
}

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-kHermitianTol, 0) are clamped to zero; anything more
/// negative raises NotPSD.
template <std::size_t N>
Matrix<N> psd_sqrt(const Matrix<N>& m);

/// Sum of absolute eigenvalues of a Hermitian matrix.
template <std::size_t N>
double trace_norm(const Matrix<N>& m);

/// Partial transpose on the second qubit:
/// out(i*2 + l, j*2 + k) = in(i*2 + k, j*2 + l).
Matrix4 partial_transpose_B(const Matrix4& rho);

/// Partial transpose on the first qubit.
Matrix4 partial_transpose_A(const Matrix4& rho);

/// Partial trace over the second qubit.
Matrix2 partial_trace_B(const Matrix4& rho);

/// Partial trace over the first qubit.
Matrix2 partial_trace_A(const Matrix4& rho);

extern template HermitianEigensystem<2> hermitian_eigensystem(const Matrix<2>&);
extern template HermitianEigensystem<3> hermitian_eigensystem(const Matrix<3>&);
extern template HermitianEigensystem<4> hermitian_eigensystem(const Matrix<4>&);
extern template Matrix<2> psd_sqrt(const Matrix<2>&);
extern template Matrix<3> psd_sqrt(const Matrix<3>&);
extern template Matrix<4> psd_sqrt(const Matrix<4>&);
extern template double trace_norm(const Matrix<2>&);
extern template double trace_norm(const Matrix<3>&);
extern template double trace_norm(const Matrix<4>&);

}  // namespace qcorr
