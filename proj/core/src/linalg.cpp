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

#include "qcorr/linalg.hpp"

#include <numeric>
#include <sstream>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalRelTol = 1e-14;

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

template <std::size_t N>
void require_hermitian(const Matrix<N>& m) {
  const double err = hermiticity_error(m);
  if (!(err <= kHermitianTol)) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |M - M^dagger| = " << err << " exceeds " << kHermitianTol;
    throw NotHermitian(os.str());
  }
}

// Zeroes a(p,q) with the unitary G = diag(1, e^{-i phi}) * R(theta) acting on
// the (p,q) plane, where a(p,q) = |a(p,q)| e^{i phi}. A <- G^dagger A G, V <- V G.
template <std::size_t N>
void jacobi_rotate(Matrix<N>& a, Matrix<N>& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = apq / mag;  // e^{i phi}

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const cplx gpp = c;
  const cplx gpq = s;
  const cplx gqp = -s * std::conj(phase);
  const cplx gqq = c * std::conj(phase);

  for (std::size_t k = 0; k < N; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < N; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < N; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

template <std::size_t N>
HermitianEigensystem<N> hermitian_eigensystem(const Matrix<N>& m) {
  static_assert(N >= 2 && N <= 4, "exact-size eigensolver supports N in {2, 3, 4}");
  require_hermitian(m);

  Matrix<N> a = (m + m.adjoint()) * 0.5;
  Matrix<N> v = Matrix<N>::identity();
  const double scale = a.frobenius_norm();
  const double target = kOffDiagonalRelTol * scale;

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > kMaxSweeps) {
      std::ostringstream os;
      os << "Jacobi eigensolver did not converge in " << kMaxSweeps
         << " sweeps (off-diagonal norm " << off_diagonal_norm(a) << ")";
      throw ConvergenceFailure(os.str());
    }
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) jacobi_rotate(a, v, p, q);
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigensystem<N> es;
  for (std::size_t k = 0; k < N; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < N; ++i) es.vectors(i, k) = v(i, order[k]);
  }
  return es;
}

template <std::size_t N>
Matrix<N> psd_sqrt(const Matrix<N>& m) {
  const auto es = hermitian_eigensystem(m);
  if (es.values[0] < -kHermitianTol) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite: minimum eigenvalue " << es.values[0]
       << " is below " << -kHermitianTol;
    throw NotPSD(os.str());
  }
  return spectral_map(es, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

template <std::size_t N>
double trace_norm(const Matrix<N>& m) {
  double s = 0.0;
  for (double x : hermitian_eigenvalues(m)) s += std::abs(x);
  return s;
}

Matrix4 partial_transpose_B(const Matrix4& rho) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + l, 2 * j + k) = rho(2 * i + k, 2 * j + l);
  return out;
}

Matrix4 partial_transpose_A(const Matrix4& rho) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * j + k, 2 * i + l) = rho(2 * i + k, 2 * j + l);
  return out;
}

Matrix2 partial_trace_B(const Matrix4& rho) {
  Matrix2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  return out;
}

Matrix2 partial_trace_A(const Matrix4& rho) {
  Matrix2 out;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l) out(k, l) = rho(k, l) + rho(2 + k, 2 + l);
  return out;
}

template HermitianEigensystem<2> hermitian_eigensystem(const Matrix<2>&);
template HermitianEigensystem<3> hermitian_eigensystem(const Matrix<3>&);
template HermitianEigensystem<4> hermitian_eigensystem(const Matrix<4>&);
template Matrix<2> psd_sqrt(const Matrix<2>&);
template Matrix<3> psd_sqrt(const Matrix<3>&);
template Matrix<4> psd_sqrt(const Matrix<4>&);
template double trace_norm(const Matrix<2>&);
template double trace_norm(const Matrix<3>&);
template double trace_norm(const Matrix<4>&);

}  // namespace qcorr
