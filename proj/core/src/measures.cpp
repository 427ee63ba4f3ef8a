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

#include "qcorr/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "qcorr/errors.hpp"
#include "qcorr/model.hpp"

namespace qcorr {

namespace {

double clamped_sqrt(double x) { return x > 0.0 ? std::sqrt(x) : 0.0; }

const Matrix4& spin_flip() {
  static const Matrix4 yy = kron(pauli_y(), pauli_y());
  return yy;
}

const std::array<Matrix4, 3>& local_paulis_A() {
  static const std::array<Matrix4, 3> ops = {kron(pauli_x(), Matrix2::identity()),
                                             kron(pauli_y(), Matrix2::identity()),
                                             kron(pauli_z(), Matrix2::identity())};
  return ops;
}

}  // namespace

std::string check_ranges(const CorrelationSet& c, double slack) {
  std::ostringstream os;
  auto in = [&](const char* name, double v, double lo, double hi) {
    if (!(v >= lo - slack && v <= hi + slack) && os.str().empty()) {
      os << name << " = " << v << " outside [" << lo << ", " << hi << "]";
    }
  };
  in("concurrence", c.concurrence, 0.0, 1.0);
  in("negativity", c.negativity, 0.0, 0.5);
  in("log_negativity", c.log_negativity, 0.0, 1.0);
  in("lqu", c.lqu, 0.0, 1.0);
  in("min", c.min_trace, 0.0, 3.0);
  in("ccc", c.correlated_coherence, 0.0, 3.0);
  in("l1_coherence", c.l1_coherence, 0.0, 3.0);
  if (!os.str().empty()) return os.str();

  const auto [nlo, nhi] = negativity_bounds(std::clamp(c.concurrence, 0.0, 1.0));
  if (c.negativity < nlo - slack || c.negativity > nhi + slack) {
    os << "negativity " << c.negativity << " violates concurrence bounds [" << nlo << ", " << nhi << "]";
    return os.str();
  }
  const auto [llo, lhi] = log_negativity_bounds(std::clamp(c.concurrence, 0.0, 1.0));
  if (c.log_negativity < llo - slack || c.log_negativity > lhi + slack) {
    os << "log-negativity " << c.log_negativity << " violates concurrence bounds [" << llo << ", "
       << lhi << "]";
  }
  return os.str();
}

double concurrence_general(const DensityMatrix& rho) {
  const Matrix4 root = psd_sqrt(rho.matrix());
  const Matrix4 flipped = spin_flip() * rho.matrix().conj() * spin_flip();
  Matrix4 s = root * flipped * root;
  s = (s + s.adjoint()) * 0.5;

  auto ev = hermitian_eigenvalues(s);
  std::array<double, 4> lambda;
  std::transform(ev.begin(), ev.end(), lambda.begin(), clamped_sqrt);
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

std::pair<double, double> concurrence_terms(const XState& rho) {
  const double c1 = 2.0 * (std::abs(rho.rho14()) - clamped_sqrt(rho.rho22() * rho.rho33()));
  const double c2 = 2.0 * (std::abs(rho.rho32()) - clamped_sqrt(rho.rho11() * rho.rho44()));
  return {c1, c2};
}

double concurrence_x(const XState& rho) {
  const auto [c1, c2] = concurrence_terms(rho);
  return std::max({0.0, c1, c2});
}

double concurrence_dicke(const DickeState& d) {
  const double mean_pop = 0.5 * (d.ss + d.aa);
  const double half_gap = 0.5 * (d.ss - d.aa);
  const double c1 = 2.0 * (std::abs(d.eg) - clamped_sqrt(mean_pop * mean_pop - d.sa.real() * d.sa.real()));
  const double c2 = 2.0 * (clamped_sqrt(half_gap * half_gap + d.sa.imag() * d.sa.imag()) -
                           clamped_sqrt(d.ee * d.gg));
  return std::max({0.0, c1, c2});
}

double negativity(const DensityMatrix& rho) {
  const double lmin = hermitian_eigenvalues(partial_transpose_B(rho.matrix()))[0];
  return std::max(0.0, -lmin);
}

double negativity_trace_norm(const DensityMatrix& rho) {
  return 0.5 * (trace_norm(partial_transpose_B(rho.matrix())) - 1.0);
}

double log_negativity(const DensityMatrix& rho) { return std::log2(2.0 * negativity(rho) + 1.0); }

std::pair<double, double> negativity_bounds(double c) {
  const double lower = 0.5 * (std::sqrt((1.0 - c) * (1.0 - c) + c * c) - (1.0 - c));
  return {lower, 0.5 * c};
}

std::pair<double, double> log_negativity_bounds(double c) {
  const double lower = std::log2(std::sqrt((1.0 - c) * (1.0 - c) + c * c) + c);
  return {lower, std::log2(c + 1.0)};
}

Matrix3 w_matrix(const DensityMatrix& rho) {
  const Matrix4 root = psd_sqrt(rho.matrix());
  const auto& paulis = local_paulis_A();
  std::array<Matrix4, 3> a;
  for (std::size_t i = 0; i < 3; ++i) a[i] = root * paulis[i];
  Matrix3 w;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) w(i, j) = (a[i] * a[j]).trace().real();
  return w;
}

WMatrix w_entries(const Matrix3& w, double tol) {
  if (std::abs(w(0, 2)) > tol || std::abs(w(1, 2)) > tol || std::abs(w(2, 0)) > tol ||
      std::abs(w(2, 1)) > tol) {
    throw DomainError("W matrix does not have the X-state block structure");
  }
  return {w(0, 0).real(), w(1, 1).real(), w(2, 2).real(), 0.5 * (w(0, 1) + w(1, 0)).real()};
}

double lqu_from_w(const WMatrix& w) {
  const double d = w.w11 - w.w22;
  const double top = 0.5 * (w.w11 + w.w22 + std::sqrt(d * d + 4.0 * w.w12 * w.w12));
  return 1.0 - std::max(top, w.w33);
}

double lqu(const DensityMatrix& rho) {
  Matrix3 w = w_matrix(rho);
  w = (w + w.adjoint()) * 0.5;
  return 1.0 - hermitian_eigenvalues(w)[2];
}

MinTerms min_terms(const XState& rho) {
  const double a14 = std::abs(rho.rho14());
  const double a23 = std::abs(rho.rho23());
  MinTerms t;
  t.x = rho.rho11() + rho.rho22() - (rho.rho33() + rho.rho44());
  t.u1 = 2.0 * (a14 + a23);
  t.u2 = 2.0 * (-a14 + a23);
  t.u3 = rho.rho11() - rho.rho22() - rho.rho33() + rho.rho44();
  return t;
}

double min_trace(const XState& rho, double x_tol) {
  const MinTerms t = min_terms(rho);
  if (std::abs(t.x) > x_tol) return t.u1;
  return std::max({std::abs(t.u1), std::abs(t.u2), std::abs(t.u3)});
}

namespace {

// ||rho - sum_k (P_k (x) 1) rho (P_k (x) 1)||_1 for the projective measurement
// of qubit A along the unit vector n.
double measurement_disturbance(const Matrix4& rho, const std::array<double, 3>& n) {
  Matrix2 ndotsigma = pauli_x() * n[0] + pauli_y() * n[1] + pauli_z() * n[2];
  const Matrix2 id = Matrix2::identity();
  const Matrix4 p_plus = kron((id + ndotsigma) * 0.5, id);
  const Matrix4 p_minus = kron((id - ndotsigma) * 0.5, id);
  const Matrix4 measured = p_plus * rho * p_plus + p_minus * rho * p_minus;
  Matrix4 diff = rho - measured;
  diff = (diff + diff.adjoint()) * 0.5;
  return trace_norm(diff);
}

std::array<double, 3> sphere_point(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

}  // namespace

double min_trace_general(const DensityMatrix& rho, double degeneracy_tol) {
  const Matrix2 ra = partial_trace_B(rho.matrix());
  const std::array<double, 3> bloch = {(ra * pauli_x()).trace().real(), (ra * pauli_y()).trace().real(),
                                       (ra * pauli_z()).trace().real()};
  const double len = std::sqrt(bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2]);
  if (len > degeneracy_tol) {
    return measurement_disturbance(rho.matrix(), {bloch[0] / len, bloch[1] / len, bloch[2] / len});
  }

  // rho_A is maximally mixed: every measurement leaves it invariant. n and -n
  // define the same measurement, so the upper hemisphere suffices.
  constexpr int kTheta = 24;
  constexpr int kPhi = 48;
  const double pi = std::acos(-1.0);
  const double dtheta = 0.5 * pi / kTheta;
  const double dphi = 2.0 * pi / kPhi;

  struct Candidate {
    double value, theta, phi;
  };
  std::vector<Candidate> grid;
  grid.reserve((kTheta + 1) * kPhi);
  for (int i = 0; i <= kTheta; ++i)
    for (int k = 0; k < kPhi; ++k) {
      const double th = i * dtheta;
      const double ph = k * dphi;
      grid.push_back({measurement_disturbance(rho.matrix(), sphere_point(th, ph)), th, ph});
    }
  std::partial_sort(grid.begin(), grid.begin() + 6, grid.end(),
                    [](const Candidate& a, const Candidate& b) { return a.value > b.value; });

  double best = grid.front().value;
  for (int c = 0; c < 6; ++c) {
    Candidate cur = grid[c];
    double step = dtheta;
    while (step > 1e-10) {
      bool improved = false;
      for (const auto& [dt, dp] : {std::pair{step, 0.0}, std::pair{-step, 0.0}, std::pair{0.0, step},
                                   std::pair{0.0, -step}, std::pair{step, step}, std::pair{-step, -step},
                                   std::pair{step, -step}, std::pair{-step, step}}) {
        const double th = cur.theta + dt;
        const double ph = cur.phi + dp;
        const double v = measurement_disturbance(rho.matrix(), sphere_point(th, ph));
        if (v > cur.value) {
          cur = {v, th, ph};
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
    best = std::max(best, cur.value);
  }
  return best;
}

double l1_coherence(const DensityMatrix& rho) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) s += std::abs(rho(i, j));
  return s;
}

double l1_coherence(const Matrix2& rho) { return std::abs(rho(0, 1)) + std::abs(rho(1, 0)); }

double correlated_coherence(const XState& rho) {
  return 2.0 * (std::abs(rho.rho14()) + std::abs(rho.rho23()));
}

double correlated_coherence_general(const DensityMatrix& rho) {
  return l1_coherence(rho) - l1_coherence(partial_trace_B(rho.matrix())) -
         l1_coherence(partial_trace_A(rho.matrix()));
}

namespace {

void expect_close(const char* what, double closed, double general, double tol) {
  if (!(std::abs(closed - general) <= tol)) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": closed form " << closed << " disagrees with definition " << general
       << " (tolerance " << tol << ")";
    throw CrossCheckFailure(os.str());
  }
}

}  // namespace

CorrelationSet correlations(const DensityMatrix& rho, const MeasureOptions& opts) {
  CorrelationSet c;
  c.negativity = negativity(rho);
  c.log_negativity = std::log2(2.0 * c.negativity + 1.0);
  c.l1_coherence = l1_coherence(rho);
  const Matrix3 w = w_matrix(rho);

  if (is_x_shaped(rho, opts.x_shape_tol)) {
    const XState x = XState::from_density(rho, opts.x_shape_tol);
    c.concurrence = concurrence_x(x);
    c.lqu = lqu_from_w(w_entries(w));
    c.min_trace = min_trace(x, opts.x_tol);
    c.correlated_coherence = correlated_coherence(x);

    if (opts.cross_check) {
      expect_close("concurrence", c.concurrence, concurrence_general(rho), opts.concurrence_check_tol);
      expect_close("negativity", c.negativity, negativity_trace_norm(rho), 1e-10);
      expect_close("lqu", c.lqu, lqu(rho), 1e-10);
      expect_close("correlated coherence", c.correlated_coherence, correlated_coherence_general(rho),
                   1e-10);
      if (std::abs(min_terms(x).x) > opts.x_tol && c.min_trace != c.correlated_coherence) {
        throw CrossCheckFailure("MIN differs from correlated coherence on the x != 0 branch");
      }
    }
  } else {
    c.concurrence = concurrence_general(rho);
    Matrix3 ws = (w + w.adjoint()) * 0.5;
    c.lqu = 1.0 - hermitian_eigenvalues(ws)[2];
    c.min_trace = min_trace_general(rho, opts.x_tol);
    c.correlated_coherence = correlated_coherence_general(rho);
    if (opts.cross_check) {
      expect_close("negativity", c.negativity, negativity_trace_norm(rho), 1e-10);
    }
  }
  return c;
}

}  // namespace qcorr
