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

#include "qcorr/dynamics.hpp"

#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/format.hpp"

namespace qcorr {

namespace {

Matrix4 dissipator(const Matrix4& a, const Matrix4& rho) {
  const Matrix4 ad = a.adjoint();
  const Matrix4 ada = ad * a;
  return a * rho * ad - (ada * rho + rho * ada) * 0.5;
}

}  // namespace

Liouvillian::Liouvillian(const ModelParams& params)
    : params_(params),
      h_(hamiltonian(params)),
      jumps_{spin_lowering(1), spin_lowering(2), spin_raising(1), spin_raising(2)},
      rates_{params.gamma() * (params.nbar() + 1.0), params.gamma() * (params.nbar() + 1.0),
             params.gamma() * params.nbar(), params.gamma() * params.nbar()} {
  // Column b of the superoperator is the image of the basis matrix E_b.
  for (std::size_t b = 0; b < 16; ++b) {
    Matrix4 e;
    e(b / 4, b % 4) = 1.0;
    const Matrix4 image = apply(e);
    for (std::size_t a = 0; a < 16; ++a) super_(a, b) = image(a / 4, a % 4);
  }
  for (std::size_t k = 0; k < 256; ++k) {
    re_[k] = super_.data()[k].real();
    im_[k] = super_.data()[k].imag();
  }
}

Matrix4 Liouvillian::apply(const Matrix4& rho) const {
  Matrix4 out = commutator(h_, rho) * cplx{0.0, -1.0};
  for (std::size_t k = 0; k < jumps_.size(); ++k) {
    if (rates_[k] == 0.0) continue;
    out += dissipator(jumps_[k], rho) * rates_[k];
  }
  return out;
}

void Liouvillian::apply(const Vector& v, Vector& out) const {
  // Real arithmetic keeps the hot loop free of the C99 complex-multiply
  // NaN recovery path.
  for (std::size_t a = 0; a < 16; ++a) {
    double sr = 0.0;
    double si = 0.0;
    const double* lr = &re_[a * 16];
    const double* li = &im_[a * 16];
    for (std::size_t b = 0; b < 16; ++b) {
      const double vr = v[b].real();
      const double vi = v[b].imag();
      sr += lr[b] * vr - li[b] * vi;
      si += lr[b] * vi + li[b] * vr;
    }
    out[a] = {sr, si};
  }
}

Matrix4 lindblad_rhs(const Matrix4& rho, const ModelParams& params) {
  return Liouvillian(params).apply(rho);
}

Liouvillian::Vector vectorize(const Matrix4& m) { return m.data(); }

Matrix4 unvectorize(const Liouvillian::Vector& v) {
  Matrix4 m;
  m.data() = v;
  return m;
}

namespace {

struct Rk4Workspace {
  Liouvillian::Vector k1, k2, k3, k4, tmp;
};

// One classical RK4 step; leaves L v (the rhs at the step start) in ws.k1.
void rk4_step(const Liouvillian& gen, Liouvillian::Vector& v, double h, Rk4Workspace& ws) {
  gen.apply(v, ws.k1);
  for (std::size_t i = 0; i < 16; ++i) ws.tmp[i] = v[i] + (0.5 * h) * ws.k1[i];
  gen.apply(ws.tmp, ws.k2);
  for (std::size_t i = 0; i < 16; ++i) ws.tmp[i] = v[i] + (0.5 * h) * ws.k2[i];
  gen.apply(ws.tmp, ws.k3);
  for (std::size_t i = 0; i < 16; ++i) ws.tmp[i] = v[i] + h * ws.k3[i];
  gen.apply(ws.tmp, ws.k4);
  const double w = h / 6.0;
  for (std::size_t i = 0; i < 16; ++i) v[i] += w * (ws.k1[i] + 2.0 * ws.k2[i] + 2.0 * ws.k3[i] + ws.k4[i]);
}

double max_abs(const Liouvillian::Vector& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

Trajectory evolve(const DensityMatrix& rho0, const ModelParams& params, double t_max, double dt,
                  const EvolveOptions& opts) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("time step must be > 0, got " + format_double(dt));
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
    throw DomainError("t_max must be >= 0, got " + format_double(t_max));
  }
  if (opts.stride == 0) throw DomainError("sample stride must be >= 1");

  const Liouvillian gen(params);
  const auto steps = static_cast<std::size_t>(std::ceil(t_max / dt - 1e-9));
  const double h = steps ? t_max / static_cast<double>(steps) : dt;

  Trajectory traj{.times = {}, .states = {}, .correlations = {}, .params = params, .dt = h, .steady_time = {}};
  const std::size_t expected = steps / opts.stride + 2;
  traj.times.reserve(expected);
  traj.states.reserve(expected);
  if (opts.attach_correlations) traj.correlations.reserve(expected);

  auto record = [&](std::size_t k, const Liouvillian::Vector& v) {
    const double t = static_cast<double>(k) * h;
    try {
      DensityMatrix rho = validate(unvectorize(v));
      if (opts.attach_correlations) traj.correlations.push_back(correlations(rho, opts.measures));
      traj.states.push_back(std::move(rho));
    } catch (const StepRejected&) {
      throw;
    } catch (const Error& e) {
      throw StepRejected(t, e.what());
    }
    traj.times.push_back(t);
  };

  Liouvillian::Vector v = vectorize(rho0.matrix());
  record(0, v);

  Rk4Workspace ws;
  for (std::size_t k = 1; k <= steps; ++k) {
    rk4_step(gen, v, h, ws);
    if (!traj.steady_time && max_abs(ws.k1) <= opts.steady_tol) {
      traj.steady_time = static_cast<double>(k - 1) * h;
      if (opts.stop_at_steady) {
        record(k, v);
        return traj;
      }
    }
    if (k % opts.stride == 0 || k == steps) record(k, v);
  }
  if (!traj.steady_time) {
    gen.apply(v, ws.k1);
    if (max_abs(ws.k1) <= opts.steady_tol) traj.steady_time = t_max;
  }
  return traj;
}

Matrix4 propagate(const Matrix4& rho0, const Liouvillian& generator, double duration, double max_dt) {
  if (!(max_dt > 0.0)) throw DomainError("time step must be > 0");
  if (!(duration >= 0.0)) throw DomainError("propagation duration must be >= 0");
  const auto steps = static_cast<std::size_t>(std::ceil(duration / max_dt - 1e-12));
  if (steps == 0) return rho0;
  const double h = duration / static_cast<double>(steps);
  Liouvillian::Vector v = vectorize(rho0);
  Rk4Workspace ws;
  for (std::size_t k = 0; k < steps; ++k) rk4_step(generator, v, h, ws);
  return unvectorize(v);
}

}  // namespace qcorr
