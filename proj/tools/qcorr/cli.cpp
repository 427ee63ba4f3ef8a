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

#include "qcorr/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qcorr/analytic.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/esd.hpp"
#include "qcorr/format.hpp"
#include "qcorr/measures.hpp"

namespace qcorr::cli {

namespace {

/// A CSV row failed the CorrelationSet range checks.
class RangeViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kAuditTol = 1e-6;

double parse_number(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last || first == last) {
    throw ConfigError("cannot read " + what + " from '" + text + "'");
  }
  return v;
}

std::string fmt(double x) { return format_double(x); }

// Evaluates f(0..n-1) on a small thread pool; results and the first error
// (in input order) come back as if run sequentially.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(n, hw);
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < workers; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

struct ParamFlags {
  double j = 0.1;
  double delta = 0.5;
  double omega = 1.0;
  double gamma = 0.1;
  double nbar = 0.0;

  ModelParams params() const { return ModelParams(j, delta, omega, gamma, nbar); }

  void add_to(CLI::App& app) {
    app.add_option("--gamma", gamma, "relaxation rate gamma/omega")->capture_default_str();
    app.add_option("--delta", delta, "anisotropy Delta/omega")->capture_default_str();
    app.add_option("--j", j, "isotropic coupling J/omega")->capture_default_str();
    app.add_option("--omega", omega, "field strength (reference unit)")->capture_default_str();
    app.add_option("--nbar", nbar, "mean thermal excitation of the bath")->capture_default_str();
  }

  // Sets one named parameter; ConfigError for names this command cannot sweep.
  ParamFlags with(const std::string& name, double v, std::initializer_list<const char*> allowed) const {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return name == a; })) {
      std::string list;
      for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
      throw ConfigError("cannot sweep '" + name + "' here; expected one of " + list);
    }
    ParamFlags out = *this;
    if (name == "gamma") out.gamma = v;
    if (name == "delta") out.delta = v;
    if (name == "j") out.j = v;
    if (name == "omega") out.omega = v;
    if (name == "nbar") out.nbar = v;
    return out;
  }
};

void warn_weak_coupling(const ModelParams& p, std::ostream& err) {
  if (p.outside_weak_coupling()) {
    err << "warning: |J|/omega = " << fmt(std::abs(p.j() / p.omega())) << ", |Delta|/omega = "
        << fmt(std::abs(p.delta() / p.omega()))
        << "; local equal-rate relaxation is only justified for couplings well below the field\n";
  }
}

void emit(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open output file '" + path + "'");
  os << data;
  if (!os) throw ConfigError("failed writing output file '" + path + "'");
}

// -- evolve -------------------------------------------------------------------

struct EvolveConfig {
  ParamFlags flags;
  std::string initial = "mixture:0.5";
  double t_max = 100.0;
  double dt = 1e-3;
  std::size_t stride = 100;
  bool stop_at_steady = false;
  std::string sweep;
  std::string out;
};

std::optional<ClosedForm> closed_form_for(const InitialState& init, const ModelParams& p) {
  if (p.nbar() != 0.0) return std::nullopt;
  switch (init.kind) {
    case InitialState::Kind::Werner:
      return ClosedForm([p, q = init.param](double t) { return analytic_werner(t, q, p); });
    case InitialState::Kind::Mixture:
      if (p.j() == 0.0 && p.delta() == 0.0) {
        return ClosedForm([p, w = init.param](double t) {
          return analytic_independent_mixture(t, w, p.gamma(), p.omega());
        });
      }
      if (init.param == 0.5) return ClosedForm([p](double t) { return analytic_mixture(t, p); });
      return std::nullopt;
    case InitialState::Kind::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

struct EvolveRun {
  std::string rows;
  std::string notes;
};

EvolveRun evolve_point(const EvolveConfig& cfg, const InitialState& init, const DensityMatrix& rho0,
                       const ModelParams& p, const std::string& prefix) {
  EvolveRun run;
  std::ostringstream notes;
  const std::string tag = prefix.empty() ? "" : "[" + prefix.substr(0, prefix.size() - 1) + "] ";
  warn_weak_coupling(p, notes);

  EvolveOptions opts;
  opts.stride = cfg.stride;
  opts.stop_at_steady = cfg.stop_at_steady;
  const Trajectory tr = evolve(rho0, p, cfg.t_max, cfg.dt, opts);

  std::ostringstream rows;
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    const CorrelationSet& c = tr.correlations[i];
    const std::string bad = check_ranges(c);
    if (!bad.empty()) {
      throw RangeViolation("row " + std::to_string(i + 1) + " (" + tag + "t=" + fmt(tr.times[i]) + "): " + bad);
    }
    rows << prefix << fmt(tr.times[i]) << ',' << fmt(p.gamma() * tr.times[i]) << ',' << fmt(c.concurrence) << ','
         << fmt(c.negativity) << ',' << fmt(c.log_negativity) << ',' << fmt(c.lqu) << ',' << fmt(c.min_trace) << ','
         << fmt(c.correlated_coherence) << ',' << fmt(c.l1_coherence) << ',' << fmt(purity(tr.states[i])) << '\n';
  }
  run.rows = rows.str();

  notes << "# " << tag << "dt used " << fmt(tr.dt) << ", " << tr.times.size() << " samples\n";
  if (tr.steady_time) {
    notes << "# " << tag << "steady state (max|rhs| <= 1e-12) reached at t = " << fmt(*tr.steady_time) << '\n';
  } else {
    notes << "# " << tag << "steady state not reached by t = " << fmt(tr.times.back()) << '\n';
  }

  if (const auto closed = closed_form_for(init, p)) {
    std::map<std::string, ClosedFormDiscrepancy> worst;
    double max_dev = 0.0;
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
      const XState x = (*closed)(tr.times[i]);
      const Matrix4 ref = tr.states[i].matrix();
      max_dev = std::max(max_dev, (x.to_matrix() - ref).max_abs());
      for (const auto& d : compare_closed_form(x, ref, tr.times[i], kAuditTol)) {
        auto it = worst.find(d.entry);
        if (it == worst.end() || d.max_abs_error > it->second.max_abs_error) worst[d.entry] = d;
      }
    }
    notes << "# " << tag << "closed-form audit: max deviation " << fmt(max_dev) << " over " << tr.times.size()
          << " samples\n";
    for (const auto& [entry, d] : worst) {
      notes << "warning: " << tag << "closed-form " << entry << " deviates from the integrated state by "
            << fmt(d.max_abs_error) << " at t = " << fmt(d.at_time) << '\n';
    }
  }
  run.notes = notes.str();
  return run;
}

void cmd_evolve(const EvolveConfig& cfg, std::ostream& out, std::ostream& err) {
  const InitialState init = parse_initial(cfg.initial);
  const DensityMatrix rho0 = make_initial(init);
  const std::string header = "t,gamma_t,concurrence,negativity,log_negativity,lqu,min,ccc,l1_coherence,purity\n";

  std::vector<ParamFlags> points{cfg.flags};
  std::vector<double> keys;
  std::string name;
  if (!cfg.sweep.empty()) {
    const Sweep s = parse_sweep(cfg.sweep);
    name = s.name;
    keys = s.values();
    points.clear();
    for (double v : keys) points.push_back(cfg.flags.with(s.name, v, {"gamma", "delta", "j", "nbar", "omega"}));
  }
  // Construct every parameter set up front so domain errors surface before any work.
  std::vector<ModelParams> params;
  for (const auto& f : points) params.push_back(f.params());

  const auto runs = parallel_map<EvolveRun>(params.size(), [&](std::size_t i) {
    return evolve_point(cfg, init, rho0, params[i], name.empty() ? "" : fmt(keys[i]) + ",");
  });

  std::string data = name.empty() ? header : name + "," + header;
  for (const auto& r : runs) {
    data += r.rows;
    err << r.notes;
  }
  emit(cfg.out, data, out);
}

// -- esd ----------------------------------------------------------------------

struct EsdConfig {
  ParamFlags flags;
  double w = 0.5;
  std::string mode = "closed";
  double horizon = 0.0;
  double dt = 1e-3;
  std::string sweep;
  std::string out;
};

// gamma * tau for one point; +inf when entanglement survives.
double esd_point(const EsdConfig& cfg, double w, double gamma, double nbar, std::string& note) {
  if (cfg.mode == "closed") {
    if (nbar == 0.0) return esd_time_zero_T(w, gamma).gamma_tau;
    try {
      return esd_time_thermal(w, gamma, nbar, cfg.horizon).gamma_tau;
    } catch (const NoDeath& e) {
      note = e.what();
      return std::numeric_limits<double>::infinity();
    }
  }
  // numeric: integrate the uncoupled qubits and locate the first dark interval
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("mixture weight w must lie in [0, 1], got " + fmt(w));
  if (!(gamma > 0.0)) throw DomainError("gamma must be positive, got " + fmt(gamma));
  const ModelParams p(0.0, 0.0, cfg.flags.omega, gamma, nbar);
  const double horizon = cfg.horizon > 0.0 ? cfg.horizon : default_esd_horizon(nbar);
  EvolveOptions opts;
  opts.stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::round(0.01 / (gamma * cfg.dt))));
  opts.attach_correlations = false;
  const Trajectory tr = evolve(make_mixture(w).to_density(), p, horizon / gamma, cfg.dt, opts);
  const ESDResult r = esd_from_trajectory(tr);
  if (r.infinite()) note = "no entanglement death within gamma*t <= " + fmt(horizon);
  return r.gamma_tau;
}

void cmd_esd(const EsdConfig& cfg, std::ostream& out, std::ostream& err) {
  struct Point {
    double w, gamma, nbar, key;
  };
  std::vector<Point> points{{cfg.w, cfg.flags.gamma, cfg.flags.nbar, 0.0}};
  std::string name;
  if (!cfg.sweep.empty()) {
    const Sweep s = parse_sweep(cfg.sweep);
    if (s.name != "w" && s.name != "nbar" && s.name != "gamma") {
      throw ConfigError("cannot sweep '" + s.name + "' here; expected one of w, nbar, gamma");
    }
    name = s.name;
    points.clear();
    for (double v : s.values()) {
      Point pt{cfg.w, cfg.flags.gamma, cfg.flags.nbar, v};
      if (name == "w") pt.w = v;
      if (name == "nbar") pt.nbar = v;
      if (name == "gamma") pt.gamma = v;
      points.push_back(pt);
    }
  }
  for (const auto& pt : points) {
    if (!(pt.nbar >= 0.0)) throw DomainError("nbar must be non-negative, got " + fmt(pt.nbar));
  }

  struct Result {
    double gamma_tau;
    std::string note;
  };
  const auto results = parallel_map<Result>(points.size(), [&](std::size_t i) {
    Result r;
    r.gamma_tau = esd_point(cfg, points[i].w, points[i].gamma, points[i].nbar, r.note);
    return r;
  });

  std::string data;
  if (name.empty()) {
    data = fmt(results[0].gamma_tau) + "\n";
    if (!results[0].note.empty()) err << "# " << results[0].note << '\n';
  } else {
    data = name + ",gamma_tau\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
      data += fmt(points[i].key) + "," + fmt(results[i].gamma_tau) + "\n";
      if (!results[i].note.empty()) err << "# " << name << "=" << fmt(points[i].key) << ": " << results[i].note << '\n';
    }
  }
  emit(cfg.out, data, out);
}

// -- steady ---------------------------------------------------------------------

struct SteadyConfig {
  ParamFlags flags;
  std::string sweep;
  std::string out;
};

void cmd_steady(const SteadyConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<ParamFlags> points{cfg.flags};
  std::vector<double> keys{cfg.flags.nbar};
  std::string name = "nbar";
  if (!cfg.sweep.empty()) {
    const Sweep s = parse_sweep(cfg.sweep);
    name = s.name;
    points.clear();
    keys = s.values();
    for (double v : keys) points.push_back(cfg.flags.with(s.name, v, {"nbar", "delta", "gamma", "j"}));
  }
  std::vector<ModelParams> params;
  for (const auto& f : points) params.push_back(f.params());
  warn_weak_coupling(params.front(), err);

  const auto sets = parallel_map<CorrelationSet>(params.size(), [&](std::size_t i) {
    return steady_correlations_thermal(params[i]);
  });

  std::string data = name + ",concurrence,log_negativity,lqu,min,ccc\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const CorrelationSet& c = sets[i];
    const std::string bad = check_ranges(c);
    if (!bad.empty()) throw RangeViolation("row " + std::to_string(i + 1) + " (" + name + "=" + fmt(keys[i]) + "): " + bad);
    data += fmt(keys[i]) + "," + fmt(c.concurrence) + "," + fmt(c.log_negativity) + "," + fmt(c.lqu) + "," +
            fmt(c.min_trace) + "," + fmt(c.correlated_coherence) + "\n";
  }
  emit(cfg.out, data, out);
}

}  // namespace

std::vector<double> Sweep::values() const {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  if (count > 1) v.back() = stop;
  return v;
}

Sweep parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, ':')) parts.push_back(part);
  if (parts.size() != 4 || parts[0].empty()) {
    throw ConfigError("sweep must look like NAME:START:STOP:COUNT, got '" + text + "'");
  }
  Sweep s;
  s.name = parts[0];
  s.start = parse_number(parts[1], "sweep start");
  s.stop = parse_number(parts[2], "sweep stop");
  const double count = parse_number(parts[3], "sweep count");
  if (!(count >= 1.0) || count != std::floor(count) || count > 1e7) {
    throw ConfigError("sweep count must be a positive integer, got '" + parts[3] + "'");
  }
  s.count = static_cast<std::size_t>(count);
  return s;
}

InitialState parse_initial(const std::string& text) {
  InitialState init;
  if (text.rfind("custom@", 0) == 0) {
    init.kind = InitialState::Kind::Custom;
    init.path = text.substr(7);
    if (init.path.empty()) throw ConfigError("custom@ needs a file path");
    return init;
  }
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (colon == std::string::npos || (kind != "mixture" && kind != "werner")) {
    throw ConfigError("initial state must be mixture:W, werner:P or custom@FILE, got '" + text + "'");
  }
  init.kind = kind == "mixture" ? InitialState::Kind::Mixture : InitialState::Kind::Werner;
  init.param = parse_number(text.substr(colon + 1), kind + " parameter");
  return init;
}

DensityMatrix make_initial(const InitialState& init) {
  switch (init.kind) {
    case InitialState::Kind::Mixture:
      return make_mixture(init.param).to_density();
    case InitialState::Kind::Werner:
      return make_werner(init.param).to_density();
    case InitialState::Kind::Custom:
      return load_density_matrix(init.path);
  }
  throw ConfigError("unknown initial state");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlation dynamics of two coupled qubits in a dissipative bath", "qcorr"};
  app.require_subcommand(1);

  EvolveConfig ev;
  auto* evolve_cmd = app.add_subcommand("evolve", "integrate the master equation and write correlations as CSV");
  ev.flags.add_to(*evolve_cmd);
  evolve_cmd->add_option("--initial", ev.initial, "mixture:W | werner:P | custom@FILE")->capture_default_str();
  evolve_cmd->add_option("--t-max", ev.t_max, "final time in units of 1/omega")->capture_default_str();
  evolve_cmd->add_option("--dt", ev.dt, "integration step")->capture_default_str();
  evolve_cmd->add_option("--stride", ev.stride, "keep every n-th step")->capture_default_str();
  evolve_cmd->add_flag("--stop-at-steady", ev.stop_at_steady, "end once max|rhs| <= 1e-12");
  evolve_cmd->add_option("--sweep", ev.sweep, "NAME:START:STOP:COUNT over gamma, delta, j, nbar or omega");
  evolve_cmd->add_option("--out", ev.out, "output CSV (default stdout)");

  EsdConfig es;
  auto* esd_cmd = app.add_subcommand("esd", "entanglement sudden death time gamma*tau for uncoupled qubits");
  es.flags.add_to(*esd_cmd);
  esd_cmd->add_option("--w", es.w, "mixture weight w")->capture_default_str();
  esd_cmd->add_option("--mode", es.mode, "closed | numeric")
      ->check(CLI::IsMember({"closed", "numeric"}))
      ->capture_default_str();
  esd_cmd->add_option("--horizon", es.horizon, "search horizon in gamma*t (default 100/(2 nbar + 1))");
  esd_cmd->add_option("--dt", es.dt, "integration step for --mode numeric")->capture_default_str();
  esd_cmd->add_option("--sweep", es.sweep, "NAME:START:STOP:COUNT over w, nbar or gamma");
  esd_cmd->add_option("--out", es.out, "output file (default stdout)");

  SteadyConfig st;
  auto* steady_cmd = app.add_subcommand("steady", "steady-state correlations as CSV");
  st.flags.add_to(*steady_cmd);
  steady_cmd->add_option("--sweep", st.sweep, "NAME:START:STOP:COUNT over nbar, delta, gamma or j");
  steady_cmd->add_option("--out", st.out, "output CSV (default stdout)");

  std::vector<std::string> storage(args.begin(), args.end());
  if (storage.empty()) storage.emplace_back("qcorr");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (evolve_cmd->parsed()) cmd_evolve(ev, out, err);
    if (esd_cmd->parsed()) cmd_esd(es, out, err);
    if (steady_cmd->parsed()) cmd_steady(st, out, err);
  } catch (const RangeViolation& e) {
    err << "error: range check failed at " << e.what() << '\n';
    return kExitFailure;
  } catch (const StepRejected& e) {
    err << "error: integration failed: " << e.what() << '\n';
    return kExitFailure;
  } catch (const CrossCheckFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const ConvergenceFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace qcorr::cli
