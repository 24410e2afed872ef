// Copyright 2026 The Holonomy Authors
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

#include "exp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "core/error.hpp"
#include "core/linalg.hpp"
#include "dynamics/evolve.hpp"
#include "gate2q/gate2q.hpp"
#include "json.hpp"
#include "metrics/metrics.hpp"
#include "model/stark.hpp"
#include "model/transmon.hpp"
#include "model/twoqubit.hpp"
#include "path/path.hpp"
#include "path/waveform.hpp"
#include "sweep/sweep.hpp"

namespace holo {

const char* const kExperimentNames[6] = {"single-gate",     "gate-fidelity",
                                         "robustness-scan", "two-qubit",
                                         "stark-curve",     "qs-table"};

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  const std::filesystem::path p = std::filesystem::path(dir) / name;
  std::ofstream out(p, std::ios::binary);
  require(out.good(), ErrorCode::io, "cannot write '" + p.string() + "'");
  out << content;
  require(out.good(), ErrorCode::io, "write failed for '" + p.string() + "'");
}

class Csv {
 public:
  explicit Csv(const std::string& header) { body_ = header + "\n"; }
  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) body_ += ',';
      body_ += fmt(values[i]);
    }
    body_ += '\n';
  }
  const std::string& text() const { return body_; }

 private:
  std::string body_;
};

std::string waveform_csv(const ControlWaveform& wf) {
  Csv csv("t_ns,omega_rad_per_ns,phi1_rad,phi2_rad");
  for (const WaveformSample& s : wf.samples())
    csv.row({s.t_ns, s.omega, s.phi1, s.phi2});
  return csv.text();
}

// Resolved single-qubit loop parameters.
struct GateSetup {
  std::string gate;
  HolonomySpec holo;
  double n = 0.0;
  double tau = 0.0;
  double omega_max = 0.0;
  // Enforced at synthesis only when the config names a cap and the
  // duration is explicit; tau = min meets the cap by construction.
  double cap = 0.0;
};

GateSetup read_gate(const Config& cfg) {
  GateSetup g;
  g.gate = cfg.str("path.gate", "not");
  if (g.gate == "not") {
    g.holo = {kPi / 2.0, 0.0, kPi};
  } else if (g.gate == "hadamard") {
    g.holo = {kPi / 4.0, 0.0, kPi};
  } else if (g.gate == "custom") {
    require(cfg.has("path.theta"), ErrorCode::config,
            "path.gate = custom needs path.theta");
    g.holo.theta = cfg.angle("path.theta", 0.0);
    g.holo.phi = cfg.angle("path.phi", 0.0);
    g.holo.gamma = cfg.angle("path.gamma", kPi);
  } else {
    fail(ErrorCode::config,
         "path.gate must be not, hadamard or custom (got '" + g.gate + "')");
  }
  g.n = cfg.number("path.n", 0.0);
  g.omega_max = cfg.frequency("path.omega_max", 0.100530964914873);
  const std::string tau = cfg.str("path.tau", "min");
  if (tau == "min") {
    g.tau = tau_for_peak(standard_path(100.0, g.holo, g.n), g.omega_max);
  } else {
    g.tau = cfg.time_ns("path.tau", 0.0);
    if (cfg.has("path.omega_max")) g.cap = g.omega_max;
  }
  return g;
}

struct DeviceSetup {
  TransmonParams transmon;
  bool decoherence = true;
  ModelKind model = ModelKind::leaky4;
};

DeviceSetup read_device(const Config& cfg) {
  DeviceSetup d;
  d.transmon.alpha = cfg.frequency("device.alpha", 2.513274122871834);
  d.decoherence = cfg.flag("device.decoherence", true);
  d.transmon.gamma1 = cfg.frequency("device.gamma1", 3.141592653589793e-5);
  d.transmon.gamma2 = cfg.frequency("device.gamma2", 3.141592653589793e-5);
  if (!d.decoherence) d.transmon.gamma1 = d.transmon.gamma2 = 0.0;
  const std::string m = cfg.str("device.model", "leaky4");
  if (m == "ideal3") {
    d.model = ModelKind::ideal3;
  } else if (m == "leaky4") {
    d.model = ModelKind::leaky4;
  } else {
    fail(ErrorCode::config,
         "device.model must be ideal3 or leaky4 (got '" + m + "')");
  }
  return d;
}

EvolveOptions read_evolve(const Config& cfg, double default_dt) {
  EvolveOptions opt;
  opt.dt = cfg.time_ns("run.dt", default_dt);
  opt.max_samples = cfg.integer("run.samples", 2001);
  require(opt.dt > 0.0, ErrorCode::config, "run.dt must be positive");
  require(opt.max_samples >= 2, ErrorCode::config,
          "run.samples must be at least 2");
  return opt;
}

// Initial qubit amplitudes (a on g, b on f) by name.
std::pair<cd, cd> read_initial(const std::string& name) {
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "g") return {1.0, 0.0};
  if (name == "f") return {0.0, 1.0};
  if (name == "plus") return {r, r};
  if (name == "imag") return {r, kI * r};
  fail(ErrorCode::config,
       "run.initial must be g, f, plus or imag (got '" + name + "')");
}

json gate_params_json(const GateSetup& g, const DeviceSetup& d) {
  json p;
  p["gate"] = g.gate;
  p["theta_rad"] = g.holo.theta;
  p["phi_rad"] = g.holo.phi;
  p["gamma_rad"] = g.holo.gamma;
  p["n"] = g.n;
  p["tau_ns"] = g.tau;
  p["omega_max_rad_per_ns"] = g.omega_max;
  p["alpha_rad_per_ns"] = d.transmon.alpha;
  p["gamma1_rad_per_ns"] = d.transmon.gamma1;
  p["gamma2_rad_per_ns"] = d.transmon.gamma2;
  p["model"] = d.model == ModelKind::ideal3 ? "ideal3" : "leaky4";
  return p;
}

struct Built {
  json report;
  std::string summary;
  std::map<std::string, double> scalars;
};

Built run_single_gate(const Config& cfg, const std::string& out_dir,
                      int /*jobs*/) {
  const GateSetup g = read_gate(cfg);
  const DeviceSetup d = read_device(cfg);
  const double epsilon = cfg.number("run.epsilon", 0.0);
  const EvolveOptions opt = read_evolve(cfg, 0.005);
  const std::string initial = cfg.str("run.initial", "g");
  const auto [a, b] = read_initial(initial);

  ControlWaveform wf =
      inverse_engineer(Path(standard_path(g.tau, g.holo, g.n)), g.cap);
  if (epsilon != 0.0) wf = apply_systematic_error(wf, epsilon);

  const int levels = d.model == ModelKind::ideal3 ? 3 : 4;
  const HamiltonianFn h = d.model == ModelKind::ideal3
                              ? ideal3_hamiltonian(wf)
                              : leaky4_hamiltonian(wf, d.transmon);
  const NoiseModel noise =
      d.decoherence ? transmon_noise(d.transmon, levels) : NoiseModel{};

  CVec amp0 = CVec::Zero(levels);
  amp0(kG) = a;
  amp0(kF) = b;
  const StateVector psi0 = make_state(amp0, h.dims);

  const Mat u2 = holonomy_target(g.holo);
  CVec tamp = CVec::Zero(levels);
  tamp(kG) = u2(0, 0) * a + u2(0, 1) * b;
  tamp(kF) = u2(1, 0) * a + u2(1, 1) * b;
  const StateVector target = make_state(tamp, h.dims);

  Csv csv("t_ns,pop_g,pop_e,pop_f,pop_h,fidelity");
  double final_fidelity = 0.0, leakage_final = 0.0;
  if (noise.empty()) {
    const SchrodingerResult ev = evolve_schrodinger(h, psi0, g.tau, opt);
    for (std::size_t k = 0; k < ev.times.size(); ++k) {
      const CVec& v = ev.states[k];
      const double ph = levels > 3 ? std::norm(v(3)) : 0.0;
      csv.row({ev.times[k], std::norm(v(kG)), std::norm(v(kE)),
               std::norm(v(kF)), ph, std::norm(target.amp.dot(v))});
    }
    const CVec& vf = ev.final_state.amp;
    final_fidelity = std::norm(target.amp.dot(vf));
    leakage_final = 1.0 - std::norm(vf(kG)) - std::norm(vf(kF));
  } else {
    const LindbladResult ev =
        evolve_lindblad(h, noise, pure_density(psi0), g.tau, opt);
    for (std::size_t k = 0; k < ev.times.size(); ++k) {
      const Mat& r = ev.states[k];
      const double ph = levels > 3 ? r(3, 3).real() : 0.0;
      csv.row({ev.times[k], r(kG, kG).real(), r(kE, kE).real(),
               r(kF, kF).real(), ph,
               (target.amp.adjoint() * r * target.amp)(0).real()});
    }
    const Mat& rf = ev.final_state.rho;
    final_fidelity = (target.amp.adjoint() * rf * target.amp)(0).real();
    leakage_final = 1.0 - rf(kG, kG).real() - rf(kF, kF).real();
  }
  write_file(out_dir, "trajectory.csv", csv.text());
  write_file(out_dir, "waveform.csv", waveform_csv(wf));

  Built out;
  out.report["experiment"] = "single-gate";
  out.report["params"] = gate_params_json(g, d);
  out.report["params"]["epsilon"] = epsilon;
  out.report["params"]["initial"] = initial;
  out.report["gate"] = g.gate;
  out.report["model"] = d.model == ModelKind::ideal3 ? "ideal3" : "leaky4";
  out.report["state_fidelity"] = final_fidelity;
  out.report["gate_fidelity"] = nullptr;
  out.report["leakage_final"] = leakage_final;
  out.report["tau_ns"] = g.tau;
  out.report["peak_omega_rad_per_ns"] = wf.peak_omega();
  out.scalars["state_fidelity"] = final_fidelity;
  out.scalars["leakage_final"] = leakage_final;
  out.scalars["tau_ns"] = g.tau;
  out.scalars["peak_omega_rad_per_ns"] = wf.peak_omega();
  std::ostringstream s;
  s << "single-gate " << g.gate << " (" << out.report["model"].get<std::string>()
    << "): state_fidelity = " << fmt(final_fidelity)
    << ", leakage_final = " << fmt(leakage_final);
  out.summary = s.str();
  return out;
}

Built run_gate_fidelity(const Config& cfg, const std::string& out_dir,
                        int /*jobs*/) {
  const GateSetup g = read_gate(cfg);
  const DeviceSetup d = read_device(cfg);
  const double epsilon = cfg.number("run.epsilon", 0.0);
  const EvolveOptions opt = read_evolve(cfg, 0.005);
  const int states = cfg.integer("run.states", 1001);
  require(states >= 2, ErrorCode::config, "run.states must be at least 2");

  ControlWaveform wf =
      inverse_engineer(Path(standard_path(g.tau, g.holo, g.n)), g.cap);
  if (epsilon != 0.0) wf = apply_systematic_error(wf, epsilon);
  const int levels = d.model == ModelKind::ideal3 ? 3 : 4;
  const HamiltonianFn h = d.model == ModelKind::ideal3
                              ? ideal3_hamiltonian(wf)
                              : leaky4_hamiltonian(wf, d.transmon);
  const NoiseModel noise =
      d.decoherence ? transmon_noise(d.transmon, levels) : NoiseModel{};

  // Four evolutions give the channel at every sample; the state average
  // is then pure linear algebra per time point.
  const QubitChannelSeries series = evolve_qubit_channel_series(h, noise, g.tau, opt);
  const std::vector<GateFidelitySample> grid = gate_fidelity_grid(g.holo, states);
  std::vector<CVec> targets;
  targets.reserve(grid.size());
  for (const GateFidelitySample& s : grid) {
    CVec t = CVec::Zero(levels);
    t(kG) = s.target(0);
    t(kF) = s.target(1);
    targets.push_back(std::move(t));
  }

  Csv csv("t_ns,gate_fidelity");
  double final_avg = 0.0;
  for (std::size_t k = 0; k < series.times.size(); ++k) {
    const QubitChannel& c = series.channels[k];
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const DensityMatrix rho = c.apply(grid[i].psi0(0), grid[i].psi0(1));
      sum += (targets[i].adjoint() * rho.rho * targets[i])(0).real();
    }
    const double avg = sum / static_cast<double>(grid.size());
    csv.row({series.times[k], avg});
    final_avg = avg;
  }
  write_file(out_dir, "gate_fidelity.csv", csv.text());
  write_file(out_dir, "waveform.csv", waveform_csv(wf));

  Built out;
  out.report["experiment"] = "gate-fidelity";
  out.report["params"] = gate_params_json(g, d);
  out.report["params"]["epsilon"] = epsilon;
  out.report["params"]["states"] = states;
  out.report["gate"] = g.gate;
  out.report["model"] = d.model == ModelKind::ideal3 ? "ideal3" : "leaky4";
  out.report["gate_fidelity"] = final_avg;
  out.report["state_fidelity"] = nullptr;
  out.report["tau_ns"] = g.tau;
  out.scalars["gate_fidelity"] = final_avg;
  out.scalars["tau_ns"] = g.tau;
  std::ostringstream s;
  s << "gate-fidelity " << g.gate << " ("
    << out.report["model"].get<std::string>() << ", " << states
    << " states): gate_fidelity = " << fmt(final_avg);
  out.summary = s.str();
  return out;
}

Built run_scan(const Config& cfg, const std::string& out_dir, int jobs) {
  const GateSetup g = read_gate(cfg);
  const DeviceSetup d = read_device(cfg);

  SweepSpec spec;
  spec.gate = g.holo;
  spec.omega_max = g.omega_max;
  spec.transmon = d.transmon;
  spec.decoherence = d.decoherence;
  spec.model = d.model;
  spec.eps_min = cfg.number("sweep.eps_min", -0.1);
  spec.eps_max = cfg.number("sweep.eps_max", 0.1);
  spec.eps_steps = cfg.integer("sweep.eps_steps", 21);
  spec.n_values = cfg.number_list("sweep.n_values", {0.0, 0.6, 1.0});
  spec.fidelity_samples = cfg.integer("sweep.states", 101);
  const std::string crit = cfg.str("sweep.criterion", "mean");
  if (crit == "mean") {
    spec.criterion = SweepCriterion::mean;
  } else if (crit == "worst") {
    spec.criterion = SweepCriterion::worst;
  } else {
    fail(ErrorCode::config,
         "sweep.criterion must be mean or worst (got '" + crit + "')");
  }
  spec.jobs = jobs;
  spec.evolve.dt = cfg.time_ns("run.dt", 0.005);
  spec.evolve.max_samples = 2;

  const SweepResult res = robustness_scan(spec);

  Csv csv("n,epsilon,gate_fidelity,tau_ns");
  int failed = 0;
  for (const SweepCell& c : res.grid) {
    csv.row({c.n, c.epsilon, c.gate_fidelity, c.tau_ns});
    if (!c.ok) ++failed;
  }
  write_file(out_dir, "scan.csv", csv.text());

  Built out;
  out.report["experiment"] = "robustness-scan";
  out.report["params"] = gate_params_json(g, d);
  out.report["params"]["eps_min"] = spec.eps_min;
  out.report["params"]["eps_max"] = spec.eps_max;
  out.report["params"]["eps_steps"] = spec.eps_steps;
  out.report["params"]["states"] = spec.fidelity_samples;
  out.report["params"]["criterion"] = crit;
  out.report["n_values"] = res.n_values;
  out.report["criterion_by_n"] = res.criterion_by_n;
  out.report["optimal_n"] = res.optimal_n;
  out.report["optimal_value"] = res.optimal_value;
  out.report["failed_cells"] = failed;
  out.scalars["optimal_n"] = res.optimal_n;
  out.scalars["optimal_value"] = res.optimal_value;
  out.scalars["failed_cells"] = failed;
  std::ostringstream s;
  s << "robustness-scan " << g.gate << " over " << res.n_values.size()
    << " n x " << res.epsilons.size()
    << " epsilon: optimal_n = " << fmt(res.optimal_n) << " ("
    << crit << " fidelity " << fmt(res.optimal_value) << ")";
  out.summary = s.str();
  return out;
}

TwoQubitDeviceParams read_two_qubit_device(const Config& cfg) {
  TwoQubitDeviceParams dev = reference_two_qubit_device();
  dev.qubit1.alpha = dev.qubit2.alpha =
      cfg.frequency("device.alpha", dev.qubit1.alpha);
  dev.auxiliary.alpha = cfg.frequency("device.alpha_aux", dev.auxiliary.alpha);
  dev.g1 = cfg.frequency("device.g", dev.g1);
  dev.g2 = cfg.frequency("device.g2", dev.g1);
  dev.delta = cfg.frequency("device.delta", dev.delta);
  dev.delta_k = dev.qubit1.alpha - dev.delta;
  dev.delta_a = 2.0 * dev.delta_k - dev.qubit1.alpha;
  const bool deco = cfg.flag("device.decoherence", false);
  const double g1r = cfg.frequency("device.gamma1", 0.0);
  const double g2r = cfg.frequency("device.gamma2", 0.0);
  dev.qubit1.gamma1 = dev.qubit2.gamma1 = dev.auxiliary.gamma1 = deco ? g1r : 0.0;
  dev.qubit1.gamma2 = dev.qubit2.gamma2 = dev.auxiliary.gamma2 = deco ? g2r : 0.0;
  validate_two_qubit_device(dev);
  return dev;
}

std::vector<double> read_stark_grid(const Config& cfg) {
  const int points = cfg.integer("stark.points", 73);
  require(points >= 4, ErrorCode::config, "stark.points must be at least 4");
  const double top = cfg.frequency("stark.max_drive", 2.2619467105846498);
  require(top > 0.0, ErrorCode::config, "stark.max_drive must be positive");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = top * i / static_cast<double>(points - 1);
  return grid;
}

json two_qubit_params_json(const TwoQubitDeviceParams& dev,
                           const TwoQubitGateSpec& spec) {
  json p;
  p["vartheta_rad"] = spec.vartheta;
  p["phi_rad"] = spec.phi;
  p["gamma_rad"] = spec.gamma;
  p["n"] = spec.n;
  p["tau_ns"] = spec.tau;
  p["alpha_rad_per_ns"] = dev.qubit1.alpha;
  p["alpha_aux_rad_per_ns"] = dev.auxiliary.alpha;
  p["g_rad_per_ns"] = dev.g1;
  p["delta_rad_per_ns"] = dev.delta;
  return p;
}

Built run_two_qubit(const Config& cfg, const std::string& out_dir, int jobs) {
  const TwoQubitDeviceParams dev = read_two_qubit_device(cfg);
  TwoQubitGateSpec spec;
  spec.vartheta = cfg.angle("two_qubit.vartheta", 0.5 * kPi);
  spec.phi = cfg.angle("two_qubit.phi", 0.0);
  spec.gamma = cfg.angle("two_qubit.gamma", kPi);
  spec.n = cfg.number("two_qubit.n", 0.0);
  spec.tau = cfg.time_ns("two_qubit.tau", 57.0);
  const bool compensate = cfg.flag("two_qubit.compensation", true);
  const std::string initial = cfg.str("two_qubit.initial", "fgg");
  int q1 = 0, q2 = 0;
  if (initial == "fgg") {
    q1 = 2;
  } else if (initial == "fgf") {
    q1 = q2 = 2;
  } else if (initial == "ggf") {
    q2 = 2;
  } else if (initial == "ggg") {
  } else {
    fail(ErrorCode::config,
         "two_qubit.initial must be fgg, fgf, ggf or ggg (got '" + initial +
             "')");
  }

  EvolveOptions opt = read_evolve(cfg, 0.001);
  const StarkCurve curve = stark_compensation_curve(dev, read_stark_grid(cfg), jobs);
  const TwoQubitSchedule sched(spec, dev, curve);
  const TwoQubitRunResult res =
      simulate_two_qubit_gate(sched, dev, q1, q2, compensate, opt);

  Csv csv("t_ns,pop_fgg,pop_geg,pop_ggf,loss,fidelity");
  for (std::size_t k = 0; k < res.times.size(); ++k)
    csv.row({res.times[k], res.pop_fgg[k], res.pop_geg[k], res.pop_ggf[k],
             res.loss[k], res.fidelity[k]});
  write_file(out_dir, "twoqubit.csv", csv.text());
  write_file(out_dir, "waveform.csv", waveform_csv(sched.coupling()));

  Built out;
  out.report["experiment"] = "two-qubit";
  out.report["params"] = two_qubit_params_json(dev, spec);
  out.report["params"]["initial"] = initial;
  out.report["params"]["compensation"] = compensate;
  out.report["gate"] = "transfer";
  out.report["model"] = "two-qubit";
  out.report["state_fidelity"] = res.fidelity_unconditioned;
  out.report["fidelity_conditioned"] = res.fidelity_conditioned;
  out.report["gate_fidelity"] = nullptr;
  out.report["leakage_final"] = res.loss_final;
  out.report["leakage_initial"] = res.loss_initial;
  out.report["residual_phase_rad"] = res.residual_phase;
  out.report["peak_coupling_rad_per_ns"] = sched.peak_coupling();
  out.report["peak_drive_rad_per_ns"] = sched.peak_drive();
  out.report["stark_baseline_rad_per_ns"] = curve.baseline();
  out.report["tau_ns"] = spec.tau;
  out.scalars["state_fidelity"] = res.fidelity_unconditioned;
  out.scalars["fidelity_conditioned"] = res.fidelity_conditioned;
  out.scalars["leakage_final"] = res.loss_final;
  out.scalars["leakage_initial"] = res.loss_initial;
  out.scalars["residual_phase_rad"] = res.residual_phase;
  out.scalars["peak_coupling_rad_per_ns"] = sched.peak_coupling();
  out.scalars["peak_drive_rad_per_ns"] = sched.peak_drive();
  out.scalars["tau_ns"] = spec.tau;
  std::ostringstream s;
  s << "two-qubit " << initial << " (compensation "
    << (compensate ? "on" : "off")
    << "): state_fidelity = " << fmt(res.fidelity_unconditioned)
    << ", leakage_final = " << fmt(res.loss_final);
  out.summary = s.str();
  return out;
}

Built run_stark_curve(const Config& cfg, const std::string& out_dir, int jobs) {
  const TwoQubitDeviceParams dev = read_two_qubit_device(cfg);
  const std::vector<double> grid = read_stark_grid(cfg);
  const StarkCurve curve = stark_compensation_curve(dev, grid, jobs);

  Csv csv("omega_drive_rad_per_ns,delta_s_rad_per_ns,g_eff_rad_per_ns");
  for (int i = 0; i < curve.size(); ++i)
    csv.row({curve.omega()[i], curve.delta_s()[i], curve.g_eff()[i]});
  write_file(out_dir, "stark.csv", csv.text());

  const double g10 = 0.01 * kTwoPi;  // per-qubit 2 pi x 10 MHz
  const double drive10 =
      curve.max_coupling() >= g10 ? curve.omega_for_coupling(g10)
                                  : std::numeric_limits<double>::quiet_NaN();

  Built out;
  out.report["experiment"] = "stark-curve";
  json p;
  p["points"] = curve.size();
  p["max_drive_rad_per_ns"] = grid.back();
  p["alpha_rad_per_ns"] = dev.qubit1.alpha;
  p["alpha_aux_rad_per_ns"] = dev.auxiliary.alpha;
  p["g_rad_per_ns"] = dev.g1;
  p["delta_rad_per_ns"] = dev.delta;
  out.report["params"] = p;
  out.report["baseline_rad_per_ns"] = curve.baseline();
  out.report["max_coupling_rad_per_ns"] = curve.max_coupling();
  out.report["drive_for_10mhz_rad_per_ns"] = drive10;
  out.scalars["baseline_rad_per_ns"] = curve.baseline();
  out.scalars["max_coupling_rad_per_ns"] = curve.max_coupling();
  out.scalars["drive_for_10mhz_rad_per_ns"] = drive10;
  std::ostringstream s;
  s << "stark-curve (" << curve.size()
    << " points): baseline = " << fmt(curve.baseline())
    << " rad/ns, max per-qubit coupling = " << fmt(curve.max_coupling())
    << " rad/ns";
  out.summary = s.str();
  return out;
}

Built run_qs_table(const Config& cfg, const std::string& out_dir, int /*jobs*/) {
  const std::vector<double> ns =
      cfg.number_list("sweep.n_values", {0.0, 0.5, 1.0});
  const HolonomySpec gate{kPi / 2.0, 0.0, kPi};

  Csv csv("n,q_s,q_s_closed_form");
  double max_gap = 0.0, integer_max = 0.0;
  for (double n : ns) {
    const double qs = error_sensitivity_qs(Path(family_path(100.0, gate, n)));
    const double closed = qs_closed_form(n);
    csv.row({n, qs, closed});
    max_gap = std::max(max_gap, std::abs(qs - closed));
    if (n >= 0.5 && std::abs(n - std::round(n)) < 1e-12)
      integer_max = std::max(integer_max, qs);
  }
  write_file(out_dir, "qs.csv", csv.text());

  Built out;
  out.report["experiment"] = "qs-table";
  out.report["params"]["n_values"] = ns;
  out.report["max_closed_form_gap"] = max_gap;
  out.report["integer_n_max_qs"] = integer_max;
  out.scalars["max_closed_form_gap"] = max_gap;
  out.scalars["integer_n_max_qs"] = integer_max;
  std::ostringstream s;
  s << "qs-table over " << ns.size()
    << " n values: max gap to closed form = " << fmt(max_gap);
  out.summary = s.str();
  return out;
}

}  // namespace

ExperimentReport run_experiment(const Config& cfg, const std::string& out_dir,
                                int jobs) {
  if (const char* env = std::getenv("HOLONOMY_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    require(end != env && *end == '\0', ErrorCode::config,
            "HOLONOMY_JOBS must be an integer");
    jobs = static_cast<int>(v);
  }

  require(cfg.has("experiment"), ErrorCode::config,
          "missing required key 'experiment' (one of single-gate, "
          "gate-fidelity, robustness-scan, two-qubit, stark-curve, qs-table); "
          "see the presets for complete examples");
  const std::string name = cfg.require_str("experiment");

  std::filesystem::create_directories(out_dir);
  write_file(out_dir, "config.echo", cfg.render());

  Built built;
  if (name == "single-gate") {
    built = run_single_gate(cfg, out_dir, jobs);
  } else if (name == "gate-fidelity") {
    built = run_gate_fidelity(cfg, out_dir, jobs);
  } else if (name == "robustness-scan") {
    built = run_scan(cfg, out_dir, jobs);
  } else if (name == "two-qubit") {
    built = run_two_qubit(cfg, out_dir, jobs);
  } else if (name == "stark-curve") {
    built = run_stark_curve(cfg, out_dir, jobs);
  } else if (name == "qs-table") {
    built = run_qs_table(cfg, out_dir, jobs);
  } else {
    fail(ErrorCode::config, "unknown experiment '" + name +
                                "' (one of single-gate, gate-fidelity, "
                                "robustness-scan, two-qubit, stark-curve, "
                                "qs-table)");
  }

  ExperimentReport report;
  report.json_text = built.report.dump(2) + "\n";
  report.summary = built.summary;
  report.scalars = built.scalars;
  write_file(out_dir, "report.json", report.json_text);

  // Threshold checks come last so a miss still leaves full artifacts.
  if (cfg.flag("assert.enabled", false)) {
    std::string misses;
    for (const std::string& key : cfg.section_keys("assert")) {
      if (key == "enabled") continue;
      const Tolerance t =
          parse_tolerance(cfg.require_str("assert." + key), "assert." + key);
      const auto it = report.scalars.find(key);
      require(it != report.scalars.end(), ErrorCode::config,
              "assert key '" + key + "' is not a scalar of this experiment");
      if (!(std::abs(it->second - t.value) <= t.tol)) {
        if (!misses.empty()) misses += "; ";
        misses += key + " = " + fmt(it->second) + ", expected " +
                  fmt(t.value) + " +- " + fmt(t.tol);
      }
    }
    require(misses.empty(), ErrorCode::threshold,
            "threshold miss: " + misses);
  }
  return report;
}

}  // namespace holo
