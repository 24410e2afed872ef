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

#include "sweep/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "metrics/metrics.hpp"

namespace holo {

namespace {

void validate_spec(const SweepSpec& spec) {
  require(spec.eps_steps >= 2, ErrorCode::invalid_argument,
          "epsilon grid needs at least two points");
  require(spec.eps_min < spec.eps_max, ErrorCode::invalid_argument,
          "epsilon range must be non-degenerate");
  require(spec.eps_min >= -0.5 && spec.eps_max <= 0.5,
          ErrorCode::invalid_argument,
          "epsilon must stay within [-0.5, 0.5]");
  require(!spec.n_values.empty(), ErrorCode::invalid_argument,
          "no n values to scan");
  for (double n : spec.n_values)
    require(n >= 0.0, ErrorCode::invalid_argument,
            "family index n must be non-negative");
  require(spec.fidelity_samples >= 2, ErrorCode::invalid_argument,
          "need at least two fidelity samples");
  require(spec.omega_max > 0.0, ErrorCode::invalid_argument,
          "omega_max must be positive");
}

// Lifts a 2-dimensional (g, f) qubit vector into the model's ladder.
CVec embed_qubit(const CVec& q, int dim) {
  CVec full = CVec::Zero(dim);
  full(kG) = q(0);
  full(kF) = q(1);
  return full;
}

}  // namespace

const SweepCell& SweepResult::cell(int n_index, int eps_index) const {
  const int ne = static_cast<int>(epsilons.size());
  require(n_index >= 0 && n_index < static_cast<int>(n_values.size()) &&
              eps_index >= 0 && eps_index < ne,
          ErrorCode::invalid_argument, "sweep cell index out of range");
  return grid[static_cast<size_t>(n_index) * ne + eps_index];
}

ControlWaveform apply_systematic_error(const ControlWaveform& wf,
                                       double epsilon) {
  require(epsilon > -1.0, ErrorCode::invalid_argument,
          "scale error must keep the envelope positive");
  return wf.scaled(1.0 + epsilon);
}

SweepResult robustness_scan(const SweepSpec& spec) {
  validate_spec(spec);

  SweepResult res;
  res.n_values = spec.n_values;
  std::sort(res.n_values.begin(), res.n_values.end());
  require(std::adjacent_find(res.n_values.begin(), res.n_values.end()) ==
              res.n_values.end(),
          ErrorCode::invalid_argument, "duplicate n values in the scan");

  res.epsilons.resize(spec.eps_steps);
  for (int i = 0; i < spec.eps_steps; ++i)
    res.epsilons[i] = spec.eps_min + (spec.eps_max - spec.eps_min) * i /
                                         double(spec.eps_steps - 1);

  // Per-n synthesis: the duration is renormalized so the nominal peak sits
  // exactly at omega_max, then every epsilon reuses the same waveform.
  struct Row {
    double tau = 0.0;
    bool ok = false;
    std::string error;
    std::vector<ControlWaveform> wf;  // one slot; vector to allow empty
  };
  const int nn = static_cast<int>(res.n_values.size());
  const int ne = spec.eps_steps;
  std::vector<Row> rows(nn);
  for (int i = 0; i < nn; ++i) {
    try {
      PathSpec ps = family_path(1.0, spec.gate, res.n_values[i]);
      ps.tau = tau_for_peak(ps, spec.omega_max);
      rows[i].tau = ps.tau;
      rows[i].wf.push_back(inverse_engineer(Path(ps)));
      rows[i].ok = true;
    } catch (const Error& e) {
      rows[i].error = e.what();
    }
  }

  res.grid.assign(static_cast<size_t>(nn) * ne, SweepCell{});
  parallel_for(nn * ne, spec.jobs, [&](int idx) {
    const int i = idx / ne, j = idx % ne;
    SweepCell& cell = res.grid[idx];
    cell.n = res.n_values[i];
    cell.epsilon = res.epsilons[j];
    cell.tau_ns = rows[i].tau;
    if (!rows[i].ok) {
      cell.error = rows[i].error;
      return;
    }
    try {
      const ControlWaveform wf =
          apply_systematic_error(rows[i].wf.front(), cell.epsilon);
      const HamiltonianFn h = spec.model == ModelKind::ideal3
                                  ? ideal3_hamiltonian(wf)
                                  : leaky4_hamiltonian(wf, spec.transmon);
      const int d = h.dim();
      std::function<double(const GateFidelitySample&)> run;
      QubitChannel channel;
      Mat u;
      if (spec.decoherence) {
        channel = evolve_qubit_channel(h, transmon_noise(spec.transmon, d),
                                       wf.tau(), spec.evolve);
        run = [&](const GateFidelitySample& s) {
          const DensityMatrix rho = channel.apply(s.psi0(0), s.psi0(1));
          const CVec t = embed_qubit(s.target, d);
          return (t.adjoint() * rho.rho * t)(0).real();
        };
      } else {
        u = propagator(h, wf.tau(), spec.evolve);
        run = [&](const GateFidelitySample& s) {
          const CVec out = u * embed_qubit(s.psi0, d);
          return std::norm(embed_qubit(s.target, d).dot(out));
        };
      }
      cell.gate_fidelity = gate_fidelity_average(run, spec.gate,
                                                 spec.fidelity_samples, 1);
      cell.ok = true;
    } catch (const Error& e) {
      cell.error = e.what();
    }
  });

  res.criterion_by_n.assign(nn, std::numeric_limits<double>::quiet_NaN());
  for (int i = 0; i < nn; ++i) {
    double acc = spec.criterion == SweepCriterion::mean
                     ? 0.0
                     : std::numeric_limits<double>::infinity();
    bool ok = true;
    for (int j = 0; j < ne; ++j) {
      const SweepCell& cell = res.grid[static_cast<size_t>(i) * ne + j];
      if (!cell.ok) {
        ok = false;
        break;
      }
      if (spec.criterion == SweepCriterion::mean)
        acc += cell.gate_fidelity / ne;
      else
        acc = std::min(acc, cell.gate_fidelity);
    }
    if (!ok) continue;
    res.criterion_by_n[i] = acc;
    if (!(res.optimal_value >= acc)) {  // NaN-safe strict improvement
      res.optimal_value = acc;
      res.optimal_n = res.n_values[i];
    }
  }
  require(std::isfinite(res.optimal_n), ErrorCode::search_failed,
          "every scan row failed; no optimum");
  return res;
}

}  // namespace holo
