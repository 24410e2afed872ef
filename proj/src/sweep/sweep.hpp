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

// Robustness scan over the tuned-family index n and a systematic
// pulse-amplitude scale error epsilon. Each n gets its own loop duration,
// renormalized so the synthesized peak sits exactly at omega_max; each
// (n, epsilon) cell then reports the gate fidelity averaged over the
// standard input-state grid.

#pragma once

#include <limits>
#include <string>
#include <vector>

#include "dynamics/evolve.hpp"
#include "model/transmon.hpp"
#include "path/path.hpp"
#include "path/waveform.hpp"

namespace holo {

enum class ModelKind { ideal3, leaky4 };
enum class SweepCriterion { mean, worst };

struct SweepSpec {
  HolonomySpec gate{kPi / 2, 0.0, kPi};  // NOT by default
  double eps_min = -0.1;
  double eps_max = 0.1;
  int eps_steps = 21;
  std::vector<double> n_values;
  bool decoherence = true;
  TransmonParams transmon;
  ModelKind model = ModelKind::leaky4;
  double omega_max = 0.100530964914873;  // 2 pi x 16 MHz, rad/ns
  int fidelity_samples = 101;
  SweepCriterion criterion = SweepCriterion::mean;
  int jobs = 0;
  EvolveOptions evolve;
};

struct SweepCell {
  double n = 0.0;
  double epsilon = 0.0;
  double gate_fidelity = std::numeric_limits<double>::quiet_NaN();
  double tau_ns = 0.0;
  bool ok = false;
  std::string error;  // empty when ok
};

struct SweepResult {
  // n-major, epsilon-minor, both ascending.
  std::vector<SweepCell> grid;
  std::vector<double> n_values;
  std::vector<double> epsilons;
  // Criterion value per n (NaN when any cell of that row failed).
  std::vector<double> criterion_by_n;
  double optimal_n = std::numeric_limits<double>::quiet_NaN();
  double optimal_value = std::numeric_limits<double>::quiet_NaN();

  const SweepCell& cell(int n_index, int eps_index) const;
};

// Amplitude miscalibration: the envelope scaled by (1 + epsilon), phases
// untouched.
ControlWaveform apply_systematic_error(const ControlWaveform& wf,
                                       double epsilon);

// Runs the full (n, epsilon) grid. A failing cell is marked (NaN fidelity,
// error message kept) and the scan continues; its n is excluded from the
// optimum. Cells are distributed over workers and written by index, so the
// result is independent of the worker count.
SweepResult robustness_scan(const SweepSpec& spec);

}  // namespace holo
