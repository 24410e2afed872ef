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

// Driven-transmon Hamiltonians in the doubly rotating frame of the two
// drive tones (tone 1 at the g-e transition, tone 2 at the e-f transition).
//
// ideal3 keeps exactly the resonant couplings, giving the bright-state form
// H = Omega e^{i phi1} |b><e| + h.c. on levels (g, e, f).
//
// leaky4 adds the fourth level h and every coupling of the two tones within
// (g, e, f, h) that is at most one anharmonicity off resonance: each tone
// also drives the other tone's transition with a residual e^{-i alpha t}
// rotation, and tone 2 drives f-h (whose detuning sits on the |h> diagonal).
// The 2 alpha-detuned coupling of tone 1 to f-h is dropped.

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "core/linalg.hpp"
#include "path/waveform.hpp"

namespace holo {

struct TransmonParams {
  double alpha = 2.513274122871834;       // anharmonicity, rad/ns
  double gamma1 = 3.141592653589793e-5;   // relaxation rate, rad/ns
  double gamma2 = 3.141592653589793e-5;   // pure-dephasing rate, rad/ns
};

// Time-dependent Hamiltonian writing into a caller-owned matrix.
struct HamiltonianFn {
  std::vector<int> dims;
  std::function<void(double, Mat&)> eval;
  int dim() const { return total_dim(dims); }
};

// Three-level resonant model on (g, e, f).
HamiltonianFn ideal3_hamiltonian(const ControlWaveform& wf);

// Four-level model on (g, e, f, h) with cross-tone and f-h leakage paths.
HamiltonianFn leaky4_hamiltonian(const ControlWaveform& wf,
                                 const TransmonParams& p);

// Collapse channels {rate, operator}: relaxation via the ladder lowering
// operator at gamma1 and pure dephasing via the number operator at gamma2.
std::vector<std::pair<double, Operator>> transmon_noise(
    const TransmonParams& p, int levels);

}  // namespace holo
