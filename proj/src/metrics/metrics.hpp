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

// Fidelity and leakage observables.

#pragma once

#include <functional>
#include <vector>

#include "core/linalg.hpp"
#include "path/path.hpp"

namespace holo {

// <target| rho |target>; the imaginary part must vanish to 1e-10.
double state_fidelity(const DensityMatrix& rho, const StateVector& target);
// |<target|psi>|^2.
double state_fidelity(const StateVector& psi, const StateVector& target);

// 1 - Tr(P rho) with P the projector onto the listed basis indices.
double leakage(const DensityMatrix& rho,
               const std::vector<int>& computational_indices);
double leakage(const StateVector& psi,
               const std::vector<int>& computational_indices);

// One input state of the gate-fidelity average: the qubit state
// cos(theta')|g> + sin(theta')|f> and its ideal image under the gate.
// Both vectors are 2-dimensional in the (g, f) qubit basis.
struct GateFidelitySample {
  double theta_prime = 0.0;
  CVec psi0;
  CVec target;
};

// theta' uniform on [0, 2 pi] with both endpoints included.
std::vector<GateFidelitySample> gate_fidelity_grid(const HolonomySpec& gate,
                                                   int samples);

// Average of per-state fidelities over the grid. `run` maps one sample to
// its simulated fidelity; samples are distributed over `jobs` workers and
// reduced in fixed index order for determinism.
double gate_fidelity_average(
    const std::function<double(const GateFidelitySample&)>& run,
    const HolonomySpec& gate, int samples = 1001, int jobs = 0,
    std::vector<double>* per_state = nullptr);

}  // namespace holo
