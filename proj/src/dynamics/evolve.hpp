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

// Fixed-step classical RK4 time evolution (hbar = 1 throughout):
// Schrödinger propagation of state vectors, full propagator assembly by
// column evolution, and Lindblad master-equation integration
//   rho_dot = i [rho, H] + (1/2) sum_j Gamma_j (2 A rho A+ - A+A rho - rho A+A).
// Norm / trace drift is monitored, never corrected; Hermiticity of rho is
// re-symmetrized each step; positivity is monitored, not projected.

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "core/linalg.hpp"
#include "model/transmon.hpp"

namespace holo {

struct EvolveOptions {
  double dt = 0.005;      // ns; the actual step divides the span evenly
  int max_samples = 2001; // trajectory decimation bound
};

struct SchrodingerResult {
  StateVector final_state;
  std::vector<double> times;   // decimated, first = 0, last = tau
  std::vector<CVec> states;
  long step_count = 0;
  double max_norm_drift = 0.0;
};

struct LindbladResult {
  DensityMatrix final_state;
  std::vector<double> times;
  std::vector<Mat> states;
  long step_count = 0;
  double max_trace_drift = 0.0;
  double min_population = 0.0;  // most negative diagonal seen at samples
};

using NoiseModel = std::vector<std::pair<double, Operator>>;

// Integrates i d|psi>/dt = H(t)|psi> over [0, tau]. Throws an accuracy
// error if the norm drifts by more than 1e-6 (suggesting a smaller dt).
SchrodingerResult evolve_schrodinger(const HamiltonianFn& h,
                                     const StateVector& psi0, double tau,
                                     const EvolveOptions& opt = {});

// Evolves every basis column; the result is unitary within 1e-7 or an
// accuracy error is thrown.
Mat propagator(const HamiltonianFn& h, double tau,
               const EvolveOptions& opt = {});

// Lindblad integration over [0, tau]. Trace drift beyond 1e-6 or a sampled
// eigenvalue below -1e-6 raises an error (trace drift is additionally
// reported in the result; the target for healthy runs is < 1e-7).
LindbladResult evolve_lindblad(const HamiltonianFn& h, const NoiseModel& noise,
                               const DensityMatrix& rho0, double tau,
                               const EvolveOptions& opt = {});

// Endpoint action of the master equation on initial states supported on the
// (g, f) qubit levels. The images of the operator basis |g><g|, |f><f| and
// |g><f| are obtained from four evolutions; linearity of the equation then
// gives the final density matrix of any initial qubit state without evolving
// it separately.
struct QubitChannel {
  std::vector<int> dims;
  Mat gg, ff, gf;  // basis images; gf is not Hermitian

  // Final density matrix for the initial pure state a|g> + b|f>.
  DensityMatrix apply(cd a, cd b) const;
};

QubitChannel evolve_qubit_channel(const HamiltonianFn& h,
                                  const NoiseModel& noise, double tau,
                                  const EvolveOptions& opt = {});

// Same reconstruction at every sampled time, from the same four
// evolutions. Memory scales with samples x dim^2; intended for the small
// single-qubit models.
struct QubitChannelSeries {
  std::vector<double> times;  // ns
  std::vector<QubitChannel> channels;
};

QubitChannelSeries evolve_qubit_channel_series(const HamiltonianFn& h,
                                               const NoiseModel& noise,
                                               double tau,
                                               const EvolveOptions& opt = {});

}  // namespace holo
