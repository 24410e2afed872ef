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

#include "metrics/metrics.hpp"

#include <cmath>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace holo {

double state_fidelity(const DensityMatrix& rho, const StateVector& target) {
  require(rho.dim() == target.dim(), ErrorCode::dimension_mismatch,
          "state and density matrix dimensions differ");
  require(std::abs(target.norm() - 1.0) < 1e-9, ErrorCode::invalid_argument,
          "target state must be normalized");
  const cd f = (target.amp.adjoint() * rho.rho * target.amp)(0, 0);
  require(std::abs(f.imag()) < 1e-10, ErrorCode::nonphysical_state,
          "fidelity acquired an imaginary part");
  return f.real();
}

double state_fidelity(const StateVector& psi, const StateVector& target) {
  require(psi.dim() == target.dim(), ErrorCode::dimension_mismatch,
          "state dimensions differ");
  return std::norm(target.amp.dot(psi.amp));
}

namespace {
double projector_weight_missing(const Mat& rho,
                                const std::vector<int>& indices, int dim) {
  double kept = 0.0;
  for (int i : indices) {
    require(i >= 0 && i < dim, ErrorCode::invalid_argument,
            "computational index out of range");
    kept += rho(i, i).real();
  }
  return 1.0 - kept;
}
}  // namespace

double leakage(const DensityMatrix& rho,
               const std::vector<int>& computational_indices) {
  return projector_weight_missing(rho.rho, computational_indices, rho.dim());
}

double leakage(const StateVector& psi,
               const std::vector<int>& computational_indices) {
  double kept = 0.0;
  for (int i : computational_indices) {
    require(i >= 0 && i < psi.dim(), ErrorCode::invalid_argument,
            "computational index out of range");
    kept += std::norm(psi.amp(i));
  }
  return 1.0 - kept;
}

std::vector<GateFidelitySample> gate_fidelity_grid(const HolonomySpec& gate,
                                                   int samples) {
  require(samples >= 2, ErrorCode::invalid_argument,
          "gate fidelity needs at least two input states");
  const Mat u = holonomy_target(gate);
  std::vector<GateFidelitySample> grid(samples);
  for (int i = 0; i < samples; ++i) {
    const double tp = kTwoPi * i / (samples - 1);
    CVec psi0(2);
    psi0 << std::cos(tp), std::sin(tp);
    grid[i] = {tp, psi0, u * psi0};
  }
  return grid;
}

double gate_fidelity_average(
    const std::function<double(const GateFidelitySample&)>& run,
    const HolonomySpec& gate, int samples, int jobs,
    std::vector<double>* per_state) {
  const auto grid = gate_fidelity_grid(gate, samples);
  std::vector<double> f(grid.size());
  parallel_for(grid.size(), jobs,
               [&](std::size_t i) { f[i] = run(grid[i]); });
  double sum = 0.0;
  for (double v : f) sum += v;  // fixed index order for determinism
  if (per_state) *per_state = std::move(f);
  return sum / static_cast<double>(grid.size());
}

}  // namespace holo
