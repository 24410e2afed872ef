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

// Degenerate second-order perturbation theory: for H = H0 + H' with a
// degenerate target subspace S of the diagonal H0, the effective
// Hamiltonian on S is
//   H_eff = eps P + P H' P + sum_{l not in S} P H' |l><l| H' P / (eps - E_l)
// with eps the shared subspace energy and P the projector onto S.

#pragma once

#include <vector>

#include "core/linalg.hpp"

namespace holo {

struct PerturbationResult {
  // |S| x |S| matrix in the order of the requested subspace indices,
  // including the common diagonal eps.
  Mat effective;
  double subspace_energy = 0.0;
  // Frobenius norm of P H' P. A nonzero first order is legal but usually
  // signals a coupling the caller meant to eliminate; it is reported, not
  // raised.
  double first_order_norm = 0.0;
};

// Preconditions: h0 diagonal (off-diagonal magnitudes < 1e-12), hp
// Hermitian to 1e-12, the subspace energies degenerate within 1e-10, and
// every environment level separated from eps by more than 1e-8.
PerturbationResult second_order_perturbation(const Operator& h0,
                                             const Operator& hp,
                                             const std::vector<int>& subspace);

// Drive-induced level shifts and the bright two-photon coupling of one
// qubit + auxiliary pair at exchange coupling g and drive amplitude omega,
// with qubit anharmonicity alpha and qubit-auxiliary detuning split delta:
//   eta_ge = omega^2 / (4 (delta - alpha)) - g^2 / delta
//   eta_fg = 3 omega^2 / (4 (delta + alpha)) + 2 g^2 / (delta - alpha)
//            - omega^2 / (2 delta)
//   g_pair = g omega alpha / (sqrt2 delta (delta - alpha))
struct EffectiveCouplings {
  double eta_ge = 0.0;
  double eta_fg = 0.0;
  double g_pair = 0.0;
};

// Errors with invalid_argument when delta is 0 or +-alpha (the expressions
// are singular there).
EffectiveCouplings effective_couplings_closed_form(double g, double omega,
                                                   double delta, double alpha);

}  // namespace holo
