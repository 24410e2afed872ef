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

// Two transmon qubits exchange-coupled to one auxiliary transmon, four
// levels each, in a frame co-rotating with the qubit drives. The basis is
// |l m s> = |l>_1 |m>_A |s>_2 on dims {4, 4, 4}, and
//   H(t) = sum_k [delta_k N_k - (alpha_k/2)(N_k - 1) N_k]
//        + delta_a N_A - (alpha_A/2)(N_A - 1) N_A
//        - shift(t) (N_1 + N_A + N_2)
//        + sum_k [g_k a b_k^dag + (omega_k(t)/2) e^{i phase_k(t)} b_k + h.c.]
// with a, b_k the subsystem lowering operators. shift(t) moves the common
// rotating-frame frequency, which is how a drive-frequency change enters:
// every level drops by (shift x excitation number).
//
// The nominal detunings satisfy the two-photon resonance delta_a =
// 2 delta_k - alpha_k, which makes E(|f>_k, g_A) = E(g_k, |e>_A) and turns
// the pair (drive photon + exchange) into a resonant Raman transfer.

#pragma once

#include <array>
#include <functional>
#include <vector>

#include "core/linalg.hpp"
#include "model/transmon.hpp"

namespace holo {

struct TwoQubitDeviceParams {
  TransmonParams qubit1;
  TransmonParams qubit2;
  TransmonParams auxiliary;
  double g1 = 0.0;       // exchange coupling qubit1-auxiliary, rad/ns
  double g2 = 0.0;       // exchange coupling qubit2-auxiliary, rad/ns
  double delta = 0.0;    // detuning split: delta_k - delta_a, rad/ns
  double delta_k = 0.0;  // qubit single-excitation detuning, rad/ns
  double delta_a = 0.0;  // auxiliary single-excitation detuning, rad/ns
};

// Symmetric device at the published operating point: both qubits at
// anharmonicity 2 pi x 0.4 GHz, auxiliary at 2 pi x 0.37 GHz, exchange
// couplings 2 pi x 65 MHz, split 2 pi x 1 GHz, decoherence off.
TwoQubitDeviceParams reference_two_qubit_device();

// Checks delta > alpha_k > 0, matching qubit anharmonicities, positive
// couplings, and the resonance identities delta_k = alpha_k - delta and
// delta_a = 2 delta_k - alpha_k.
void validate_two_qubit_device(const TwoQubitDeviceParams& dev);

// Row of |l m s> in the 64-dimensional basis.
int two_qubit_index(int l, int m, int s);

// Lowering / number operator of one subsystem (0: qubit1, 1: auxiliary,
// 2: qubit2) embedded in the full space.
Operator two_qubit_lowering(int subsystem);
Operator two_qubit_number(int subsystem);

// Drive-free part: bare diagonal plus both exchange couplings.
Operator two_qubit_static(const TwoQubitDeviceParams& dev);

// Computational register states of the idle device: eigenvectors of the
// drive-free Hamiltonian matched to the bare labels by maximal overlap,
// then symmetrically orthonormalized against them. The exchange coupling
// dresses every bare product state with percent-level tails, and exactly
// degenerate label pairs (such as |fgg> / |ggf>) surface as +/- mixtures;
// the symmetric orthonormalization resolves both, returning the orthonormal
// in-span basis closest to the bare labels. Columns follow `labels` order.
Mat dressed_register_basis(const TwoQubitDeviceParams& dev,
                           const std::vector<std::array<int, 3>>& labels);

// Time-dependent drive schedule. All callables are required; shift is the
// common frame offset (baseline plus any compensation modulation).
struct TwoQubitDrives {
  std::function<double(double)> omega1;
  std::function<double(double)> phase1;
  std::function<double(double)> omega2;
  std::function<double(double)> phase2;
  std::function<double(double)> shift;
};

HamiltonianFn two_qubit_hamiltonian(const TwoQubitDeviceParams& dev,
                                    const TwoQubitDrives& drives);

// One qubit + auxiliary pair on dims {4, 4} (qubit first), for effective
// model checks: the bare diagonal, the exchange coupling at strength g,
// and a drive on the qubit.
Operator qubit_aux_bare(const TwoQubitDeviceParams& dev, int which);
Operator qubit_aux_exchange(const TwoQubitDeviceParams& dev, int which);
Operator qubit_aux_drive(double omega, double phase);

}  // namespace holo
