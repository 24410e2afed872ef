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

#include "model/transmon.hpp"

#include <cmath>

#include "core/error.hpp"

namespace holo {

HamiltonianFn ideal3_hamiltonian(const ControlWaveform& wf) {
  const double theta = wf.path().spec().holonomy.theta;
  const double st = std::sin(0.5 * theta), ct = std::cos(0.5 * theta);
  const double phi = wf.path().spec().holonomy.phi;
  return {{3}, [wf, st, ct, phi](double t, Mat& h) {
            const WaveformSample s = wf.at(t);
            h.setZero(3, 3);
            // Omega e^{i phi1} |b><e| + h.c. with
            // |b> = sin(theta/2)|g> - cos(theta/2) e^{-i phi}|f>.
            const cd drive = s.omega * std::exp(kI * s.phi1);
            h(kG, kE) = drive * st;
            h(kF, kE) = -drive * ct * std::exp(-kI * phi);
            h(kE, kG) = std::conj(h(kG, kE));
            h(kE, kF) = std::conj(h(kF, kE));
          }};
}

HamiltonianFn leaky4_hamiltonian(const ControlWaveform& wf,
                                 const TransmonParams& p) {
  const double theta = wf.path().spec().holonomy.theta;
  const double st = std::sin(0.5 * theta), ct = std::cos(0.5 * theta);
  const double alpha = p.alpha;
  return {{4}, [wf, st, ct, alpha](double t, Mat& h) {
            const WaveformSample s = wf.at(t);
            // Tone amplitudes of the bright-state drive.
            const double om1 = 2.0 * s.omega * st;
            const double om2 = std::sqrt(2.0) * s.omega * ct;
            const cd e1 = std::exp(kI * s.phi1);
            const cd e2 = std::exp(kI * s.phi2);
            const cd rot = std::exp(-kI * alpha * t);
            h.setZero(4, 4);
            h(kH, kH) = -alpha;
            // g-e: tone 1 resonant, tone 2 detuned by -alpha.
            h(kG, kE) = 0.5 * om1 * e1 + 0.5 * om2 * e2 * rot;
            // e-f: tone 2 resonant, tone 1 detuned by -alpha. Ladder matrix
            // element sqrt(2).
            h(kF, kE) = om2 / std::sqrt(2.0) / e2 + om1 / std::sqrt(2.0) / e1 * rot;
            // f-h: tone 2, matrix element sqrt(3); the alpha detuning sits
            // on the |h> diagonal.
            h(kF, kH) = 0.5 * std::sqrt(3.0) * om2 * e2;
            h(kE, kG) = std::conj(h(kG, kE));
            h(kE, kF) = std::conj(h(kF, kE));
            h(kH, kF) = std::conj(h(kF, kH));
          }};
}

std::vector<std::pair<double, Operator>> transmon_noise(
    const TransmonParams& p, int levels) {
  require(levels >= 2, ErrorCode::invalid_argument,
          "noise model needs at least two levels");
  return {{p.gamma1, annihilation_op(levels)}, {p.gamma2, number_op(levels)}};
}

}  // namespace holo
