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

// Drive-frequency compensation of the ac Stark shifts. At each drive
// amplitude the full Hamiltonian (both qubits driven symmetrically) is
// diagonalized exactly; the effective three-level block on {fgg, geg, ggf}
// is recovered in the bare basis by symmetric (Loewdin) orthogonalization
// of the matched eigenvectors, and the common frame shift is root-found so
// the bright state and |geg> stay degenerate. The curve stores the shift
// relative to its zero-drive baseline (the static dressing already detunes
// the pair) together with the per-qubit bright coupling, defined as half
// the dressed-level splitting at resonance divided by sqrt 2 for the
// symmetric calibration drive.

#pragma once

#include <vector>

#include "core/numeric.hpp"
#include "model/twoqubit.hpp"

namespace holo {

// Effective-block observables in the bare {fgg, geg, ggf} basis.
struct DressedTriple {
  double eta_b = 0.0;     // <B|H_eff|B>, B = (fgg + ggf)/sqrt2
  double eta_e = 0.0;     // <geg|H_eff|geg>
  double coupling = 0.0;  // |<B|H_eff|geg>|, the total bright coupling
};

// Exact diagonalization at drive amplitudes (omega1, omega2), phases zero,
// with the common frame displaced by `shift`.
DressedTriple dressed_levels(const TwoQubitDeviceParams& dev, double omega1,
                             double omega2, double shift);

// eta_b - eta_e at a symmetric drive: the curve's root function.
double stark_mismatch(const TwoQubitDeviceParams& dev, double omega,
                      double shift);

class StarkCurve {
 public:
  StarkCurve() = default;
  // Columns must be equally sized, omega strictly increasing from 0, and
  // g_eff strictly increasing (needed for the amplitude inversion).
  StarkCurve(std::vector<double> omega, std::vector<double> delta_s,
             std::vector<double> g_eff, double baseline);

  const std::vector<double>& omega() const { return omega_; }
  const std::vector<double>& delta_s() const { return delta_s_; }
  const std::vector<double>& g_eff() const { return g_eff_; }
  double baseline() const { return baseline_; }
  int size() const { return static_cast<int>(omega_.size()); }

  // Frequency shift at a drive amplitude within the tabulated range.
  double delta_s_at(double omega) const;
  // Drive amplitude producing a per-qubit coupling g; errors with
  // amplitude_exceeded above the tabulated maximum.
  double omega_for_coupling(double g) const;
  double max_coupling() const;

 private:
  std::vector<double> omega_, delta_s_, g_eff_;
  double baseline_ = 0.0;
  Pchip shift_of_omega_, omega_of_g_;
};

// Calibrates the curve on the given amplitude grid (must start at 0). The
// root at zero drive is the baseline; later columns are relative to it.
// Grid points are independent and distributed over `jobs` workers.
StarkCurve stark_compensation_curve(const TwoQubitDeviceParams& dev,
                                    const std::vector<double>& grid,
                                    int jobs = 0);

}  // namespace holo
