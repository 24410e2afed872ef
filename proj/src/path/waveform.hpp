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

// Inverse engineering: from a prescribed path (chi(t), phi(t)) to the drive
// waveform (Omega(t), phi_1(t)) that makes the bright-state Hamiltonian
//   H = Omega e^{i phi_1} |b><e| + h.c.
// follow it exactly. The auxiliary angle psi = phi_1 + phi satisfies
//   tan(psi) = chi_dot cos(chi) / (phi_dot sin(chi)),
//   Omega = -chi_dot / (2 sin(psi)),
// determined only up to a branch of pi; the branch is fixed by continuity
// along each segment plus a constant fold chosen so Omega >= 0.

#pragma once

#include <array>
#include <vector>

#include "path/path.hpp"

namespace holo {

struct WaveformSample {
  double t_ns = 0.0;
  double omega = 0.0;  // rad/ns
  double phi1 = 0.0;   // rad
  double phi2 = 0.0;   // rad
};

class ControlWaveform {
 public:
  const Path& path() const { return path_; }
  double tau() const { return path_.tau(); }

  // Envelope and tone phases of the two-tone drive. phi2 follows from the
  // azimuth convention phi = phi1 + phi2 + pi of the bright state.
  WaveformSample at(double t) const;
  double omega(double t) const { return at(t).omega; }
  double phi1(double t) const { return at(t).phi1; }
  double phi2(double t) const { return at(t).phi2; }

  // Refined maximum of Omega over the loop (includes the amplitude scale).
  double peak_omega() const { return scale_ * peak_; }
  double amplitude_scale() const { return scale_; }

  // Copy with the envelope multiplied by `factor`; models a systematic
  // pulse-amplitude scale error Omega -> (1 + eps) Omega via factor 1+eps.
  ControlWaveform scaled(double factor) const;

  // Smallest loop duration at which the peak stays within omega_max.
  double min_tau(double omega_max) const;

  // Synthesis grid, 2 * grid + 1 rows covering [0, tau].
  std::vector<WaveformSample> samples() const;

 private:
  friend ControlWaveform inverse_engineer(const Path&, double, int);

  struct Segment {
    double t0 = 0.0, dt = 0.0;
    std::vector<double> psi;   // unwrapped, folded so Omega >= 0
    double phi1_shift = 0.0;   // 2 pi k bringing phi1 at segment start into (-pi, pi]
    double ab_scale = 0.0;     // max hypot(chi_dot cos chi, phi_dot sin chi)
  };

  explicit ControlWaveform(const Path& path) : path_(path) {}
  double psi_at(double t, const Segment& seg) const;

  Path path_;
  double scale_ = 1.0;
  double peak_ = 0.0;
  std::array<Segment, 2> seg_;
};

// Synthesizes the waveform on `grid_per_segment` + 1 nodes per segment.
// If omega_max > 0 and the peak exceeds it, throws amplitude_exceeded with
// the minimal feasible duration in the message.
ControlWaveform inverse_engineer(const Path& path, double omega_max = 0.0,
                                 int grid_per_segment = 2000);

// Duration at which the synthesized peak equals omega_max exactly (the
// waveform peak scales as 1/tau at fixed shape).
double tau_for_peak(PathSpec spec, double omega_max);

// Largest violation of the two inverse-engineering relations over the
// synthesis grid: {max |chi_dot + 2 Omega sin(phi1 + phi)|,
//                  max |phi_dot + 2 Omega cot(chi) cos(phi1 + phi)|},
// skipping nodes where cot(chi) overflows.
std::array<double, 2> inversion_residual(const ControlWaveform& wf);

}  // namespace holo
