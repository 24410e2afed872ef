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

// Cyclic evolution paths on the bright/excited Bloch sphere.
//
// A path prescribes the polar angle chi(t) and azimuth phi(t) of the state
//   |Psi(t)> = e^{-i f/2} (cos(chi/2) e^{-i phi/2} |b> + sin(chi/2) e^{+i phi/2} |e>)
// over one loop of duration tau, split into two segments [0, tau/2] and
// [tau/2, tau]. Both built-in families share chi(t) = pi sin^2(pi t / tau),
// which starts at |b>, passes the pole |e> at tau/2, and returns to |b>.
// They differ in the azimuth:
//
//  - sine_modulated: phi = -(pi/5) sin(2 pi t/tau) - pi/2 on the first
//    segment and +(pi/5) sin(2 pi t/tau) - gamma - pi/2 on the second.
//  - tuned(n):       phi is the primitive of dphi/dchi = -4n sin^2(chi) cos(chi),
//    anchored to phi(0) = 0 and phi(tau/2) = -gamma. Its gauge phase obeys
//    f(chi) = n (2 chi - sin 2 chi), which zeroes the leading sensitivity to
//    a pulse-amplitude scale error when n is a positive integer. n = 0 is
//    the constant-azimuth limit.
//
// The second segment's azimuth anchor (-gamma) is what imprints the
// holonomy angle; the segments' gauge contributions cancel by mirror
// symmetry, so the loop is purely geometric.

#pragma once

#include <functional>

#include "core/linalg.hpp"

namespace holo {

// Target holonomy U = |d><d| + e^{i gamma} |b><b| on the {g, f} qubit with
//   |b> = sin(theta/2)|g> - cos(theta/2) e^{-i phi}|f>.
struct HolonomySpec {
  double theta = 0.0;
  double phi = 0.0;
  double gamma = 0.0;
};

enum class PhaseFamily { sine_modulated, tuned };

struct PathSpec {
  double tau = 0.0;  // ns
  HolonomySpec holonomy;
  PhaseFamily family = PhaseFamily::sine_modulated;
  double n = 0.0;  // tuned-family index, >= 0
};

// Evaluator for a PathSpec. Cheap to copy; all evaluation is analytic
// except the sine_modulated gauge phase, which uses a shared precomputed
// cumulative table (tau-independent).
class Path {
 public:
  explicit Path(const PathSpec& spec);

  const PathSpec& spec() const { return spec_; }
  double tau() const { return spec_.tau; }
  int segment_of(double t) const { return t < 0.5 * spec_.tau ? 0 : 1; }

  double chi(double t) const;
  double chi_dot(double t) const;
  double phi(double t) const;
  double phi_dot(double t) const;
  // Gauge phase with f(0) = 0, continuous across the loop.
  double f(double t) const;
  double f_dot(double t) const;

  // d(azimuth)/d(chi) as a function of chi, identical on both segments.
  double dphi_dchi(double chi) const;
  // Integrand of the dynamical phase in the chi variable, with the
  // cos(chi) singularity cancelled analytically.
  double dynamical_integrand_chi(double chi) const;

 private:
  PathSpec spec_;
};

// Standard path constructor: n = 0 selects the sine-modulated azimuth,
// n > 0 the tuned family at index n. The holonomy angle gamma is taken
// from `h`.
PathSpec standard_path(double tau, const HolonomySpec& h, double n = 0.0);

// The tuned family at any n >= 0 (n = 0 is the constant-azimuth limit).
PathSpec family_path(double tau, const HolonomySpec& h, double n);

// Validates the loop invariants: two segments covering [0, tau], chi = 0 at
// the loop ends and a pole at the midpoint, chi within [0, pi].
void validate_path(const Path& path);

// Bright/dark pair embedded in `levels` >= 3 ladder levels (g, f carry the
// qubit, e is the intermediate).
std::pair<StateVector, StateVector> bright_dark_basis(const HolonomySpec& h,
                                                      int levels = 3);

// 2x2 holonomy matrix on {g, f}: e^{i gamma/2} e^{-i (gamma/2) n.sigma} with
// n = (sin(theta) cos(phi), -sin(theta) sin(phi), cos(theta)).
Mat holonomy_target(const HolonomySpec& h);

// Dynamical phase accumulated over the full loop (zero for both families).
double dynamical_phase(const Path& path);

// Sensitivity of the half-loop excitation transfer to a pulse-amplitude
// scale error: q_s = |int_0^{tau/2} e^{-i f} chi_dot sin^2(chi) dt|^2.
double error_sensitivity_qs(const Path& path);

// Closed form of q_s for the tuned family: sin^2(n pi) / (2n)^2, with the
// n -> 0 limit pi^2/4.
double qs_closed_form(double n);

}  // namespace holo
