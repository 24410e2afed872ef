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

#include "path/path.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace holo {

namespace {

// (pi - 2 chi) / cos(chi); removable at chi = pi/2 where the value is 2.
double h_of_chi(double chi) {
  const double x = chi - 0.5 * kPi;
  if (std::abs(x) < 1e-3) {
    // 2 x / sin(x) expanded about x = 0.
    const double x2 = x * x;
    return 2.0 * (1.0 + x2 / 6.0 + 7.0 * x2 * x2 / 360.0);
  }
  return (kPi - 2.0 * chi) / std::cos(chi);
}

double chi_of_s(double s) {
  const double c = std::sin(kPi * s);
  return kPi * c * c;
}

// Cumulative gauge-phase table for the sine-modulated family, in the scaled
// time s = t / tau on [0, 1/2]:  F(s) = int_0^s h(chi(u)) du, so that
// f(t) = (2 pi / 5) F(min(s, 1 - s)). The table is tau-independent.
struct GaugeTable {
  static constexpr int kCells = 2048;
  std::vector<double> value;  // F at nodes
  std::vector<double> slope;  // h(chi(s)) at nodes
  double ds = 0.0;

  GaugeTable() {
    value = cumulative_integral([](double s) { return h_of_chi(chi_of_s(s)); },
                                0.0, 0.5, kCells);
    ds = 0.5 / kCells;
    slope.resize(kCells + 1);
    for (int i = 0; i <= kCells; ++i) slope[i] = h_of_chi(chi_of_s(i * ds));
  }

  // Cubic Hermite on the uniform grid; exact nodal slopes keep the
  // interpolation error far below the integration tolerance.
  double eval(double s) const {
    s = std::clamp(s, 0.0, 0.5);
    int i = std::min(static_cast<int>(s / ds), kCells - 1);
    const double u = (s - i * ds) / ds;
    const double y0 = value[i], y1 = value[i + 1];
    const double m0 = slope[i] * ds, m1 = slope[i + 1] * ds;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * m0 +
           (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * m1;
  }
};

const GaugeTable& gauge_table() {
  static const GaugeTable table;
  return table;
}

}  // namespace

Path::Path(const PathSpec& spec) : spec_(spec) {
  require(spec.tau > 0.0 && std::isfinite(spec.tau), ErrorCode::invalid_argument,
          "path duration must be positive and finite");
  require(spec.n >= 0.0 && std::isfinite(spec.n), ErrorCode::invalid_argument,
          "path family index must be finite and non-negative");
  require(std::isfinite(spec.holonomy.theta) && std::isfinite(spec.holonomy.phi) &&
              std::isfinite(spec.holonomy.gamma),
          ErrorCode::invalid_argument, "holonomy angles must be finite");
}

double Path::chi(double t) const {
  const double c = std::sin(kPi * t / spec_.tau);
  return kPi * c * c;
}

double Path::chi_dot(double t) const {
  return kPi * kPi / spec_.tau * std::sin(kTwoPi * t / spec_.tau);
}

double Path::phi(double t) const {
  const double gamma = spec_.holonomy.gamma;
  if (spec_.family == PhaseFamily::sine_modulated) {
    const double s = std::sin(kTwoPi * t / spec_.tau);
    return segment_of(t) == 0 ? -kPi / 5.0 * s - kPi / 2.0
                              : kPi / 5.0 * s - gamma - kPi / 2.0;
  }
  const double sc = std::sin(chi(t));
  const double base = -4.0 * spec_.n / 3.0 * sc * sc * sc;
  return segment_of(t) == 0 ? base : base - gamma;
}

double Path::phi_dot(double t) const {
  if (spec_.family == PhaseFamily::sine_modulated) {
    const double rate = 2.0 * kPi * kPi / (5.0 * spec_.tau) *
                        std::cos(kTwoPi * t / spec_.tau);
    return segment_of(t) == 0 ? -rate : rate;
  }
  const double c = chi(t);
  const double sc = std::sin(c);
  return -4.0 * spec_.n * sc * sc * std::cos(c) * chi_dot(t);
}

double Path::f(double t) const {
  if (spec_.family == PhaseFamily::sine_modulated) {
    const double s = std::clamp(t / spec_.tau, 0.0, 1.0);
    return 2.0 * kPi / 5.0 * gauge_table().eval(std::min(s, 1.0 - s));
  }
  const double c = chi(t);
  return spec_.n * (2.0 * c - std::sin(2.0 * c));
}

double Path::f_dot(double t) const {
  if (spec_.family == PhaseFamily::sine_modulated) {
    const double rate = 2.0 * kPi / (5.0 * spec_.tau) * h_of_chi(chi(t));
    return segment_of(t) == 0 ? rate : -rate;
  }
  const double sc = std::sin(chi(t));
  return 4.0 * spec_.n * sc * sc * chi_dot(t);
}

double Path::dphi_dchi(double chi) const {
  if (spec_.family == PhaseFamily::sine_modulated) {
    const double s = std::sqrt(chi * (kPi - chi));
    require(s > 0.0, ErrorCode::invalid_argument,
            "sine-modulated azimuth slope is singular at the loop ends");
    return -(kPi - 2.0 * chi) / (5.0 * s);
  }
  const double sc = std::sin(chi);
  return -4.0 * spec_.n * sc * sc * std::cos(chi);
}

double Path::dynamical_integrand_chi(double chi) const {
  const double sc = std::sin(chi);
  if (spec_.family == PhaseFamily::sine_modulated) {
    const double s2 = chi * (kPi - chi);
    if (s2 <= 0.0) return 0.0;  // both loop ends, where sin^2 wins
    return -h_of_chi(chi) * sc * sc / (10.0 * std::sqrt(s2));
  }
  const double s2 = sc * sc;
  return -2.0 * spec_.n * s2 * s2;
}

PathSpec standard_path(double tau, const HolonomySpec& h, double n) {
  PathSpec spec;
  spec.tau = tau;
  spec.holonomy = h;
  spec.family = n > 0.0 ? PhaseFamily::tuned : PhaseFamily::sine_modulated;
  spec.n = n;
  return spec;
}

PathSpec family_path(double tau, const HolonomySpec& h, double n) {
  PathSpec spec;
  spec.tau = tau;
  spec.holonomy = h;
  spec.family = PhaseFamily::tuned;
  spec.n = n;
  return spec;
}

void validate_path(const Path& path) {
  const double tau = path.tau();
  require(std::abs(path.chi(0.0)) <= 1e-12 && std::abs(path.chi(tau)) <= 1e-12,
          ErrorCode::invalid_argument, "path must start and end at chi = 0");
  require(std::abs(std::sin(path.chi(0.5 * tau))) <= 1e-12,
          ErrorCode::invalid_argument,
          "path must reach a pole of the sphere at mid-loop");
  for (int i = 0; i <= 256; ++i) {
    const double c = path.chi(tau * i / 256.0);
    require(c >= -1e-12 && c <= kPi + 1e-12, ErrorCode::invalid_argument,
            "polar angle left [0, pi]");
  }
}

std::pair<StateVector, StateVector> bright_dark_basis(const HolonomySpec& h,
                                                      int levels) {
  require(levels >= 3, ErrorCode::invalid_argument,
          "bright/dark basis needs at least levels g, e, f");
  const double ct = std::cos(0.5 * h.theta);
  const double st = std::sin(0.5 * h.theta);
  const cd ephi = std::exp(kI * h.phi);
  CVec b = CVec::Zero(levels), d = CVec::Zero(levels);
  b(kG) = st;
  b(kF) = -ct / ephi;
  d(kG) = -ct * ephi;
  d(kF) = -st;
  return {StateVector{b, {levels}}, StateVector{d, {levels}}};
}

Mat holonomy_target(const HolonomySpec& h) {
  const double st = std::sin(h.theta), ct = std::cos(h.theta);
  const std::array<double, 3> n = {st * std::cos(h.phi), -st * std::sin(h.phi),
                                   ct};
  const cd c = std::cos(0.5 * h.gamma);
  const cd s = -kI * std::sin(0.5 * h.gamma);
  Mat u(2, 2);
  u << c + s * n[2], s * (n[0] - kI * n[1]),  //
      s * (n[0] + kI * n[1]), c - s * n[2];
  return std::exp(kI * 0.5 * h.gamma) * u;
}

double dynamical_phase(const Path& path) {
  // In the chi variable the integrand is identical on both segments while
  // chi runs 0 -> pi and back, so the two halves cancel. Integrate each
  // half in its own orientation and let the quadrature exhibit that.
  const auto g = [&path](double chi) {
    return path.dynamical_integrand_chi(chi);
  };
  const double first = integrate(g, 0.0, kPi, 1e-11);
  const double second = -integrate(g, 0.0, kPi, 1e-11);
  return first + second;
}

double error_sensitivity_qs(const Path& path) {
  const cd amp = integrate_complex(
      [&path](double t) {
        const double sc = std::sin(path.chi(t));
        return std::exp(-kI * path.f(t)) * path.chi_dot(t) * sc * sc;
      },
      0.0, 0.5 * path.tau(), 1e-12);
  return std::norm(amp);
}

double qs_closed_form(double n) {
  require(n >= 0.0, ErrorCode::invalid_argument, "family index must be >= 0");
  if (n < 1e-8) {
    // sin^2(pi n) / (2 n)^2 -> pi^2 / 4 as n -> 0.
    return kPi * kPi / 4.0;
  }
  const double s = std::sin(kPi * n);
  return s * s / (4.0 * n * n);
}

}  // namespace holo
