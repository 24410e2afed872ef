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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/error.hpp"
#include "core/numeric.hpp"
#include "path/path.hpp"

using namespace holo;

namespace {

const HolonomySpec kNot{kPi / 2.0, 0.0, kPi};
const HolonomySpec kHadamard{kPi / 4.0, 0.0, kPi};

std::vector<Path> sample_paths() {
  return {Path(standard_path(51.0, kNot, 0.0)),
          Path(standard_path(60.0, kHadamard, 0.6)),
          Path(family_path(49.0, kNot, 0.0)),
          Path(family_path(202.0, kNot, 1.0))};
}

// Central difference with interior clamping away from segment edges.
double numeric_derivative(const std::function<double(double)>& g, double t,
                          double h) {
  return (g(t + h) - g(t - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("loops close at chi = 0 and reach the pole at mid-time") {
  for (const Path& p : sample_paths()) {
    CHECK(std::abs(p.chi(0.0)) < 1e-12);
    CHECK(std::abs(p.chi(p.tau())) < 1e-12);
    CHECK(std::abs(std::sin(p.chi(0.5 * p.tau()))) < 1e-12);
    CHECK_NOTHROW(validate_path(p));
  }
}

TEST_CASE("azimuth anchors imprint the holonomy angle between segments") {
  const double tau = 51.0, gamma = kPi;
  const Path mod(standard_path(tau, kNot, 0.0));
  CHECK(std::abs(mod.phi(0.0) - (-kPi / 2.0)) < 1e-12);
  CHECK(std::abs(mod.phi(0.5 * tau) - (-gamma - kPi / 2.0)) < 1e-12);
  CHECK(std::abs(mod.phi(tau) - (-gamma - kPi / 2.0)) < 1e-12);

  const Path tuned(family_path(tau, kNot, 0.6));
  CHECK(std::abs(tuned.phi(0.0)) < 1e-12);
  CHECK(std::abs(tuned.phi(0.5 * tau) - (-gamma)) < 1e-12);
  CHECK(std::abs(tuned.phi(tau) - (-gamma)) < 1e-12);
}

TEST_CASE("constant-azimuth limit of the tuned family") {
  const Path p(family_path(40.0, kNot, 0.0));
  for (double t : {1.0, 7.3, 19.9, 21.0, 33.3}) {
    CHECK(std::abs(p.phi_dot(t)) < 1e-14);
    CHECK(std::abs(p.f(t)) < 1e-14);
    CHECK(std::abs(p.f_dot(t)) < 1e-14);
  }
}

TEST_CASE("analytic rates match numeric derivatives of the angles") {
  for (const Path& p : sample_paths()) {
    const double tau = p.tau();
    const double h = 1e-6 * tau;
    for (double frac :
         {0.03, 0.11, 0.21, 0.24, 0.26, 0.37, 0.49, 0.55, 0.74, 0.76, 0.93}) {
      const double t = frac * tau;
      const double cd_num =
          numeric_derivative([&](double x) { return p.chi(x); }, t, h);
      CHECK(std::abs(cd_num - p.chi_dot(t)) < 1e-6);
      const double pd_num =
          numeric_derivative([&](double x) { return p.phi(x); }, t, h);
      CHECK(std::abs(pd_num - p.phi_dot(t)) < 1e-6);
      const double fd_num =
          numeric_derivative([&](double x) { return p.f(x); }, t, h);
      CHECK(std::abs(fd_num - p.f_dot(t)) < 1e-5);
    }
  }
}

TEST_CASE("gauge rate cancels the azimuth rate against the polar cosine") {
  // The defining relation of the gauge phase: f_dot = -phi_dot / cos(chi).
  for (const Path& p : sample_paths()) {
    const double tau = p.tau();
    for (double frac : {0.05, 0.15, 0.21, 0.35, 0.45, 0.6, 0.8, 0.95}) {
      const double t = frac * tau;
      const double c = std::cos(p.chi(t));
      if (std::abs(c) < 1e-3) continue;
      CHECK(std::abs(p.f_dot(t) + p.phi_dot(t) / c) < 1e-10);
    }
  }
}

TEST_CASE("gauge phase closes the loop and is continuous at mid-time") {
  for (const Path& p : sample_paths()) {
    CHECK(std::abs(p.f(0.0)) < 1e-12);
    CHECK(std::abs(p.f(p.tau())) < 1e-10);
    const double eps = 1e-9 * p.tau();
    CHECK(std::abs(p.f(0.5 * p.tau() - eps) - p.f(0.5 * p.tau() + eps)) <
          1e-6);
  }
  // Tuned family: f rises to 2 pi n at the pole.
  const Path p1(family_path(100.0, kNot, 1.0));
  CHECK(std::abs(p1.f(50.0) - kTwoPi) < 1e-12);
}

TEST_CASE("sine-modulated gauge table agrees with direct quadrature") {
  const double tau = 51.0;
  const Path p(standard_path(tau, kNot, 0.0));
  // f(t) = (2 pi / 5) int_0^{t/tau} (pi - 2 chi)/cos(chi) ds, via an
  // independent adaptive integration in scaled time.
  for (double frac : {0.1, 0.25, 0.4, 0.5}) {
    const double direct =
        kTwoPi / 5.0 *
        integrate(
            [](double s) {
              const double c = std::sin(kPi * s);
              const double chi = kPi * c * c;
              const double x = chi - 0.5 * kPi;
              if (std::abs(x) < 1e-8) return 2.0;
              return (kPi - 2.0 * chi) / std::cos(chi);
            },
            0.0, frac, 1e-13);
    CHECK(std::abs(p.f(frac * tau) - direct) < 1e-9);
  }
}

TEST_CASE("amplitude-error sensitivity has the tuned-family closed form") {
  // Oracle: q_s = sin^2(n pi) / (2 n)^2, derived by substituting
  // sin^2(chi) dt = df / (4 n) into the half-loop transfer integral,
  // which makes it int e^{-i f} df / (4 n) over one full 2 pi n sweep.
  for (double n : {0.25, 0.5, 0.77, 1.0, 1.3, 2.0}) {
    const Path p(family_path(80.0, kNot, n));
    const double s = std::sin(kPi * n);
    const double direct = s * s / (4.0 * n * n);
    CHECK(std::abs(error_sensitivity_qs(p) - direct) < 1e-9);
    CHECK(std::abs(qs_closed_form(n) - direct) < 1e-15);
  }
  // Integer n kills the sensitivity entirely.
  CHECK(error_sensitivity_qs(Path(family_path(80.0, kNot, 1.0))) < 1e-8);
  CHECK(error_sensitivity_qs(Path(family_path(80.0, kNot, 2.0))) < 1e-8);
  // n -> 0 limit: the gauge phase freezes and the transfer integral is
  // int chi_dot sin^2 chi dt / ... = pi/2, so q_s -> pi^2/4.
  CHECK(std::abs(error_sensitivity_qs(Path(family_path(80.0, kNot, 0.0))) -
                 kPi * kPi / 4.0) < 1e-9);
  CHECK(std::abs(qs_closed_form(0.0) - kPi * kPi / 4.0) < 1e-15);
  // Duration drops out of the scaled integral.
  CHECK(std::abs(error_sensitivity_qs(Path(family_path(33.0, kNot, 0.6))) -
                 error_sensitivity_qs(Path(family_path(210.0, kNot, 0.6)))) <
        1e-10);
}

TEST_CASE("dynamical phase vanishes for both families") {
  for (const Path& p : sample_paths()) {
    CHECK(std::abs(dynamical_phase(p)) < 1e-6);
  }
}

TEST_CASE("dynamical phase oracle: direct time integration over the loop") {
  // Independent check in the time variable with a midpoint rule; the
  // integrand phi_dot sin^2(chi) / (2 cos chi) is finite everywhere (its
  // numerator vanishes with cos chi) but is evaluated only off the exact
  // zero-crossings by construction of the midpoint grid.
  for (const Path& p : {Path(standard_path(51.0, kNot, 0.0)),
                        Path(family_path(60.0, kNot, 0.6))}) {
    const double tau = p.tau();
    const int n = 200000;
    const double h = tau / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double t = (i + 0.5) * h;
      const double c = std::cos(p.chi(t));
      const double s = std::sin(p.chi(t));
      acc += p.phi_dot(t) * s * s / (2.0 * c) * h;
    }
    CHECK(std::abs(acc) < 1e-5);
  }
}

TEST_CASE("holonomy matrix reduces to the exact NOT and Hadamard gates") {
  Mat sx(2, 2), hd(2, 2);
  sx << 0, 1, 1, 0;
  hd << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0),
      -1.0 / std::sqrt(2.0);
  CHECK(approx_equal(holonomy_target(kNot), sx, 1e-14));
  CHECK(approx_equal(holonomy_target(kHadamard), hd, 1e-14));
}

TEST_CASE("holonomy matrix equals the bright/dark projector form") {
  for (const HolonomySpec h :
       {HolonomySpec{0.3, 1.1, 2.0}, HolonomySpec{2.1, -0.7, 0.9}, kNot,
        kHadamard}) {
    const auto [b, d] = bright_dark_basis(h);
    CVec b2(2), d2(2);
    b2 << b.amp(kG), b.amp(kF);
    d2 << d.amp(kG), d.amp(kF);
    const Mat u = d2 * d2.adjoint() +
                  std::exp(kI * h.gamma) * (b2 * b2.adjoint());
    CHECK(approx_equal(holonomy_target(h), u, 1e-13));
    const Mat uu = holonomy_target(h);
    CHECK(approx_equal(uu.adjoint() * uu, Mat::Identity(2, 2), 1e-14));
  }
}

TEST_CASE("bright and dark states are orthonormal") {
  for (const HolonomySpec h :
       {HolonomySpec{0.3, 1.1, 2.0}, kNot, kHadamard}) {
    const auto [b, d] = bright_dark_basis(h, 4);
    CHECK(std::abs(b.norm() - 1.0) < 1e-14);
    CHECK(std::abs(d.norm() - 1.0) < 1e-14);
    CHECK(std::abs(b.amp.dot(d.amp)) < 1e-14);
    CHECK(std::abs(b.amp(kE)) == 0.0);
    CHECK(std::abs(d.amp(kE)) == 0.0);
  }
}

TEST_CASE("standard path selects the family by the tuning index") {
  CHECK(standard_path(51.0, kNot, 0.0).family ==
        PhaseFamily::sine_modulated);
  CHECK(standard_path(51.0, kNot, 0.6).family == PhaseFamily::tuned);
  CHECK(family_path(51.0, kNot, 0.0).family == PhaseFamily::tuned);
}

TEST_CASE("invalid path parameters are rejected") {
  CHECK_THROWS_AS(Path(standard_path(-1.0, kNot, 0.0)), Error);
  CHECK_THROWS_AS(Path(standard_path(51.0, kNot, -0.5)), Error);
}

TEST_CASE("closed-form sensitivity is continuous across its removable zeros") {
  // sin^2(n pi) / (2 n)^2 has removable singular points at n = 0 and
  // removable-looking zeros at integers; the implementation must walk
  // through all of them without jumps.
  double prev = qs_closed_form(0.0);
  CHECK(prev == doctest::Approx(kPi * kPi / 4.0).epsilon(1e-12));
  // The steepest descent of the closed form is about 4 per unit n, so
  // adjacent samples may differ by at most ~4 dn.
  const double dn = 1e-3;
  for (int i = 1; i <= 2000; ++i) {
    const double cur = qs_closed_form(i * dn);
    CHECK(std::abs(cur - prev) < 5.0 * dn);
    prev = cur;
  }
  // Integer n kills the transfer error up to the rounding of sin(n pi).
  CHECK(qs_closed_form(1.0) < 1e-30);
  CHECK(qs_closed_form(2.0) < 1e-30);
}

TEST_CASE("holonomy matrix is special up to the global loop phase") {
  // e^{i gamma/2} times an SU(2) element: the determinant magnitude is one
  // for every mixing angle and loop phase.
  for (double theta : {0.0, 0.4, kPi / 2.0, 2.2, kPi}) {
    for (double gamma : {0.3, kPi, 5.1}) {
      const Mat u = holonomy_target({theta, 0.7, gamma});
      CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-12);
      CHECK((u * u.adjoint() - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
}
