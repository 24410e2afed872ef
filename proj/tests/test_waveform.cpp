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

#include "core/error.hpp"
#include "path/waveform.hpp"

using namespace holo;

namespace {
const HolonomySpec kNot{kPi / 2.0, 0.0, kPi};
const HolonomySpec kHadamard{kPi / 4.0, 0.0, kPi};
const double kOmegaMax = 0.100530964914873;  // rad/ns
}  // namespace

TEST_CASE("synthesized drives reproduce the prescribed path exactly") {
  for (const PathSpec& spec :
       {standard_path(51.0, kNot, 0.0), standard_path(57.0, kHadamard, 0.0),
        family_path(49.0, kNot, 0.0), family_path(128.0, kNot, 0.6),
        family_path(202.0, kHadamard, 1.0)}) {
    const Path path(spec);
    const ControlWaveform wf = inverse_engineer(path);
    const auto [r1, r2] = inversion_residual(wf);
    // Residuals are rates; compare against the polar-rate scale pi^2/tau.
    const double scale = kPi * kPi / path.tau();
    CHECK(r1 / scale < 1e-8);
    CHECK(r2 / scale < 1e-8);
  }
}

TEST_CASE("envelope is non-negative and vanishes at the loop nodes") {
  const ControlWaveform wf =
      inverse_engineer(Path(standard_path(51.0, kNot, 0.0)));
  for (const auto& row : wf.samples()) CHECK(row.omega >= 0.0);
  const double tau = wf.tau();
  const double peak = wf.peak_omega();
  CHECK(wf.omega(0.0) < 1e-9 * peak);
  CHECK(wf.omega(0.5 * tau) < 1e-9 * peak);
  CHECK(wf.omega(tau) < 1e-9 * peak);
  CHECK(peak > 0.0);
}

TEST_CASE("constant-azimuth limit gives the bare polar-rate envelope") {
  const double tau = 49.0;
  const ControlWaveform wf = inverse_engineer(Path(family_path(tau, kNot, 0.0)));
  for (double frac : {0.1, 0.2, 0.35, 0.45, 0.6, 0.85}) {
    const double t = frac * tau;
    const double expect = 0.5 * kPi * kPi / tau *
                          std::abs(std::sin(kTwoPi * t / tau));
    CHECK(std::abs(wf.omega(t) - expect) < 1e-9);
  }
  // The drive phase is constant within each segment.
  const double p0 = wf.phi1(0.2 * tau);
  CHECK(std::abs(wf.phi1(0.4 * tau) - p0) < 1e-9);
  const double p1 = wf.phi1(0.6 * tau);
  CHECK(std::abs(wf.phi1(0.9 * tau) - p1) < 1e-9);
}

TEST_CASE("tuned-family peak follows the closed-form amplitude law") {
  // Omega(t) = (chi_dot/2) sqrt(1 + 16 n^2 sin^6 chi), maximal at the
  // quarter-loop where chi = pi/2 and chi_dot = pi^2/tau.
  for (double n : {0.0, 0.3, 0.6, 1.0}) {
    const double tau = 100.0;
    const ControlWaveform wf = inverse_engineer(Path(family_path(tau, kNot, n)));
    const double expect =
        0.5 * kPi * kPi / tau * std::sqrt(1.0 + 16.0 * n * n);
    CHECK(std::abs(wf.peak_omega() / expect - 1.0) < 1e-6);
  }
}

TEST_CASE("peak amplitude scales inversely with duration") {
  const ControlWaveform a =
      inverse_engineer(Path(standard_path(40.0, kNot, 0.0)));
  const ControlWaveform b =
      inverse_engineer(Path(standard_path(80.0, kNot, 0.0)));
  CHECK(std::abs(a.peak_omega() * 40.0 - b.peak_omega() * 80.0) < 1e-9);
}

TEST_CASE("minimal duration saturates the amplitude limit") {
  for (const PathSpec spec :
       {standard_path(1.0, kNot, 0.0), family_path(1.0, kNot, 0.6)}) {
    const double tau = tau_for_peak(spec, kOmegaMax);
    PathSpec at = spec;
    at.tau = tau;
    const ControlWaveform wf = inverse_engineer(Path(at), 0.0);
    CHECK(std::abs(wf.peak_omega() / kOmegaMax - 1.0) < 1e-9);
  }
  // The sine-modulated gate at 2 pi x 16 MHz runs in about 51 ns; the
  // tuned n = 0 loop needs pi^2 / (2 Omega_max).
  CHECK(tau_for_peak(standard_path(1.0, kNot, 0.0), kOmegaMax) ==
        doctest::Approx(51.0).epsilon(0.02));
  CHECK(tau_for_peak(family_path(1.0, kNot, 0.0), kOmegaMax) ==
        doctest::Approx(kPi * kPi / (2.0 * kOmegaMax)).epsilon(1e-9));
}

TEST_CASE("amplitude limit violations report the feasible duration") {
  const Path path(standard_path(20.0, kNot, 0.0));
  try {
    (void)inverse_engineer(path, kOmegaMax);
    FAIL("expected an amplitude error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::amplitude_exceeded);
    CHECK(std::string(e.what()).find("tau >=") != std::string::npos);
  }
}

TEST_CASE("phase convention ties the two tone phases to the azimuth") {
  const ControlWaveform wf =
      inverse_engineer(Path(standard_path(51.0, kHadamard, 0.0)));
  for (double t : {3.0, 17.0, 29.0, 44.0}) {
    CHECK(std::abs(wf.phi1(t) + wf.phi2(t) + kPi -
                   wf.path().spec().holonomy.phi) < 1e-12);
  }
}

TEST_CASE("amplitude scaling multiplies the envelope and keeps phases") {
  const ControlWaveform wf =
      inverse_engineer(Path(standard_path(51.0, kNot, 0.0)));
  const ControlWaveform up = wf.scaled(1.05);
  for (double t : {5.0, 20.0, 30.0, 47.0}) {
    CHECK(std::abs(up.omega(t) - 1.05 * wf.omega(t)) < 1e-12);
    CHECK(up.phi1(t) == wf.phi1(t));
  }
  CHECK(std::abs(up.peak_omega() - 1.05 * wf.peak_omega()) < 1e-12);
  CHECK_THROWS_AS(wf.scaled(-0.2), Error);
}

TEST_CASE("synthesis is deterministic") {
  const auto a = inverse_engineer(Path(standard_path(51.0, kNot, 0.0))).samples();
  const auto b = inverse_engineer(Path(standard_path(51.0, kNot, 0.0))).samples();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].t_ns == b[i].t_ns);
    CHECK(a[i].omega == b[i].omega);
    CHECK(a[i].phi1 == b[i].phi1);
    CHECK(a[i].phi2 == b[i].phi2);
  }
  CHECK(a.size() == 4001);
  CHECK(a.front().t_ns == 0.0);
  CHECK(a.back().t_ns == 51.0);
}
