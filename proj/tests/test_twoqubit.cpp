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

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "core/error.hpp"
#include "core/linalg.hpp"
#include "doctest.h"
#include "gate2q/gate2q.hpp"
#include "model/perturbation.hpp"
#include "model/stark.hpp"
#include "model/twoqubit.hpp"
#include "path/path.hpp"

namespace holo {
namespace {

// Calibration is the expensive part of this suite (one exact
// diagonalization plus root solve per grid node), so every test case
// shares a single curve built on first use.
const StarkCurve& shared_curve() {
  static const StarkCurve curve = [] {
    const TwoQubitDeviceParams dev = reference_two_qubit_device();
    std::vector<double> grid(73);
    const double top = 2.2619467105846498;  // 2 pi x 360 MHz
    for (int i = 0; i < 73; ++i) grid[i] = top * i / 72.0;
    return stark_compensation_curve(dev, grid, 0);
  }();
  return curve;
}

Operator pair_perturbation(const TwoQubitDeviceParams& dev, double omega,
                           double phase) {
  const Operator ex = qubit_aux_exchange(dev, 1);
  const Operator dr = qubit_aux_drive(omega, phase);
  return make_operator(ex.mat + dr.mat, ex.dims);
}

TEST_CASE("second order block matches the pair closed form") {
  // 5 x 5 grid of exchange and drive amplitudes up to delta / 10, with a
  // nonzero drive phase to pin the sign convention of the coupling.
  TwoQubitDeviceParams dev = reference_two_qubit_device();
  const double top = dev.delta / 10.0;
  const int fg = 2 * 4 + 0;
  const int ge = 0 * 4 + 1;
  for (double phase : {0.0, 1.1}) {
    for (int a = 1; a <= 5; ++a) {
      for (int b = 1; b <= 5; ++b) {
        const double g = top * a / 5.0;
        const double omega = top * b / 5.0;
        dev.g1 = dev.g2 = g;
        const Operator h0 = qubit_aux_bare(dev, 1);
        const PerturbationResult pt =
            second_order_perturbation(h0, pair_perturbation(dev, omega, phase),
                                      {fg, ge});
        const EffectiveCouplings ref = effective_couplings_closed_form(
            g, omega, dev.delta, dev.qubit1.alpha);
        const double eps = h0.mat(fg, fg).real();
        CHECK(pt.subspace_energy == doctest::Approx(eps).epsilon(1e-12));
        CHECK(pt.first_order_norm < 1e-14);
        const double efg = pt.effective(0, 0).real() - eps;
        const double ege = pt.effective(1, 1).real() - eps;
        CHECK(efg == doctest::Approx(ref.eta_fg).epsilon(1e-10));
        CHECK(ege == doctest::Approx(ref.eta_ge).epsilon(1e-10));
        const cd expect = ref.g_pair * std::exp(cd(0.0, phase));
        CHECK(std::abs(pt.effective(1, 0) - expect) <=
              1e-10 * std::abs(expect));
        CHECK(std::abs(pt.effective(0, 1) - std::conj(pt.effective(1, 0))) <
              1e-14);
      }
    }
  }
}

TEST_CASE("second order block reproduces the Raman coupling of a Lambda system") {
  // Two degenerate ground levels bridged by one far detuned excited level:
  // the textbook effective coupling is -g1 g2 / Delta with light shifts
  // -g_i^2 / Delta.
  const double big = 5.0;
  const double g1 = 0.3, g2 = 0.7;
  Mat h0 = Mat::Zero(3, 3);
  h0(1, 1) = big;
  Mat hp = Mat::Zero(3, 3);
  hp(0, 1) = g1;
  hp(1, 0) = g1;
  hp(2, 1) = g2;
  hp(1, 2) = g2;
  const PerturbationResult pt = second_order_perturbation(
      make_operator(h0, {3}), make_operator(hp, {3}), {0, 2});
  CHECK(pt.subspace_energy == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(pt.first_order_norm < 1e-15);
  CHECK(pt.effective(0, 0).real() == doctest::Approx(-g1 * g1 / big).epsilon(1e-12));
  CHECK(pt.effective(1, 1).real() == doctest::Approx(-g2 * g2 / big).epsilon(1e-12));
  CHECK(pt.effective(0, 1).real() == doctest::Approx(-g1 * g2 / big).epsilon(1e-12));
  CHECK(std::abs(pt.effective(0, 1).imag()) < 1e-15);
}

TEST_CASE("a vanishing perturbation leaves only the subspace energy") {
  Mat h0 = Mat::Zero(3, 3);
  h0(0, 0) = 1.5;
  h0(1, 1) = 1.5;
  h0(2, 2) = 7.0;
  const PerturbationResult pt = second_order_perturbation(
      make_operator(h0, {3}), make_operator(Mat::Zero(3, 3), {3}), {0, 1});
  CHECK(pt.first_order_norm == 0.0);
  CHECK((pt.effective - 1.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-15);
}

TEST_CASE("a direct coupling inside the subspace is reported, not raised") {
  Mat h0 = Mat::Zero(3, 3);
  h0(2, 2) = 9.0;
  Mat hp = Mat::Zero(3, 3);
  hp(0, 1) = 0.1;
  hp(1, 0) = 0.1;
  hp(0, 2) = 0.3;
  hp(2, 0) = 0.3;
  const PerturbationResult pt = second_order_perturbation(
      make_operator(h0, {3}), make_operator(hp, {3}), {0, 1});
  CHECK(pt.first_order_norm ==
        doctest::Approx(0.1 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(pt.effective(0, 1).real() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(pt.effective(0, 0).real() ==
        doctest::Approx(-0.3 * 0.3 / 9.0).epsilon(1e-12));
  CHECK(std::abs(pt.effective(1, 1)) < 1e-15);
}

TEST_CASE("perturbation preconditions are enforced") {
  Mat diag = Mat::Zero(3, 3);
  diag(2, 2) = 9.0;

  // Subspace levels must be degenerate.
  Mat split = diag;
  split(1, 1) = 1.0;
  CHECK_THROWS_AS(second_order_perturbation(make_operator(split, {3}),
                                            make_operator(Mat::Zero(3, 3), {3}),
                                            {0, 1}),
                  Error);

  // An environment level touching the subspace energy has a vanishing
  // denominator.
  Mat close = diag;
  close(1, 1) = 5e-9;
  Mat hp = Mat::Zero(3, 3);
  hp(0, 1) = 0.2;
  hp(1, 0) = 0.2;
  CHECK_THROWS_AS(second_order_perturbation(make_operator(close, {3}),
                                            make_operator(hp, {3}), {0}),
                  Error);

  // The unperturbed Hamiltonian must be diagonal.
  Mat offdiag = diag;
  offdiag(0, 2) = 0.4;
  offdiag(2, 0) = 0.4;
  Operator raw{offdiag, {3}};
  CHECK_THROWS_AS(
      second_order_perturbation(raw, make_operator(Mat::Zero(3, 3), {3}), {0}),
      Error);

  // The perturbation must be Hermitian.
  Mat skew = Mat::Zero(3, 3);
  skew(0, 1) = 0.2;
  Operator raw_hp{skew, {3}};
  CHECK_THROWS_AS(
      second_order_perturbation(make_operator(diag, {3}), raw_hp, {0, 1}),
      Error);

  // Out of range and repeated subspace indices.
  CHECK_THROWS_AS(second_order_perturbation(make_operator(diag, {3}),
                                            make_operator(Mat::Zero(3, 3), {3}),
                                            {0, 3}),
                  Error);
  CHECK_THROWS_AS(second_order_perturbation(make_operator(diag, {3}),
                                            make_operator(Mat::Zero(3, 3), {3}),
                                            {0, 0}),
                  Error);
}

TEST_CASE("the two forms of the pair coupling agree") {
  // g omega / (sqrt2 (delta - alpha)) - g omega / (sqrt2 delta) collapses
  // to the single fraction used by the closed form.
  std::mt19937 rng(321u);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  for (int k = 0; k < 20; ++k) {
    const double alpha = 1.0 + u(rng);
    const double delta = alpha + 1.0 + 4.0 * u(rng);
    const double g = 0.5 * u(rng);
    const double omega = 0.8 * u(rng);
    const double split = g * omega / (std::sqrt(2.0) * (delta - alpha)) -
                         g * omega / (std::sqrt(2.0) * delta);
    const double fused =
        g * omega * alpha / (std::sqrt(2.0) * delta * (delta - alpha));
    CHECK(split == doctest::Approx(fused).epsilon(1e-12));
    CHECK(fused ==
          doctest::Approx(effective_couplings_closed_form(g, omega, delta,
                                                          alpha)
                              .g_pair)
              .epsilon(1e-12));
  }
}

TEST_CASE("closed form couplings reject singular detunings") {
  CHECK_THROWS_AS(effective_couplings_closed_form(0.1, 0.1, 0.0, 1.0), Error);
  CHECK_THROWS_AS(effective_couplings_closed_form(0.1, 0.1, 2.0, 2.0), Error);
  CHECK_THROWS_AS(effective_couplings_closed_form(0.1, 0.1, 2.0, -2.0), Error);
}

TEST_CASE("the pair levels used by the gate are two photon resonant") {
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  for (int which : {1, 2}) {
    const Operator h0 = qubit_aux_bare(dev, which);
    const double efg = h0.mat(2 * 4 + 0, 2 * 4 + 0).real();
    const double ege = h0.mat(0 * 4 + 1, 0 * 4 + 1).real();
    CHECK(efg == doctest::Approx(ege).epsilon(1e-12));
    CHECK(efg ==
          doctest::Approx(2.0 * dev.delta_k - dev.qubit1.alpha).epsilon(1e-12));
  }
  CHECK(dev.delta_a ==
        doctest::Approx(2.0 * dev.delta_k - dev.qubit1.alpha).epsilon(1e-12));
}

TEST_CASE("the published operating coupling needs the published drive") {
  // A per qubit coupling of 2 pi x 10 MHz maps through the linear closed
  // form to a drive near 2 pi x 320 MHz; the calibrated curve lands within
  // a few percent of the same amplitude.
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  const double g_target = 0.01 * kTwoPi;  // 2 pi x 10 MHz in rad/ns
  const double slope = dev.g1 * dev.qubit1.alpha /
                       (std::sqrt(2.0) * dev.delta *
                        (dev.delta - dev.qubit1.alpha));
  const double omega_closed = g_target / slope;
  const double published = 0.32 * kTwoPi;  // 2 pi x 320 MHz in rad/ns
  CHECK(std::abs(omega_closed - published) / published < 0.05);
  const double omega_curve = shared_curve().omega_for_coupling(g_target);
  CHECK(std::abs(omega_curve - published) / published < 0.07);
}

TEST_CASE("calibration curve shape and anchors") {
  const StarkCurve& curve = shared_curve();
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  REQUIRE(curve.size() == 73);
  CHECK(curve.omega().front() == 0.0);
  CHECK(curve.delta_s().front() == 0.0);
  // Excitation number conservation forbids a drive-free bright coupling;
  // only eigensolver noise survives.
  CHECK(std::abs(curve.g_eff().front()) < 1e-10);

  // The shift grows monotonically in magnitude and pulls the frame down.
  for (int i = 1; i < curve.size(); ++i) {
    CHECK(curve.delta_s()[i] < curve.delta_s()[i - 1]);
    CHECK(curve.g_eff()[i] > curve.g_eff()[i - 1]);
  }
  CHECK(curve.max_coupling() == doctest::Approx(curve.g_eff().back()));
  CHECK(curve.max_coupling() > 0.063);

  // Zero drive baseline: the static dressing alone detunes the pair by
  // about 2 g^2 (1 / (delta - alpha) + 1 / delta).
  const double sigma0 =
      2.0 * dev.g1 * dev.g1 *
      (1.0 / (dev.delta - dev.qubit1.alpha) + 1.0 / dev.delta);
  CHECK(std::abs(curve.baseline() - sigma0) / sigma0 < 0.1);

  // Small drive slope close to the second order prediction.
  const double slope = dev.g1 * dev.qubit1.alpha /
                       (std::sqrt(2.0) * dev.delta *
                        (dev.delta - dev.qubit1.alpha));
  const double measured = curve.g_eff()[1] / curve.omega()[1];
  CHECK(std::abs(measured - slope) / slope < 0.1);
}

TEST_CASE("calibration roots keep the bright state resonant") {
  const StarkCurve& curve = shared_curve();
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  for (int i : {0, 18, 36, 54, 72}) {
    const double shift = curve.baseline() + curve.delta_s()[i];
    CHECK(std::abs(stark_mismatch(dev, curve.omega()[i], shift)) < 1e-6);
  }
  // Away from the root the mismatch is visible.
  CHECK(std::abs(stark_mismatch(dev, 0.0, 0.0)) > 1e-2);
}

TEST_CASE("calibration curve inverts its own nodes") {
  const StarkCurve& curve = shared_curve();
  for (int i : {1, 20, 40, 72}) {
    CHECK(curve.omega_for_coupling(curve.g_eff()[i]) ==
          doctest::Approx(curve.omega()[i]).epsilon(1e-9));
    CHECK(curve.delta_s_at(curve.omega()[i]) ==
          doctest::Approx(curve.delta_s()[i]).epsilon(1e-9));
  }
  CHECK(std::abs(curve.omega_for_coupling(0.0)) < 1e-12);
  CHECK(std::abs(curve.delta_s_at(0.0)) < 1e-12);
  CHECK_THROWS_AS(curve.omega_for_coupling(curve.max_coupling() * 1.01), Error);
  CHECK_THROWS_AS(curve.delta_s_at(curve.omega().back() * 1.01), Error);
}

TEST_CASE("curve construction validates its columns") {
  const std::vector<double> om{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> ds{0.0, -0.1, -0.2, -0.3};
  const std::vector<double> ge{0.0, 0.1, 0.2, 0.3};
  CHECK_NOTHROW(StarkCurve(om, ds, ge, 0.1));
  CHECK_THROWS_AS(StarkCurve({0.0, 1.0, 2.0}, ds, ge, 0.1), Error);
  CHECK_THROWS_AS(StarkCurve({0.1, 1.0, 2.0, 3.0}, ds, ge, 0.1), Error);
  CHECK_THROWS_AS(StarkCurve({0.0, 2.0, 1.0, 3.0}, ds, ge, 0.1), Error);
  CHECK_THROWS_AS(StarkCurve(om, {0.1, -0.1, -0.2, -0.3}, ge, 0.1), Error);
  CHECK_THROWS_AS(StarkCurve(om, ds, {0.0, 0.2, 0.1, 0.3}, 0.1), Error);
}

TEST_CASE("register basis is orthonormal and label faithful") {
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  const std::vector<std::array<int, 3>> labels = {
      {0, 0, 0}, {0, 0, 2}, {2, 0, 0}, {2, 0, 2}, {0, 1, 0}};
  const Mat reg = dressed_register_basis(dev, labels);
  REQUIRE(reg.rows() == 64);
  REQUIRE(reg.cols() == 5);
  CHECK((reg.adjoint() * reg - Mat::Identity(5, 5)).cwiseAbs().maxCoeff() <
        1e-12);
  for (int j = 0; j < 5; ++j) {
    const auto& l = labels[j];
    const cd amp = reg(two_qubit_index(l[0], l[1], l[2]), j);
    // Dominant weight on the bare label, with a real positive amplitude.
    // The doubly excited fgf dresses on both arms, so its bare weight is
    // the smallest at about 0.947.
    CHECK(std::norm(amp) > 0.94);
    CHECK(amp.real() > 0.0);
    CHECK(std::abs(amp.imag()) < 1e-12);
  }
  // The ground state carries no excitation, so nothing dresses it.
  CHECK(std::norm(reg(two_qubit_index(0, 0, 0), 0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("register basis rejects unknown labels") {
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  CHECK_THROWS_AS(dressed_register_basis(dev, {{{0, 0, 4}}}), Error);
  CHECK_THROWS_AS(dressed_register_basis(dev, {{{0, 0, 0}, {0, 0, 0}}}), Error);
}

TEST_CASE("full Hamiltonian assembly") {
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  TwoQubitDrives drives;
  drives.omega1 = [](double t) { return 0.3 + 0.1 * std::sin(t); };
  drives.phase1 = [](double t) { return 0.4 * t; };
  drives.omega2 = [](double t) { return 0.2 + 0.05 * std::cos(t); };
  drives.phase2 = [](double t) { return -0.7 * t; };
  drives.shift = [](double) { return 0.137; };
  HamiltonianFn h = two_qubit_hamiltonian(dev, drives);
  REQUIRE(h.dim() == 64);

  Mat m(64, 64);
  for (double t : {0.0, 0.31, 1.7, 12.9}) {
    h.eval(t, m);
    // Hermitian to near machine precision at every time.
    CHECK((m - m.adjoint().eval()).cwiseAbs().maxCoeff() < 1e-13);
  }

  h.eval(0.5, m);
  // Drive entry on qubit 1: (omega1 / 2) e^{i phase1} sqrt(l) lowering.
  const cd d1 = 0.5 * drives.omega1(0.5) *
                std::exp(cd(0.0, drives.phase1(0.5))) * std::sqrt(2.0);
  CHECK(std::abs(m(two_qubit_index(1, 0, 0), two_qubit_index(2, 0, 0)) - d1) <
        1e-13);
  // Exchange entry between |egg> and |geg>.
  CHECK(std::abs(m(two_qubit_index(0, 1, 0), two_qubit_index(1, 0, 0)) -
                 cd(dev.g1, 0.0)) < 1e-13);

  // The frame shift subtracts the total excitation number.
  TwoQubitDrives still = drives;
  still.shift = [](double) { return 0.0; };
  Mat m0(64, 64);
  two_qubit_hamiltonian(dev, still).eval(0.5, m0);
  const Mat diff = m0 - m;
  const int i_fgf = two_qubit_index(2, 0, 2);
  const int i_geg = two_qubit_index(0, 1, 0);
  CHECK(std::abs(diff(i_fgf, i_fgf) - cd(0.137 * 4.0, 0.0)) < 1e-12);
  CHECK(std::abs(diff(i_geg, i_geg) - cd(0.137, 0.0)) < 1e-12);
  CHECK(std::abs(diff(two_qubit_index(1, 0, 0), two_qubit_index(2, 0, 0))) <
        1e-15);
}

TEST_CASE("transfer block targets") {
  // vartheta = 0 leaves the register untouched except for the sign on the
  // driven arm; vartheta = pi / 2 swaps fg and gf.
  const Mat u0 = two_qubit_target(0.0);
  Mat ref = Mat::Identity(4, 4);
  ref(2, 2) = -1.0;
  CHECK((u0 - ref).cwiseAbs().maxCoeff() < 1e-15);

  const Mat uswap = two_qubit_target(0.5 * kPi);
  CHECK(std::abs(uswap(1, 2) - cd(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(uswap(2, 1) - cd(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(uswap(1, 1)) < 1e-12);
  CHECK(std::abs(uswap(2, 2)) < 1e-12);
  CHECK(std::abs(uswap(0, 0) - cd(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(uswap(3, 3) - cd(1.0, 0.0)) < 1e-15);

  for (double v : {0.3, 1.1, 2.0}) {
    const Mat u = two_qubit_target(v);
    CHECK((u * u - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-12);
    CHECK((u - u.adjoint().eval()).cwiseAbs().maxCoeff() < 1e-12);
  }

  CHECK_THROWS_AS(embed_s2(Mat::Identity(4, 4)), Error);
  const Mat id4 = embed_s2(Mat::Identity(3, 3));
  CHECK((id4 - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("schedule reproduces the ideal transfer block") {
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  TwoQubitGateSpec spec;
  const TwoQubitSchedule sched(spec, dev, shared_curve());

  // At vartheta = pi / 2 the ideal gate is the fg / gf swap and the two
  // arms share one Stark history, so no residual phase accumulates.
  CHECK((sched.ideal_s2() - two_qubit_target(0.5 * kPi)).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK(std::abs(sched.residual_phase_total()) < 1e-9);
  CHECK(sched.peak_coupling() <= shared_curve().max_coupling() + 1e-12);
  CHECK(sched.peak_drive() <= shared_curve().omega().back() + 1e-9);

  // The three level effective model driven by the same waveform must land
  // on the ideal gate.
  const Mat u3 = two_qubit_effective_propagator(sched);
  const Mat u4 = embed_s2(u3);
  const cd tr = (sched.ideal_s2().adjoint() * u4).trace();
  CHECK(std::abs(tr) / 4.0 > 1.0 - 1e-5);

  // Dark state protection: the undriven superposition rides through.
  const auto bd = bright_dark_basis(
      {spec.vartheta, spec.phi, spec.gamma}, 3);
  const CVec dark = bd.second.amp;
  CHECK(std::abs(dark.dot(u3 * dark)) > 1.0 - 1e-6);
  const CVec bright = bd.first.amp;
  CHECK(std::abs(bright.dot(u3 * bright) -
                 std::exp(cd(0.0, spec.gamma))) < 1e-4);
}

TEST_CASE("schedule handles a generic transfer angle") {
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  TwoQubitGateSpec spec;
  spec.vartheta = 1.234;
  spec.phi = 0.7;
  spec.gamma = 2.1;
  spec.tau = 80.0;
  const TwoQubitSchedule sched(spec, dev, shared_curve());

  // Unequal arms accumulate different Stark shifts, so the residual phase
  // is nonzero and must be what the drive schedule applies.
  CHECK(std::abs(sched.residual_phase_total()) > 1e-3);
  CHECK(sched.residual_phase(0.0) == doctest::Approx(0.0));
  CHECK(sched.residual_phase(spec.tau) ==
        doctest::Approx(sched.residual_phase_total()).epsilon(1e-9));

  const Mat u3 = two_qubit_effective_propagator(sched);
  const Mat u4 = embed_s2(u3);
  const cd tr = (sched.ideal_s2().adjoint() * u4).trace();
  CHECK(std::abs(tr) / 4.0 > 1.0 - 1e-5);

  const auto bd = bright_dark_basis({spec.vartheta, spec.phi, spec.gamma}, 3);
  CHECK(std::abs(bd.second.amp.dot(u3 * bd.second.amp)) > 1.0 - 1e-6);

  // The two arm couplings split the synthesized envelope by the transfer
  // angle at all times.
  const double t = 0.37 * spec.tau;
  CHECK(sched.coupling1(t) ==
        doctest::Approx(sched.coupling().omega(t) * std::sin(0.5 * spec.vartheta))
            .epsilon(1e-12));
  CHECK(sched.coupling2(t) ==
        doctest::Approx(sched.coupling().omega(t) * std::cos(0.5 * spec.vartheta))
            .epsilon(1e-12));
}

TEST_CASE("schedule rejects loops beyond the calibrated amplitude") {
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  TwoQubitGateSpec spec;
  spec.vartheta = kPi / 3.0;  // cos weighted arm needs more coupling
  spec.tau = 57.0;
  CHECK_THROWS_AS(TwoQubitSchedule(spec, dev, shared_curve()), Error);

  TwoQubitGateSpec bad;
  bad.tau = -1.0;
  CHECK_THROWS_AS(TwoQubitSchedule(bad, dev, shared_curve()), Error);
  TwoQubitGateSpec wide;
  wide.vartheta = 3.5;
  CHECK_THROWS_AS(TwoQubitSchedule(wide, dev, shared_curve()), Error);
}

TEST_CASE("full register simulation at the operating point") {
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  TwoQubitGateSpec spec;
  const TwoQubitSchedule sched(spec, dev, shared_curve());

  const TwoQubitRunResult on = simulate_two_qubit_gate(sched, dev, 2, 0, true);
  REQUIRE(!on.times.empty());
  CHECK(on.times.front() == 0.0);
  CHECK(on.times.back() == doctest::Approx(spec.tau));
  REQUIRE(on.pop_fgg.size() == on.times.size());
  REQUIRE(on.fidelity.size() == on.times.size());

  // The compensated gate sits inside the published confidence band.
  CHECK(on.fidelity_unconditioned > 0.9844);
  CHECK(on.fidelity_unconditioned < 1.0044);
  CHECK(on.fidelity_conditioned >= on.fidelity_unconditioned - 1e-9);
  CHECK(on.fidelity_conditioned <= 1.0 + 1e-9);

  // Population starts and ends in the register even though the auxiliary
  // level is transiently occupied.
  CHECK(on.loss_initial < 1e-3);
  CHECK(on.loss_final < 1e-3);
  CHECK(on.pop_fgg.front() > 0.999);
  CHECK(on.pop_ggf.back() > 0.98);
  CHECK(on.pop_geg.back() < 1e-3);
  const double peak_aux =
      *std::max_element(on.pop_geg.begin(), on.pop_geg.end());
  CHECK(peak_aux > 0.1);  // the transfer really passes through |geg>

  // Without the frequency compensation the same pulses miss badly.
  const TwoQubitRunResult off =
      simulate_two_qubit_gate(sched, dev, 2, 0, false);
  CHECK(on.fidelity_unconditioned > off.fidelity_unconditioned + 0.001);

  // Register states outside the transfer pair are fixed points.
  const TwoQubitRunResult gg = simulate_two_qubit_gate(sched, dev, 0, 0, true);
  CHECK(gg.fidelity_unconditioned > 0.99);
  const TwoQubitRunResult ff = simulate_two_qubit_gate(sched, dev, 2, 2, true);
  CHECK(ff.fidelity_unconditioned > 0.99);
}

TEST_CASE("simulation validates its inputs") {
  const TwoQubitDeviceParams dev = reference_two_qubit_device();
  TwoQubitGateSpec spec;
  const TwoQubitSchedule sched(spec, dev, shared_curve());
  CHECK_THROWS_AS(simulate_two_qubit_gate(sched, dev, 1, 0, true), Error);
  CHECK_THROWS_AS(simulate_two_qubit_gate(sched, dev, 0, 3, true), Error);
}

TEST_CASE("decoherence channels lift onto the right subsystems") {
  TwoQubitDeviceParams dev = reference_two_qubit_device();
  CHECK(two_qubit_noise(dev).empty());

  dev.qubit1.gamma1 = 1e-4;
  dev.qubit2.gamma2 = 2e-4;
  const NoiseModel noise = two_qubit_noise(dev);
  REQUIRE(noise.size() == 2);

  // Relaxation on qubit 1: lowering acts on the first index only.
  CHECK(noise[0].first == doctest::Approx(1e-4));
  const Mat& low = noise[0].second.mat;
  CHECK(std::abs(low(two_qubit_index(0, 1, 2), two_qubit_index(1, 1, 2)) -
                 cd(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(low(two_qubit_index(0, 0, 0), two_qubit_index(0, 0, 1))) <
        1e-15);

  // Dephasing on qubit 2: diagonal occupation of the last index.
  CHECK(noise[1].first == doctest::Approx(2e-4));
  const Mat& num = noise[1].second.mat;
  CHECK(std::abs(num(two_qubit_index(0, 0, 3), two_qubit_index(0, 0, 3)) -
                 cd(3.0, 0.0)) < 1e-15);
  CHECK(std::abs(num(two_qubit_index(2, 0, 0), two_qubit_index(2, 0, 0))) <
        1e-15);
}

}  // namespace
}  // namespace holo
