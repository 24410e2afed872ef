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

#include "dynamics/evolve.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "core/error.hpp"

namespace holo {

namespace {

long step_count_for(double tau, double dt) {
  require(tau > 0.0 && dt > 0.0, ErrorCode::invalid_argument,
          "evolution span and step must be positive");
  return std::max<long>(1, std::lround(tau / dt));
}

long sample_stride(long steps, int max_samples) {
  require(max_samples >= 2, ErrorCode::invalid_argument,
          "need at least two trajectory samples");
  // Stride so that steps/stride + endpoints stay within the bound.
  return steps / (max_samples - 1) + (steps % (max_samples - 1) != 0 ? 1 : 0);
}

// One RK4 step for i d(state)/dt = H(t) state acting column-wise on a
// matrix (a state vector is the single-column case). h0/h1/h2 are H at
// t, t + dt/2, t + dt.
void rk4_schrodinger_step(const Mat& h0, const Mat& h1, const Mat& h2,
                          double dt, Mat& y, Mat& k1, Mat& k2, Mat& k3,
                          Mat& k4, Mat& tmp) {
  k1.noalias() = -kI * (h0 * y);
  tmp = y + (0.5 * dt) * k1;
  k2.noalias() = -kI * (h1 * tmp);
  tmp = y + (0.5 * dt) * k2;
  k3.noalias() = -kI * (h1 * tmp);
  tmp = y + dt * k3;
  k4.noalias() = -kI * (h2 * tmp);
  y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Generic driver: steps the matrix state y over [0, tau] and invokes
// `record` at decimated steps (always including both endpoints).
template <typename StepFn, typename RecordFn>
void drive(double tau, const EvolveOptions& opt, long& steps_out,
           const StepFn& step, const RecordFn& record) {
  const long n = step_count_for(tau, opt.dt);
  const double dt = tau / static_cast<double>(n);
  const long stride = sample_stride(n, opt.max_samples);
  record(0.0);
  for (long i = 0; i < n; ++i) {
    const double t = dt * static_cast<double>(i);
    step(t, dt);
    if ((i + 1) % stride == 0 || i + 1 == n) record(dt * (i + 1));
  }
  steps_out = n;
}

}  // namespace

SchrodingerResult evolve_schrodinger(const HamiltonianFn& h,
                                     const StateVector& psi0, double tau,
                                     const EvolveOptions& opt) {
  const int d = h.dim();
  require(psi0.dim() == d, ErrorCode::dimension_mismatch,
          "state dimension does not match the Hamiltonian");
  require(std::abs(psi0.norm() - 1.0) < 1e-9, ErrorCode::invalid_argument,
          "initial state must be normalized");

  SchrodingerResult res;
  Mat y = psi0.amp, k1, k2, k3, k4, tmp;
  Mat h0(d, d), h1(d, d), h2(d, d);
  drive(
      tau, opt, res.step_count,
      [&](double t, double dt) {
        h.eval(t, h0);
        h.eval(t + 0.5 * dt, h1);
        h.eval(t + dt, h2);
        rk4_schrodinger_step(h0, h1, h2, dt, y, k1, k2, k3, k4, tmp);
        res.max_norm_drift =
            std::max(res.max_norm_drift, std::abs(y.norm() - 1.0));
      },
      [&](double t) {
        res.times.push_back(t);
        res.states.emplace_back(y.col(0));
      });
  require(res.max_norm_drift < 1e-6, ErrorCode::accuracy,
          "norm drift exceeded 1e-6; use a smaller dt");
  res.final_state = StateVector{y.col(0), psi0.dims};
  return res;
}

Mat propagator(const HamiltonianFn& h, double tau, const EvolveOptions& opt) {
  const int d = h.dim();
  Mat u = Mat::Identity(d, d), k1, k2, k3, k4, tmp;
  Mat h0(d, d), h1(d, d), h2(d, d);
  long steps = 0;
  drive(
      tau, opt, steps,
      [&](double t, double dt) {
        h.eval(t, h0);
        h.eval(t + 0.5 * dt, h1);
        h.eval(t + dt, h2);
        rk4_schrodinger_step(h0, h1, h2, dt, u, k1, k2, k3, k4, tmp);
      },
      [](double) {});
  const double drift =
      (u.adjoint() * u - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
  require(drift < 1e-7, ErrorCode::accuracy,
          "propagator lost unitarity beyond 1e-7; use a smaller dt");
  return u;
}

LindbladResult evolve_lindblad(const HamiltonianFn& h, const NoiseModel& noise,
                               const DensityMatrix& rho0, double tau,
                               const EvolveOptions& opt) {
  const int d = h.dim();
  require(rho0.dim() == d, ErrorCode::dimension_mismatch,
          "density matrix dimension does not match the Hamiltonian");

  struct Channel {
    double rate;
    Mat a, ad, ada;
  };
  std::vector<Channel> ch;
  for (const auto& [rate, op] : noise) {
    require(rate >= 0.0, ErrorCode::invalid_argument,
            "collapse rates must be non-negative");
    require(op.dim() == d, ErrorCode::dimension_mismatch,
            "collapse operator dimension does not match the Hamiltonian");
    if (rate == 0.0) continue;
    ch.push_back({rate, op.mat, op.mat.adjoint(), op.mat.adjoint() * op.mat});
  }

  Mat ht(d, d);
  Mat work(d, d);
  const auto rhs = [&](double t, const Mat& rho, Mat& out, const Mat& hpre) {
    out.noalias() = kI * (rho * hpre);
    out.noalias() -= kI * (hpre * rho);
    for (const auto& c : ch) {
      work.noalias() = c.a * rho;
      out.noalias() += c.rate * (work * c.ad);
      out.noalias() -= (0.5 * c.rate) * (c.ada * rho);
      out.noalias() -= (0.5 * c.rate) * (rho * c.ada);
    }
    (void)t;
  };

  LindbladResult res;
  Mat rho = rho0.rho;
  Mat k1(d, d), k2(d, d), k3(d, d), k4(d, d), tmp(d, d);
  Mat h0(d, d), h1(d, d), h2(d, d);
  drive(
      tau, opt, res.step_count,
      [&](double t, double dt) {
        h.eval(t, h0);
        h.eval(t + 0.5 * dt, h1);
        h.eval(t + dt, h2);
        rhs(t, rho, k1, h0);
        tmp = rho + (0.5 * dt) * k1;
        rhs(t, tmp, k2, h1);
        tmp = rho + (0.5 * dt) * k2;
        rhs(t, tmp, k3, h1);
        tmp = rho + dt * k3;
        rhs(t, tmp, k4, h2);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rho = 0.5 * (rho + rho.adjoint()).eval();
        res.max_trace_drift =
            std::max(res.max_trace_drift, std::abs(rho.trace().real() - 1.0));
      },
      [&](double t) {
        res.times.push_back(t);
        res.states.push_back(rho);
        res.min_population =
            std::min(res.min_population, rho.diagonal().real().minCoeff());
      });
  require(res.max_trace_drift < 1e-6, ErrorCode::accuracy,
          "trace drift exceeded 1e-6; use a smaller dt");
  require(res.min_population > -1e-6, ErrorCode::nonphysical_state,
          "density matrix developed a negative population beyond -1e-6");
  if (d <= 16) {
    const double min_eig =
        Eigen::SelfAdjointEigenSolver<Mat>(rho).eigenvalues().minCoeff();
    require(min_eig > -1e-6, ErrorCode::nonphysical_state,
            "density matrix lost positivity beyond -1e-6");
  }
  res.final_state = DensityMatrix{rho, rho0.dims};
  return res;
}

DensityMatrix QubitChannel::apply(cd a, cd b) const {
  require(std::abs(std::norm(a) + std::norm(b) - 1.0) < 1e-9,
          ErrorCode::invalid_argument,
          "initial qubit amplitudes must be normalized");
  Mat rho = std::norm(a) * gg + std::norm(b) * ff;
  rho.noalias() += (a * std::conj(b)) * gf;
  rho.noalias() += (std::conj(a) * b) * gf.adjoint();
  return DensityMatrix{rho, dims};
}

QubitChannel evolve_qubit_channel(const HamiltonianFn& h,
                                  const NoiseModel& noise, double tau,
                                  const EvolveOptions& opt) {
  const int d = h.dim();
  require(d >= 3, ErrorCode::invalid_argument,
          "qubit channel needs at least the (g, e, f) ladder");
  const auto evolve_pure = [&](cd a, cd b) {
    CVec amp = CVec::Zero(d);
    amp(kG) = a;
    amp(kF) = b;
    DensityMatrix rho0 = pure_density(make_state(amp, h.dims));
    return evolve_lindblad(h, noise, rho0, tau, opt).final_state.rho;
  };
  const double r = 1.0 / std::sqrt(2.0);
  QubitChannel c;
  c.dims = h.dims;
  c.gg = evolve_pure(1.0, 0.0);
  c.ff = evolve_pure(0.0, 1.0);
  const Mat plus = evolve_pure(r, r);
  const Mat imag = evolve_pure(r, kI * r);
  // |g><f| = P_+ + i P_i - (1 + i)/2 (|g><g| + |f><f|) where P_+ and P_i
  // project onto (|g> + |f>)/sqrt2 and (|g> + i |f>)/sqrt2.
  c.gf = plus + kI * imag - cd(0.5, 0.5) * (c.gg + c.ff);
  return c;
}

QubitChannelSeries evolve_qubit_channel_series(const HamiltonianFn& h,
                                               const NoiseModel& noise,
                                               double tau,
                                               const EvolveOptions& opt) {
  const int d = h.dim();
  require(d >= 3, ErrorCode::invalid_argument,
          "qubit channel needs at least the (g, e, f) ladder");
  const auto evolve_pure = [&](cd a, cd b) {
    CVec amp = CVec::Zero(d);
    amp(kG) = a;
    amp(kF) = b;
    DensityMatrix rho0 = pure_density(make_state(amp, h.dims));
    return evolve_lindblad(h, noise, rho0, tau, opt);
  };
  const double r = 1.0 / std::sqrt(2.0);
  const LindbladResult rgg = evolve_pure(1.0, 0.0);
  const LindbladResult rff = evolve_pure(0.0, 1.0);
  const LindbladResult rpl = evolve_pure(r, r);
  const LindbladResult rim = evolve_pure(r, kI * r);

  QubitChannelSeries series;
  series.times = rgg.times;
  series.channels.reserve(series.times.size());
  for (std::size_t k = 0; k < series.times.size(); ++k) {
    QubitChannel c;
    c.dims = h.dims;
    c.gg = rgg.states[k];
    c.ff = rff.states[k];
    c.gf = rpl.states[k] + kI * rim.states[k] -
           cd(0.5, 0.5) * (c.gg + c.ff);
    series.channels.push_back(std::move(c));
  }
  return series;
}

}  // namespace holo
