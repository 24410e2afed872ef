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

#include "model/stark.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace holo {

namespace {

// The three bare states of the effective block, in fixed order.
std::array<int, 3> block_indices() {
  return {two_qubit_index(2, 0, 0),   // fgg
          two_qubit_index(0, 1, 0),   // geg
          two_qubit_index(0, 0, 2)};  // ggf
}

struct BlockResult {
  Mat h_eff;  // 3x3 in the bare {fgg, geg, ggf} basis
};

// Matches one eigenpair per bare state by largest overlap (greedy; ties go
// to the lower eigenvalue) and restores the bare basis by Loewdin
// orthogonalization of the projected eigenvectors.
BlockResult effective_block(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  require(es.info() == Eigen::Success, ErrorCode::internal,
          "eigensolver failed");
  const auto idx = block_indices();

  Eigen::MatrixXd overlap(3, 64);
  for (int s = 0; s < 3; ++s)
    for (int i = 0; i < 64; ++i)
      overlap(s, i) = std::norm(es.eigenvectors()(idx[s], i));

  std::array<int, 3> pick = {-1, -1, -1};
  std::array<bool, 64> used{};
  for (int round = 0; round < 3; ++round) {
    int best_s = -1, best_i = -1;
    double best = -1.0;
    for (int s = 0; s < 3; ++s) {
      if (pick[s] >= 0) continue;
      for (int i = 0; i < 64; ++i) {
        if (used[i]) continue;
        if (overlap(s, i) > best) {
          best = overlap(s, i);
          best_s = s;
          best_i = i;
        }
      }
    }
    pick[best_s] = best_i;
    used[best_i] = true;
  }

  Mat m(3, 3);  // projections <bare_s | v_j>
  Eigen::Vector3cd lambda;
  for (int j = 0; j < 3; ++j) {
    lambda(j) = es.eigenvalues()(pick[j]);
    for (int s = 0; s < 3; ++s) m(s, j) = es.eigenvectors()(idx[s], pick[j]);
  }
  Eigen::SelfAdjointEigenSolver<Mat> gram(m.adjoint() * m);
  require(gram.eigenvalues().minCoeff() > 1e-6, ErrorCode::search_failed,
          "matched eigenvectors barely overlap the bare block");
  const Mat w = m * gram.operatorInverseSqrt();
  BlockResult res;
  res.h_eff = w * lambda.asDiagonal() * w.adjoint();
  return res;
}

}  // namespace

DressedTriple dressed_levels(const TwoQubitDeviceParams& dev, double omega1,
                             double omega2, double shift) {
  Mat h = two_qubit_static(dev).mat;
  for (int l = 0; l < 4; ++l)
    for (int a = 0; a < 4; ++a)
      for (int s = 0; s < 4; ++s) {
        const int i = two_qubit_index(l, a, s);
        h(i, i) -= shift * double(l + a + s);
      }
  const Mat b1 = two_qubit_lowering(0).mat;
  const Mat b2 = two_qubit_lowering(2).mat;
  h += 0.5 * omega1 * (b1 + b1.adjoint());
  h += 0.5 * omega2 * (b2 + b2.adjoint());

  const BlockResult block = effective_block(h);
  const CVec b = (CVec(3) << 1.0 / std::sqrt(2.0), 0.0,
                  1.0 / std::sqrt(2.0))
                     .finished();
  const CVec e = (CVec(3) << 0.0, 1.0, 0.0).finished();
  DressedTriple out;
  out.eta_b = (b.adjoint() * block.h_eff * b)(0).real();
  out.eta_e = (e.adjoint() * block.h_eff * e)(0).real();
  out.coupling = std::abs((b.adjoint() * block.h_eff * e)(0));
  return out;
}

double stark_mismatch(const TwoQubitDeviceParams& dev, double omega,
                      double shift) {
  const DressedTriple t = dressed_levels(dev, omega, omega, shift);
  return t.eta_b - t.eta_e;
}

StarkCurve::StarkCurve(std::vector<double> omega, std::vector<double> delta_s,
                       std::vector<double> g_eff, double baseline)
    : omega_(std::move(omega)),
      delta_s_(std::move(delta_s)),
      g_eff_(std::move(g_eff)),
      baseline_(baseline) {
  require(omega_.size() >= 4 && omega_.size() == delta_s_.size() &&
              omega_.size() == g_eff_.size(),
          ErrorCode::invalid_argument,
          "curve needs >= 4 equally sized columns");
  require(omega_.front() == 0.0, ErrorCode::invalid_argument,
          "curve must start at zero drive");
  require(std::abs(delta_s_.front()) < 1e-9, ErrorCode::invalid_argument,
          "shift column must be relative to the zero-drive baseline");
  for (size_t i = 1; i < omega_.size(); ++i) {
    require(omega_[i] > omega_[i - 1], ErrorCode::invalid_argument,
            "drive grid must increase strictly");
    require(g_eff_[i] > g_eff_[i - 1], ErrorCode::search_failed,
            "bright coupling is not invertible on this grid");
  }
  shift_of_omega_ = Pchip(omega_, delta_s_);
  omega_of_g_ = Pchip(g_eff_, omega_);
}

double StarkCurve::delta_s_at(double omega) const {
  require(!omega_.empty(), ErrorCode::invalid_argument, "empty curve");
  require(omega >= -1e-12 && omega <= omega_.back() + 1e-9,
          ErrorCode::amplitude_exceeded,
          "drive amplitude outside the calibrated range");
  return shift_of_omega_(omega);
}

double StarkCurve::omega_for_coupling(double g) const {
  require(!omega_.empty(), ErrorCode::invalid_argument, "empty curve");
  require(g >= 0.0, ErrorCode::invalid_argument,
          "coupling must be non-negative");
  if (g <= g_eff_.front()) return omega_.front();
  require(g <= g_eff_.back() * (1.0 + 1e-12), ErrorCode::amplitude_exceeded,
          "requested coupling exceeds the calibrated maximum");
  return omega_of_g_(g);
}

double StarkCurve::max_coupling() const {
  require(!g_eff_.empty(), ErrorCode::invalid_argument, "empty curve");
  return g_eff_.back();
}

StarkCurve stark_compensation_curve(const TwoQubitDeviceParams& dev,
                                    const std::vector<double>& grid,
                                    int jobs) {
  validate_two_qubit_device(dev);
  require(grid.size() >= 4, ErrorCode::invalid_argument,
          "calibration grid needs at least 4 points");
  require(grid.front() == 0.0, ErrorCode::invalid_argument,
          "calibration grid must start at zero drive");
  for (size_t i = 1; i < grid.size(); ++i)
    require(grid[i] > grid[i - 1], ErrorCode::invalid_argument,
            "calibration grid must increase strictly");

  const int n = static_cast<int>(grid.size());
  std::vector<double> root(n), coupling(n);
  // Static dressing sets the zero-drive scale of the root; the drive adds
  // of order omega^2 / delta.
  const double w0 =
      8.0 * (dev.g1 * dev.g1 + dev.g2 * dev.g2) *
      (1.0 / dev.delta + 1.0 / (dev.delta - dev.qubit1.alpha));
  parallel_for(n, jobs, [&](int i) {
    const double om = grid[i];
    const auto f = [&](double d) { return stark_mismatch(dev, om, d); };
    const double w = w0 + om * om / dev.delta;
    double lo = -w, hi = w;
    double flo = f(lo), fhi = f(hi);
    expand_bracket(f, lo, hi, flo, fhi);
    root[i] = bisect(f, lo, hi, 1e-12, 1e-10);
    coupling[i] =
        dressed_levels(dev, om, om, root[i]).coupling / std::sqrt(2.0);
  });

  std::vector<double> delta_s(n), g_eff(n);
  for (int i = 0; i < n; ++i) {
    delta_s[i] = root[i] - root[0];
    g_eff[i] = coupling[i];
  }
  StarkCurve curve(grid, delta_s, g_eff, root[0]);
  // Post-check the calibration: the compensated mismatch must be tiny.
  for (int i = 0; i < n; ++i)
    require(std::abs(stark_mismatch(dev, grid[i],
                                    curve.baseline() + curve.delta_s()[i])) <
                1e-6,
            ErrorCode::search_failed, "compensation root check failed");
  return curve;
}

}  // namespace holo
