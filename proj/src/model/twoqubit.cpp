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

#include "model/twoqubit.hpp"

#include <cmath>
#include <vector>

#include "core/error.hpp"

namespace holo {

namespace {

constexpr int kLevels = 4;
const std::vector<int> kDims = {kLevels, kLevels, kLevels};

// Nonzero entries of a lowering operator embedded in the 64-dim space.
struct LoweringTriplet {
  int row, col;
  double value;  // sqrt of the lowered occupation
};

std::vector<LoweringTriplet> lowering_triplets(int subsystem) {
  require(subsystem >= 0 && subsystem < 3, ErrorCode::invalid_argument,
          "subsystem index must be 0, 1 or 2");
  std::vector<LoweringTriplet> t;
  int idx[3];
  for (idx[0] = 0; idx[0] < kLevels; ++idx[0])
    for (idx[1] = 0; idx[1] < kLevels; ++idx[1])
      for (idx[2] = 0; idx[2] < kLevels; ++idx[2]) {
        if (idx[subsystem] == 0) continue;
        int src[3] = {idx[0], idx[1], idx[2]};
        int dst[3] = {idx[0], idx[1], idx[2]};
        dst[subsystem] -= 1;
        t.push_back({two_qubit_index(dst[0], dst[1], dst[2]),
                     two_qubit_index(src[0], src[1], src[2]),
                     std::sqrt(double(idx[subsystem]))});
      }
  return t;
}

double bare_level(double detuning, double alpha, int occupation) {
  return detuning * occupation -
         0.5 * alpha * (occupation - 1) * occupation;
}

}  // namespace

TwoQubitDeviceParams reference_two_qubit_device() {
  TwoQubitDeviceParams dev;
  dev.qubit1.alpha = 2.513274122871834;      // 2 pi x 0.40 GHz
  dev.qubit2.alpha = 2.513274122871834;
  dev.auxiliary.alpha = 2.324778563656447;   // 2 pi x 0.37 GHz
  dev.qubit1.gamma1 = dev.qubit1.gamma2 = 0.0;
  dev.qubit2.gamma1 = dev.qubit2.gamma2 = 0.0;
  dev.auxiliary.gamma1 = dev.auxiliary.gamma2 = 0.0;
  dev.g1 = dev.g2 = 0.408407044966673;       // 2 pi x 65 MHz
  dev.delta = 6.283185307179586;             // 2 pi x 1 GHz
  dev.delta_k = dev.qubit1.alpha - dev.delta;
  dev.delta_a = 2.0 * dev.delta_k - dev.qubit1.alpha;
  return dev;
}

void validate_two_qubit_device(const TwoQubitDeviceParams& dev) {
  require(dev.qubit1.alpha > 0.0 && dev.auxiliary.alpha > 0.0,
          ErrorCode::invalid_argument, "anharmonicities must be positive");
  require(std::abs(dev.qubit1.alpha - dev.qubit2.alpha) < 1e-12,
          ErrorCode::invalid_argument,
          "the qubits must share one anharmonicity");
  require(dev.delta > dev.qubit1.alpha, ErrorCode::invalid_argument,
          "detuning split must exceed the qubit anharmonicity");
  require(dev.g1 > 0.0 && dev.g2 > 0.0, ErrorCode::invalid_argument,
          "exchange couplings must be positive");
  require(std::abs(dev.delta_k - (dev.qubit1.alpha - dev.delta)) < 1e-9,
          ErrorCode::invalid_argument,
          "delta_k must equal alpha_k - delta");
  require(std::abs(dev.delta_a - (2.0 * dev.delta_k - dev.qubit1.alpha)) <
              1e-9,
          ErrorCode::invalid_argument,
          "two-photon resonance delta_a = 2 delta_k - alpha_k violated");
}

int two_qubit_index(int l, int m, int s) {
  require(l >= 0 && l < kLevels && m >= 0 && m < kLevels && s >= 0 &&
              s < kLevels,
          ErrorCode::invalid_argument, "level index out of range");
  return (l * kLevels + m) * kLevels + s;
}

Operator two_qubit_lowering(int subsystem) {
  Mat m = Mat::Zero(64, 64);
  for (const auto& t : lowering_triplets(subsystem))
    m(t.row, t.col) = t.value;
  return Operator{std::move(m), kDims};
}

Operator two_qubit_number(int subsystem) {
  require(subsystem >= 0 && subsystem < 3, ErrorCode::invalid_argument,
          "subsystem index must be 0, 1 or 2");
  Mat m = Mat::Zero(64, 64);
  for (int l = 0; l < kLevels; ++l)
    for (int a = 0; a < kLevels; ++a)
      for (int s = 0; s < kLevels; ++s) {
        const int occ[3] = {l, a, s};
        const int i = two_qubit_index(l, a, s);
        m(i, i) = double(occ[subsystem]);
      }
  return Operator{std::move(m), kDims};
}

Operator two_qubit_static(const TwoQubitDeviceParams& dev) {
  validate_two_qubit_device(dev);
  Mat h = Mat::Zero(64, 64);
  for (int l = 0; l < kLevels; ++l)
    for (int a = 0; a < kLevels; ++a)
      for (int s = 0; s < kLevels; ++s) {
        const int i = two_qubit_index(l, a, s);
        h(i, i) = bare_level(dev.delta_k, dev.qubit1.alpha, l) +
                  bare_level(dev.delta_a, dev.auxiliary.alpha, a) +
                  bare_level(dev.delta_k, dev.qubit2.alpha, s);
      }
  // g_k (a b_k^dag + b_k a^dag): aux lowering times qubit raising.
  const auto add_exchange = [&](int qubit, double g) {
    const auto aux = lowering_triplets(1);
    Mat bq = Mat::Zero(64, 64);
    for (const auto& t : lowering_triplets(qubit))
      bq(t.row, t.col) = t.value;
    Mat am = Mat::Zero(64, 64);
    for (const auto& t : aux) am(t.row, t.col) = t.value;
    h += g * (am * bq.adjoint() + bq * am.adjoint());
  };
  add_exchange(0, dev.g1);
  add_exchange(2, dev.g2);
  return Operator{std::move(h), kDims};
}

HamiltonianFn two_qubit_hamiltonian(const TwoQubitDeviceParams& dev,
                                    const TwoQubitDrives& drives) {
  require(drives.omega1 && drives.phase1 && drives.omega2 && drives.phase2 &&
              drives.shift,
          ErrorCode::invalid_argument, "incomplete drive schedule");
  const Mat h_static = two_qubit_static(dev).mat;
  Eigen::VectorXd excitation(64);
  for (int l = 0; l < kLevels; ++l)
    for (int a = 0; a < kLevels; ++a)
      for (int s = 0; s < kLevels; ++s)
        excitation(two_qubit_index(l, a, s)) = double(l + a + s);
  const auto b1 = lowering_triplets(0);
  const auto b2 = lowering_triplets(2);

  HamiltonianFn h;
  h.dims = kDims;
  h.eval = [=](double t, Mat& out) {
    out = h_static;
    out.diagonal() -= drives.shift(t) * excitation;
    const cd c1 = 0.5 * drives.omega1(t) *
                  std::exp(kI * drives.phase1(t));
    const cd c2 = 0.5 * drives.omega2(t) *
                  std::exp(kI * drives.phase2(t));
    // (omega/2) e^{i phase} b + h.c.
    for (const auto& tr : b1) {
      out(tr.row, tr.col) += c1 * tr.value;
      out(tr.col, tr.row) += std::conj(c1) * tr.value;
    }
    for (const auto& tr : b2) {
      out(tr.row, tr.col) += c2 * tr.value;
      out(tr.col, tr.row) += std::conj(c2) * tr.value;
    }
  };
  return h;
}

Mat dressed_register_basis(const TwoQubitDeviceParams& dev,
                           const std::vector<std::array<int, 3>>& labels) {
  const int k = static_cast<int>(labels.size());
  require(k > 0, ErrorCode::invalid_argument, "no register labels given");
  Eigen::SelfAdjointEigenSolver<Mat> es(two_qubit_static(dev).mat);
  const Mat& v = es.eigenvectors();
  const int dim = static_cast<int>(v.rows());

  std::vector<int> rows(k);
  for (int s = 0; s < k; ++s)
    rows[s] = two_qubit_index(labels[s][0], labels[s][1], labels[s][2]);

  // Greedy global matching, best overlap first; ties fall to the lower
  // eigenvalue index.
  std::vector<int> pick(k, -1);
  std::vector<bool> used(dim, false);
  for (int round = 0; round < k; ++round) {
    int best_s = -1, best_i = -1;
    double best = -1.0;
    for (int s = 0; s < k; ++s) {
      if (pick[s] >= 0) continue;
      for (int i = 0; i < dim; ++i) {
        if (used[i]) continue;
        const double w = std::norm(v(rows[s], i));
        if (w > best) {
          best = w;
          best_s = s;
          best_i = i;
        }
      }
    }
    pick[best_s] = best_i;
    used[best_i] = true;
  }

  Mat span(dim, k);
  Mat m(k, k);  // m(s, j) = <bare_s | v_pick_j>
  for (int j = 0; j < k; ++j) {
    span.col(j) = v.col(pick[j]);
    for (int s = 0; s < k; ++s) m(s, j) = v(rows[s], pick[j]);
  }
  Eigen::SelfAdjointEigenSolver<Mat> gram(m * m.adjoint());
  require(gram.eigenvalues().minCoeff() > 1e-6, ErrorCode::search_failed,
          "matched eigenvectors barely overlap the register labels");
  // Columns d_s = span m^dag (m m^dag)^{-1/2}: orthonormal, and the overlap
  // matrix <bare_s|d_s'> = (m m^dag)^{1/2} is Hermitian positive, so each
  // state leans on its own label with a real positive amplitude.
  return span * m.adjoint() * gram.operatorInverseSqrt();
}

Operator qubit_aux_bare(const TwoQubitDeviceParams& dev, int which) {
  require(which == 1 || which == 2, ErrorCode::invalid_argument,
          "pair index must be 1 or 2");
  const TransmonParams& q = which == 1 ? dev.qubit1 : dev.qubit2;
  Mat h = Mat::Zero(16, 16);
  for (int l = 0; l < kLevels; ++l)
    for (int a = 0; a < kLevels; ++a)
      h(l * kLevels + a, l * kLevels + a) =
          bare_level(dev.delta_k, q.alpha, l) +
          bare_level(dev.delta_a, dev.auxiliary.alpha, a);
  return Operator{std::move(h), {kLevels, kLevels}};
}

Operator qubit_aux_exchange(const TwoQubitDeviceParams& dev, int which) {
  require(which == 1 || which == 2, ErrorCode::invalid_argument,
          "pair index must be 1 or 2");
  const double g = which == 1 ? dev.g1 : dev.g2;
  const Operator b = tensor(annihilation_op(kLevels), identity_op(kLevels));
  const Operator a = tensor(identity_op(kLevels), annihilation_op(kLevels));
  Mat h = g * (a.mat * b.mat.adjoint() + b.mat * a.mat.adjoint());
  return Operator{std::move(h), {kLevels, kLevels}};
}

Operator qubit_aux_drive(double omega, double phase) {
  const Operator b = tensor(annihilation_op(kLevels), identity_op(kLevels));
  const cd c = 0.5 * omega * std::exp(kI * phase);
  Mat h = c * b.mat + std::conj(c) * b.mat.adjoint();
  return Operator{std::move(h), {kLevels, kLevels}};
}

}  // namespace holo
