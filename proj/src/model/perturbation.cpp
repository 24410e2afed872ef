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

#include "model/perturbation.hpp"

#include <cmath>
#include <set>

#include "core/error.hpp"

namespace holo {

PerturbationResult second_order_perturbation(const Operator& h0,
                                             const Operator& hp,
                                             const std::vector<int>& subspace) {
  const int d = h0.dim();
  require(hp.dim() == d, ErrorCode::dimension_mismatch,
          "perturbation dimension does not match h0");
  Mat off = h0.mat;
  off.diagonal().setZero();
  require(off.cwiseAbs().maxCoeff() < 1e-12, ErrorCode::invalid_argument,
          "h0 must be diagonal");
  require((hp.mat - hp.mat.adjoint().eval()).cwiseAbs().maxCoeff() < 1e-12,
          ErrorCode::invalid_argument, "perturbation must be Hermitian");

  const int s = static_cast<int>(subspace.size());
  require(s >= 1 && s <= d, ErrorCode::invalid_argument,
          "subspace must be non-empty");
  std::set<int> seen;
  for (int idx : subspace) {
    require(idx >= 0 && idx < d, ErrorCode::invalid_argument,
            "subspace index out of range");
    require(seen.insert(idx).second, ErrorCode::invalid_argument,
            "duplicate subspace index");
  }

  double eps = 0.0;
  for (int idx : subspace) eps += h0.mat(idx, idx).real() / s;
  for (int idx : subspace)
    require(std::abs(h0.mat(idx, idx).real() - eps) < 1e-10,
            ErrorCode::invalid_argument,
            "subspace is not degenerate within 1e-10");

  PerturbationResult res;
  res.subspace_energy = eps;
  res.effective = eps * Mat::Identity(s, s);

  Mat first(s, s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) first(a, b) = hp.mat(subspace[a], subspace[b]);
  res.first_order_norm = first.norm();
  res.effective += first;

  for (int l = 0; l < d; ++l) {
    if (seen.count(l)) continue;
    const double gap = eps - h0.mat(l, l).real();
    bool touches = false;
    for (int a = 0; a < s && !touches; ++a)
      touches = std::abs(hp.mat(subspace[a], l)) > 0.0;
    if (!touches) continue;
    require(std::abs(gap) > 1e-8, ErrorCode::invalid_argument,
            "environment level degenerate with the subspace");
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        res.effective(a, b) +=
            hp.mat(subspace[a], l) * hp.mat(l, subspace[b]) / gap;
  }
  return res;
}

EffectiveCouplings effective_couplings_closed_form(double g, double omega,
                                                   double delta,
                                                   double alpha) {
  require(std::abs(delta) > 1e-12 && std::abs(delta - alpha) > 1e-12 &&
              std::abs(delta + alpha) > 1e-12,
          ErrorCode::invalid_argument,
          "detuning split coincides with a singular point (0 or +-alpha)");
  EffectiveCouplings c;
  c.eta_ge = omega * omega / (4.0 * (delta - alpha)) - g * g / delta;
  c.eta_fg = 3.0 * omega * omega / (4.0 * (delta + alpha)) +
             2.0 * g * g / (delta - alpha) - omega * omega / (2.0 * delta);
  c.g_pair =
      g * omega * alpha / (std::sqrt(2.0) * delta * (delta - alpha));
  return c;
}

}  // namespace holo
