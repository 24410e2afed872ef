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

#include "path/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "core/error.hpp"

namespace holo {

namespace {

constexpr double kDegenerateRel = 1e-8;

// Quadratic Lagrange through (x0,y0), (x1,y1), (x2,y2) evaluated at x.
double quad_interp(double x0, double y0, double x1, double y1, double x2,
                   double y2, double x) {
  const double l0 = (x - x1) * (x - x2) / ((x0 - x1) * (x0 - x2));
  const double l1 = (x - x0) * (x - x2) / ((x1 - x0) * (x1 - x2));
  const double l2 = (x - x0) * (x - x1) / ((x2 - x0) * (x2 - x1));
  return l0 * y0 + l1 * y1 + l2 * y2;
}

double fold_to_pi(double x) {
  // Reduce into (-pi, pi].
  double r = std::remainder(x, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

}  // namespace

ControlWaveform inverse_engineer(const Path& path, double omega_max,
                                 int grid_per_segment) {
  require(grid_per_segment >= 16, ErrorCode::invalid_argument,
          "synthesis grid too coarse");
  validate_path(path);

  ControlWaveform wf(path);
  const double tau = path.tau();
  const int m = grid_per_segment;
  double peak = 0.0;

  for (int s = 0; s < 2; ++s) {
    auto& seg = wf.seg_[s];
    seg.t0 = s == 0 ? 0.0 : 0.5 * tau;
    seg.dt = 0.5 * tau / m;

    // The branch angle is known pointwise only through its tangent.
    std::vector<double> a(m + 1), b(m + 1), raw(m + 1);
    double ab_scale = 0.0;
    for (int i = 0; i <= m; ++i) {
      const double t = seg.t0 + i * seg.dt;
      const double chi = path.chi(t);
      a[i] = path.chi_dot(t) * std::cos(chi);
      b[i] = path.phi_dot(t) * std::sin(chi);
      ab_scale = std::max(ab_scale, std::hypot(a[i], b[i]));
      raw[i] = std::atan2(a[i], b[i]);
    }
    require(ab_scale > 0.0, ErrorCode::branch_singularity,
            "path is stationary over an entire segment");
    seg.ab_scale = ab_scale;

    // Unwrap modulo pi along the segment; samples where both tangent
    // components vanish carry no branch information and are filled from
    // their neighbours afterwards.
    const double degenerate = kDegenerateRel * ab_scale;
    seg.psi.assign(m + 1, std::numeric_limits<double>::quiet_NaN());
    std::vector<int> known;
    known.reserve(m + 1);
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i <= m; ++i) {
      if (std::hypot(a[i], b[i]) < degenerate) continue;
      double psi = raw[i];
      if (std::isfinite(prev)) psi += kPi * std::round((prev - psi) / kPi);
      seg.psi[i] = psi;
      prev = psi;
      known.push_back(i);
    }
    require(known.size() >= 3, ErrorCode::branch_singularity,
            "too few usable samples to resolve the drive phase branch");
    for (int i = 0; i <= m; ++i) {
      if (std::isfinite(seg.psi[i])) continue;
      // Three nearest resolved nodes (indices are sorted).
      auto it = std::lower_bound(known.begin(), known.end(), i);
      int k = static_cast<int>(it - known.begin());
      k = std::clamp(k - 1, 0, static_cast<int>(known.size()) - 3);
      const int i0 = known[k], i1 = known[k + 1], i2 = known[k + 2];
      seg.psi[i] = quad_interp(i0, seg.psi[i0], i1, seg.psi[i1], i2,
                               seg.psi[i2], i);
    }

    // Envelope before the sign fold.
    std::vector<double> env(m + 1);
    int imax = 0;
    for (int i = 0; i <= m; ++i) {
      const double t = seg.t0 + i * seg.dt;
      const double sp = std::sin(seg.psi[i]);
      const double cd = path.chi_dot(t);
      if (std::abs(sp) < 1e-12) {
        require(std::abs(cd) < 1e-9 * ab_scale, ErrorCode::branch_singularity,
                "drive envelope diverges: sin(psi) vanished at finite chi_dot");
        env[i] = 0.0;
      } else {
        env[i] = -cd / (2.0 * sp);
      }
      if (std::abs(env[i]) > std::abs(env[imax])) imax = i;
    }
    if (env[imax] < 0.0) {
      // Constant pi fold flips the envelope sign without moving the path.
      for (auto& p : seg.psi) p += kPi;
      for (auto& e : env) e = -e;
    }
    double seg_peak = 0.0;
    for (int i = 0; i <= m; ++i) {
      require(env[i] > -1e-6 * std::abs(env[imax]), ErrorCode::internal,
              "drive envelope changed sign within a segment");
      seg_peak = std::max(seg_peak, env[i]);
    }
    // Parabolic refinement around the sampled maximum.
    if (imax > 0 && imax < m) {
      const double y0 = env[imax - 1], y1 = env[imax], y2 = env[imax + 1];
      const double denom = y0 - 2.0 * y1 + y2;
      if (denom < 0.0) {
        const double d = 0.5 * (y0 - y2) / denom;
        if (std::abs(d) <= 1.0)
          seg_peak = std::max(seg_peak,
                              y1 - 0.25 * (y0 - y2) * d);
      }
    }
    peak = std::max(peak, seg_peak);

    // Deterministic overall 2 pi branch: phi1 at the segment start lands
    // in (-pi, pi].
    const double phi1_start = seg.psi[0] - path.phi(seg.t0);
    seg.phi1_shift = fold_to_pi(phi1_start) - phi1_start;
  }

  wf.peak_ = peak;
  if (omega_max > 0.0 && peak > omega_max * (1.0 + 1e-9)) {
    std::ostringstream msg;
    msg << "drive envelope peak " << peak << " rad/ns exceeds the limit "
        << omega_max << " rad/ns; the loop needs tau >= "
        << tau * peak / omega_max << " ns";
    fail(ErrorCode::amplitude_exceeded, msg.str());
  }
  return wf;
}

double ControlWaveform::psi_at(double t, const Segment& seg) const {
  const int m = static_cast<int>(seg.psi.size()) - 1;
  const double u = (t - seg.t0) / seg.dt;
  const int j = std::clamp(static_cast<int>(std::lround(u)), 1, m - 1);
  const double t0 = seg.t0 + (j - 1) * seg.dt;
  const double t1 = t0 + seg.dt, t2 = t1 + seg.dt;
  const double guess = quad_interp(t0, seg.psi[j - 1], t1, seg.psi[j], t2,
                                   seg.psi[j + 1], t);
  // Snap to the exact tangent when the sample carries branch information.
  const double chi = path_.chi(t);
  const double a = path_.chi_dot(t) * std::cos(chi);
  const double b = path_.phi_dot(t) * std::sin(chi);
  if (std::hypot(a, b) < kDegenerateRel * seg.ab_scale) return guess;
  const double raw = std::atan2(a, b);
  return raw + kPi * std::round((guess - raw) / kPi);
}

WaveformSample ControlWaveform::at(double t) const {
  const auto& seg = seg_[path_.segment_of(t)];
  const double psi = psi_at(t, seg);
  const double sp = std::sin(psi);
  const double cd = path_.chi_dot(t);
  double om = 0.0;
  if (std::abs(sp) < 1e-12) {
    require(std::abs(cd) < 1e-9 * seg.ab_scale, ErrorCode::branch_singularity,
            "drive envelope diverges: sin(psi) vanished at finite chi_dot");
  } else {
    om = scale_ * std::max(0.0, -cd / (2.0 * sp));
  }
  const double p1 = psi - path_.phi(t) + seg.phi1_shift;
  return {t, om, p1, path_.spec().holonomy.phi - p1 - kPi};
}

ControlWaveform ControlWaveform::scaled(double factor) const {
  require(std::isfinite(factor) && factor > 0.0, ErrorCode::invalid_argument,
          "amplitude scale factor must be positive");
  ControlWaveform out = *this;
  out.scale_ *= factor;
  return out;
}

double ControlWaveform::min_tau(double omega_max) const {
  require(omega_max > 0.0, ErrorCode::invalid_argument,
          "amplitude limit must be positive");
  return tau() * peak_ / omega_max;
}

std::vector<WaveformSample> ControlWaveform::samples() const {
  std::vector<WaveformSample> rows;
  const int m = static_cast<int>(seg_[0].psi.size()) - 1;
  rows.reserve(2 * m + 1);
  for (int s = 0; s < 2; ++s) {
    const auto& seg = seg_[s];
    // The mid-loop node belongs to the second segment.
    const int last = s == 0 ? m - 1 : m;
    for (int i = 0; i <= last; ++i) rows.push_back(at(seg.t0 + i * seg.dt));
  }
  return rows;
}

double tau_for_peak(PathSpec spec, double omega_max) {
  require(omega_max > 0.0, ErrorCode::invalid_argument,
          "amplitude limit must be positive");
  // Peak scales as 1/tau at fixed shape: synthesize at unit duration.
  spec.tau = 1.0;
  const ControlWaveform unit = inverse_engineer(Path(spec));
  return unit.peak_omega() / omega_max;
}

std::array<double, 2> inversion_residual(const ControlWaveform& wf) {
  const Path& path = wf.path();
  double r1 = 0.0, r2 = 0.0;
  for (const auto& row : wf.samples()) {
    const double t = row.t_ns;
    const double chi = path.chi(t);
    const double psi = row.phi1 + path.phi(t);
    r1 = std::max(r1, std::abs(path.chi_dot(t) +
                               2.0 * row.omega * std::sin(psi)));
    const double sc = std::sin(chi);
    if (std::abs(sc) < 1e-6) continue;  // cot(chi) overflow near the poles
    const double cot = std::cos(chi) / sc;
    r2 = std::max(r2, std::abs(path.phi_dot(t) +
                               2.0 * row.omega * cot * std::cos(psi)));
  }
  return {r1, r2};
}

}  // namespace holo
