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

#include "core/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "core/error.hpp"

namespace holo {
namespace {

// Kronrod 15-point nodes/weights on [-1, 1] and the embedded Gauss-7 weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
void gk15(const std::function<T(double)>& f, double a, double b, T& result,
          double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  T fc = f(c);
  T resg = kWg[3] * fc;
  T resk = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    double dx = h * kXgk[j];
    T f1 = f(c - dx), f2 = f(c + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  result = resk * h;
  err = std::abs(resk - resg) * std::abs(h);
}

struct Piece {
  double a, b, err;
  bool operator<(const Piece& o) const { return err < o.err; }
};

template <typename T>
T adaptive(const std::function<T(double)>& f, double a, double b,
           double abstol, int max_intervals) {
  if (a == b) return T{};
  T total;
  double err0;
  gk15(f, a, b, total, err0);
  std::priority_queue<Piece> q;
  q.push({a, b, err0});
  double err_sum = err0;
  std::vector<std::pair<std::pair<double, double>, T>> done;
  int used = 1;
  while (err_sum > abstol) {
    require(used < max_intervals, ErrorCode::quadrature,
            "adaptive quadrature did not converge");
    Piece p = q.top();
    q.pop();
    err_sum -= p.err;
    double m = 0.5 * (p.a + p.b);
    T r1, r2;
    double e1, e2;
    gk15(f, p.a, m, r1, e1);
    gk15(f, m, p.b, r2, e2);
    q.push({p.a, m, e1});
    q.push({m, p.b, e2});
    err_sum += e1 + e2;
    ++used;
  }
  // Re-sum deterministically in interval order to keep bitwise stability
  // independent of the heap's arrival order.
  std::vector<Piece> pieces;
  while (!q.empty()) {
    pieces.push_back(q.top());
    q.pop();
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& x, const Piece& y) { return x.a < y.a; });
  T sum{};
  for (const Piece& p : pieces) {
    T r;
    double e;
    gk15(f, p.a, p.b, r, e);
    sum += r;
  }
  return sum;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abstol, int max_intervals) {
  return adaptive<double>(f, a, b, abstol, max_intervals);
}

std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abstol, int max_intervals) {
  return adaptive<std::complex<double>>(f, a, b, abstol, max_intervals);
}

Pchip::Pchip(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  require(x_.size() == y_.size() && x_.size() >= 2,
          ErrorCode::invalid_argument, "pchip needs matching arrays, n >= 2");
  const size_t n = x_.size();
  for (size_t i = 1; i < n; ++i)
    require(x_[i] > x_[i - 1], ErrorCode::invalid_argument,
            "pchip abscissae must increase strictly");
  std::vector<double> h(n - 1), s(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    s[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  d_.assign(n, 0.0);
  for (size_t i = 1; i + 1 < n; ++i) {
    if (s[i - 1] * s[i] > 0.0) {
      double w1 = 2.0 * h[i] + h[i - 1];
      double w2 = h[i] + 2.0 * h[i - 1];
      d_[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
    }
  }
  auto end_slope = [](double h0, double h1, double s0, double s1) {
    double d = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    if (d * s0 <= 0.0) return 0.0;
    if (s0 * s1 < 0.0 && std::abs(d) > 3.0 * std::abs(s0)) return 3.0 * s0;
    return d;
  };
  if (n == 2) {
    d_[0] = d_[1] = s[0];
  } else {
    d_[0] = end_slope(h[0], h[1], s[0], s[1]);
    d_[n - 1] = end_slope(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
  }
}

double Pchip::operator()(double xq) const {
  size_t n = x_.size();
  size_t i =
      std::upper_bound(x_.begin(), x_.end(), xq) - x_.begin();
  if (i == 0) i = 1;
  if (i >= n) i = n - 1;
  const size_t k = i - 1;
  const double h = x_[k + 1] - x_[k];
  const double t = (xq - x_[k]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return y_[k] * (2 * t3 - 3 * t2 + 1) + h * d_[k] * (t3 - 2 * t2 + t) +
         y_[k + 1] * (-2 * t3 + 3 * t2) + h * d_[k + 1] * (t3 - t2);
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol, double ftol, int max_iter) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  require(flo * fhi < 0.0, ErrorCode::search_failed,
          "bisection bracket does not change sign");
  double mid = 0.5 * (lo + hi), fmid = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    mid = 0.5 * (lo + hi);
    fmid = f(mid);
    if (std::abs(fmid) <= ftol || (hi - lo) <= xtol) return mid;
    if (flo * fmid <= 0.0) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return mid;
}

void expand_bracket(const std::function<double(double)>& f, double& lo,
                    double& hi, double& flo, double& fhi, int max_expand) {
  flo = f(lo);
  fhi = f(hi);
  double c = 0.5 * (lo + hi);
  for (int k = 0; k < max_expand; ++k) {
    if (flo * fhi <= 0.0) return;
    double half = (hi - lo);
    lo = c - half;
    hi = c + half;
    flo = f(lo);
    fhi = f(hi);
  }
  require(flo * fhi <= 0.0, ErrorCode::search_failed,
          "bracket expansion exhausted without a sign change");
}

std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        double a, double b, int cells) {
  // 7-point Gauss-Legendre per cell; degree-13 exactness makes the nodal
  // values effectively exact for smooth integrands at these cell counts.
  static const double gx[7] = {-0.949107912342758524526189684047851,
                               -0.741531185599394439863864773280788,
                               -0.405845151377397166906606412076961,
                               0.0,
                               0.405845151377397166906606412076961,
                               0.741531185599394439863864773280788,
                               0.949107912342758524526189684047851};
  static const double gw[7] = {0.129484966168869693270611432679082,
                               0.279705391489276667901467771423780,
                               0.381830050505118944950369775488975,
                               0.417959183673469387755102040816327,
                               0.381830050505118944950369775488975,
                               0.279705391489276667901467771423780,
                               0.129484966168869693270611432679082};
  require(cells >= 1, ErrorCode::invalid_argument, "need at least one cell");
  std::vector<double> out(cells + 1, 0.0);
  const double h = (b - a) / cells;
  for (int c = 0; c < cells; ++c) {
    const double x0 = a + c * h, xc = x0 + 0.5 * h;
    double acc = 0.0;
    for (int j = 0; j < 7; ++j) acc += gw[j] * f(xc + 0.5 * h * gx[j]);
    out[c + 1] = out[c] + 0.5 * h * acc;
  }
  return out;
}

}  // namespace holo
