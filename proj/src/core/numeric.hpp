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

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace holo {

// Adaptive Gauss-Kronrod (15/7) quadrature to an absolute tolerance.
// Throws ErrorCode::quadrature if the interval budget is exhausted before
// the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abstol = 1e-10, int max_intervals = 4000);
std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abstol = 1e-10, int max_intervals = 4000);

// Monotonicity-preserving piecewise cubic interpolant (Fritsch-Carlson).
// x must be strictly increasing. Evaluation clamps to the end intervals.
class Pchip {
 public:
  Pchip() = default;
  Pchip(std::vector<double> x, std::vector<double> y);
  double operator()(double xq) const;
  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }
  double y_front() const { return y_.front(); }
  double y_back() const { return y_.back(); }

 private:
  std::vector<double> x_, y_, d_;
};

// Bisection on a bracketing interval; f(lo) and f(hi) must have opposite
// signs. Converges to |f| <= ftol or width <= xtol.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol, double ftol, int max_iter = 200);

// Expands [lo, hi] geometrically about its center until f changes sign,
// at most max_expand doublings. Throws ErrorCode::search_failed otherwise.
void expand_bracket(const std::function<double(double)>& f, double& lo,
                    double& hi, double& flo, double& fhi, int max_expand = 10);

// Cumulative integral of a smooth derivative on a uniform grid: returns
// values at the n+1 nodes of [a, b] using per-cell 7-point Gauss-Legendre.
std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        double a, double b, int cells);

}  // namespace holo
