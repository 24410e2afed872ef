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

// Dense states and operators over anharmonic-ladder subsystems. Levels are
// indexed g=0, e=1, f=2, h=3. Values are immutable: every operation returns
// a new object and never mutates its inputs.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "core/error.hpp"

namespace holo {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr cd kI{0.0, 1.0};

// Exact-equality comparison tolerance for value semantics.
inline constexpr double kEqTol = 1e-10;
// Normalization / trace-one tolerance on construction.
inline constexpr double kNormTol = 1e-8;

enum Level : int { kG = 0, kE = 1, kF = 2, kH = 3 };

int total_dim(const std::vector<int>& dims);

struct StateVector {
  CVec amp;
  std::vector<int> dims;

  double norm() const { return amp.norm(); }
  int dim() const { return static_cast<int>(amp.size()); }
};

struct DensityMatrix {
  Mat rho;
  std::vector<int> dims;

  double trace() const { return rho.trace().real(); }
  int dim() const { return static_cast<int>(rho.rows()); }
};

struct Operator {
  Mat mat;
  std::vector<int> dims;

  int dim() const { return static_cast<int>(mat.rows()); }
};

// Construction. make_state / make_density validate shape and normalization
// (norm within kNormTol of 1; rho Hermitian within kEqTol, trace within
// kNormTol of 1) and fail with nonphysical_state otherwise.
StateVector make_state(CVec amp, std::vector<int> dims);
DensityMatrix make_density(Mat rho, std::vector<int> dims);
Operator make_operator(Mat mat, std::vector<int> dims);

// |indices[0]> x |indices[1]> x ... in the given subsystem dimensions.
StateVector basis_state(const std::vector<int>& dims,
                        const std::vector<int>& indices);
DensityMatrix pure_density(const StateVector& psi);

// Ladder lowering operator, sqrt(m) on the superdiagonal; levels >= 2.
Operator annihilation_op(int levels);
// diag(0, 1, ..., levels-1).
Operator number_op(int levels);
Operator identity_op(int levels);

Operator tensor(const Operator& a, const Operator& b);
StateVector tensor(const StateVector& a, const StateVector& b);

Operator dagger(const Operator& a);
Operator commutator(const Operator& a, const Operator& b);

cd expectation(const Operator& a, const StateVector& psi);
cd expectation(const Operator& a, const DensityMatrix& rho);

bool approx_equal(const Mat& a, const Mat& b, double tol = kEqTol);

}  // namespace holo
