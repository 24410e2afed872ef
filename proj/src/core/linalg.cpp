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

#include "core/linalg.hpp"

#include <cmath>

namespace holo {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ok: return "ok";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::dimension_mismatch: return "dimension mismatch";
    case ErrorCode::nonphysical_state: return "nonphysical state";
    case ErrorCode::amplitude_exceeded: return "amplitude bound exceeded";
    case ErrorCode::branch_singularity: return "branch singularity";
    case ErrorCode::quadrature: return "quadrature failure";
    case ErrorCode::accuracy: return "accuracy target missed";
    case ErrorCode::search_failed: return "search failed";
    case ErrorCode::config: return "config error";
    case ErrorCode::io: return "i/o error";
    case ErrorCode::unknown_preset: return "unknown preset";
    case ErrorCode::threshold: return "threshold missed";
    case ErrorCode::internal: return "internal error";
  }
  return "unknown error";
}

int total_dim(const std::vector<int>& dims) {
  require(!dims.empty(), ErrorCode::invalid_argument, "empty dims list");
  int n = 1;
  for (int d : dims) {
    require(d >= 2, ErrorCode::invalid_argument,
            "subsystem dimension must be >= 2");
    n *= d;
  }
  return n;
}

StateVector make_state(CVec amp, std::vector<int> dims) {
  require(total_dim(dims) == amp.size(), ErrorCode::dimension_mismatch,
          "amplitude length does not match dims product");
  double n = amp.norm();
  require(std::abs(n - 1.0) <= kNormTol, ErrorCode::nonphysical_state,
          "state vector is not normalized");
  return StateVector{std::move(amp), std::move(dims)};
}

DensityMatrix make_density(Mat rho, std::vector<int> dims) {
  require(rho.rows() == rho.cols(), ErrorCode::dimension_mismatch,
          "density matrix must be square");
  require(total_dim(dims) == rho.rows(), ErrorCode::dimension_mismatch,
          "density size does not match dims product");
  require((rho - rho.adjoint().eval()).cwiseAbs().maxCoeff() <= kEqTol,
          ErrorCode::nonphysical_state, "density matrix is not Hermitian");
  require(std::abs(rho.trace().real() - 1.0) <= kNormTol,
          ErrorCode::nonphysical_state, "density matrix trace is not 1");
  return DensityMatrix{std::move(rho), std::move(dims)};
}

Operator make_operator(Mat mat, std::vector<int> dims) {
  require(mat.rows() == mat.cols(), ErrorCode::dimension_mismatch,
          "operator must be square");
  require(total_dim(dims) == mat.rows(), ErrorCode::dimension_mismatch,
          "operator size does not match dims product");
  return Operator{std::move(mat), std::move(dims)};
}

StateVector basis_state(const std::vector<int>& dims,
                        const std::vector<int>& indices) {
  require(dims.size() == indices.size(), ErrorCode::dimension_mismatch,
          "one index per subsystem required");
  int idx = 0;
  for (size_t k = 0; k < dims.size(); ++k) {
    require(indices[k] >= 0 && indices[k] < dims[k],
            ErrorCode::invalid_argument, "basis index out of range");
    idx = idx * dims[k] + indices[k];
  }
  CVec amp = CVec::Zero(total_dim(dims));
  amp(idx) = 1.0;
  return StateVector{std::move(amp), dims};
}

DensityMatrix pure_density(const StateVector& psi) {
  Mat rho = psi.amp * psi.amp.adjoint();
  return DensityMatrix{std::move(rho), psi.dims};
}

Operator annihilation_op(int levels) {
  require(levels >= 2, ErrorCode::invalid_argument,
          "annihilation operator needs at least 2 levels");
  Mat a = Mat::Zero(levels, levels);
  for (int m = 1; m < levels; ++m) a(m - 1, m) = std::sqrt(double(m));
  return Operator{std::move(a), {levels}};
}

Operator number_op(int levels) {
  require(levels >= 2, ErrorCode::invalid_argument,
          "number operator needs at least 2 levels");
  Mat n = Mat::Zero(levels, levels);
  for (int m = 0; m < levels; ++m) n(m, m) = double(m);
  return Operator{std::move(n), {levels}};
}

Operator identity_op(int levels) {
  require(levels >= 2, ErrorCode::invalid_argument,
          "identity needs at least 2 levels");
  return Operator{Mat::Identity(levels, levels), {levels}};
}

Operator tensor(const Operator& a, const Operator& b) {
  Mat out(a.dim() * b.dim(), a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      out.block(i * b.dim(), j * b.dim(), b.dim(), b.dim()) = a.mat(i, j) * b.mat;
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  return Operator{std::move(out), std::move(dims)};
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  CVec out(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    out.segment(i * b.dim(), b.dim()) = a.amp(i) * b.amp;
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  return StateVector{std::move(out), std::move(dims)};
}

Operator dagger(const Operator& a) {
  return Operator{a.mat.adjoint(), a.dims};
}

Operator commutator(const Operator& a, const Operator& b) {
  require(a.dim() == b.dim(), ErrorCode::dimension_mismatch,
          "commutator of mismatched operators");
  return Operator{a.mat * b.mat - b.mat * a.mat, a.dims};
}

cd expectation(const Operator& a, const StateVector& psi) {
  require(a.dim() == psi.dim(), ErrorCode::dimension_mismatch,
          "operator and state dimensions differ");
  return (psi.amp.adjoint() * a.mat * psi.amp)(0, 0);
}

cd expectation(const Operator& a, const DensityMatrix& rho) {
  require(a.dim() == rho.dim(), ErrorCode::dimension_mismatch,
          "operator and density dimensions differ");
  return (a.mat * rho.rho).trace();
}

bool approx_equal(const Mat& a, const Mat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace holo
