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

#include <stdexcept>
#include <string>

namespace holo {

// Mirrors the hqg_status values of the public C header.
enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 1,
  dimension_mismatch = 2,
  nonphysical_state = 3,
  amplitude_exceeded = 4,
  branch_singularity = 5,
  quadrature = 6,
  accuracy = 7,
  search_failed = 8,
  config = 9,
  io = 10,
  unknown_preset = 11,
  threshold = 12,
  internal = 13,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

const char* error_name(ErrorCode code);

}  // namespace holo
