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

// Experiment configuration: an INI-style text file with [section] headers
// and key = value lines. Frequency-like values are written in cycle units
// (Hz, kHz, MHz, GHz) and multiplied by 2 pi on ingestion, so the file
// reads like the hardware datasheet; a section-level `angular = true`
// switches that section to literal rad/ns (or rad/us) values instead.
// Times carry ns or us, angles are radians or multiples of pi. A missing
// unit on a dimensioned value is a config error, never a silent guess.

#pragma once

#include <string>
#include <vector>

namespace holo {

class Config {
 public:
  Config() = default;
  static Config from_file(const std::string& path);
  static Config from_string(const std::string& text);

  // Verbatim source plus any overrides, reparseable as the same config.
  std::string render() const;

  bool has(const std::string& key) const;
  // Keys are "section.name"; an empty section part addresses keys above
  // the first header. Overrides are appended to the render.
  void set(const std::string& key, const std::string& value);

  // Raw string access. The required variant lists the key in its error.
  std::string str(const std::string& key, const std::string& def) const;
  std::string require_str(const std::string& key) const;

  // Dimensionless values.
  double number(const std::string& key, double def) const;
  int integer(const std::string& key, int def) const;
  bool flag(const std::string& key, bool def) const;
  std::vector<double> number_list(const std::string& key,
                                  const std::vector<double>& def) const;

  // Angles: bare radians, `x rad`, or `x pi`.
  double angle(const std::string& key, double def) const;

  // Durations in ns; unit ns or us required.
  double time_ns(const std::string& key, double def) const;

  // Frequency-like values to angular rad/ns. Cycle units get the 2 pi;
  // under `angular = true` (same section or top level) the value is read
  // as rad/ns (bare, `rad/ns`, or `rad/us`).
  double frequency(const std::string& key, double def) const;

  // Names of the keys of one section, file order, without the prefix.
  std::vector<std::string> section_keys(const std::string& section) const;

 private:
  struct Entry {
    std::string key;    // full "section.name"
    std::string value;  // trimmed raw text
  };
  const std::string* find(const std::string& key) const;
  bool angular_for(const std::string& key) const;

  std::vector<Entry> entries_;
  std::string text_;
  std::vector<std::pair<std::string, std::string>> overrides_;
};

// `value +- tolerance` pairs used by the [assert] section.
struct Tolerance {
  double value = 0.0;
  double tol = 0.0;
};
Tolerance parse_tolerance(const std::string& text, const std::string& key);

}  // namespace holo
