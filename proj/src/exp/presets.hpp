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

// Canned experiment configs, one per published data panel plus a few
// generic entry points. Each preset is a complete config text; running it
// is identical to `run` on a file with the same content.

#pragma once

#include <string>
#include <vector>

namespace holo {

struct Preset {
  std::string name;
  std::string description;  // one line
  std::string config;       // full config text
};

const std::vector<Preset>& all_presets();

// nullptr when the name is unknown.
const Preset* find_preset(const std::string& name);

}  // namespace holo
