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

#include "exp/presets.hpp"

namespace holo {
namespace {

// Shared section snippets keep the device numbers in one place.
constexpr const char* kSingleDevice =
    "[device]\n"
    "model = leaky4\n"
    "alpha = 400 MHz\n"
    "decoherence = on\n"
    "gamma1 = 5 kHz\n"
    "gamma2 = 5 kHz\n";

constexpr const char* kTwoQubitDevice =
    "[device]\n"
    "alpha = 400 MHz\n"
    "alpha_aux = 370 MHz\n"
    "g = 65 MHz\n"
    "delta = 1 GHz\n"
    "decoherence = off\n";

constexpr const char* kStark =
    "[stark]\n"
    "points = 73\n"
    "max_drive = 360 MHz\n";

std::vector<Preset> build() {
  std::vector<Preset> p;

  p.push_back({"fig2b",
               "NOT loop at the minimal duration: level populations and "
               "state fidelity under relaxation and dephasing",
               std::string("experiment = single-gate\n\n"
                           "[path]\n"
                           "gate = not\n"
                           "n = 0\n"
                           "tau = min\n"
                           "omega_max = 16 MHz\n\n") +
                   kSingleDevice +
                   "\n[run]\n"
                   "initial = g\n\n"
                   "[assert]\n"
                   "enabled = off\n"
                   "state_fidelity = 0.9979 +- 0.003\n"});

  p.push_back({"fig2c",
               "Hadamard loop at the minimal duration: level populations "
               "and state fidelity under relaxation and dephasing",
               std::string("experiment = single-gate\n\n"
                           "[path]\n"
                           "gate = hadamard\n"
                           "n = 0\n"
                           "tau = min\n"
                           "omega_max = 16 MHz\n\n") +
                   kSingleDevice +
                   "\n[run]\n"
                   "initial = g\n\n"
                   "[assert]\n"
                   "enabled = off\n"
                   "state_fidelity = 0.9955 +- 0.003\n"});

  p.push_back({"fig2d",
               "Uniform-state average gate fidelity of the NOT loop versus "
               "time, via the reconstructed qubit channel",
               std::string("experiment = gate-fidelity\n\n"
                           "[path]\n"
                           "gate = not\n"
                           "n = 0\n"
                           "tau = min\n"
                           "omega_max = 16 MHz\n\n") +
                   kSingleDevice +
                   "\n[run]\n"
                   "states = 1001\n\n"
                   "[assert]\n"
                   "enabled = off\n"
                   "gate_fidelity = 0.9975 +- 0.003\n"});

  p.push_back({"fig3a",
               "Closed-system robustness of the NOT loop to an amplitude "
               "scale error, for tuning indices 0, 0.6 and 1",
               "experiment = robustness-scan\n\n"
               "[path]\n"
               "gate = not\n"
               "omega_max = 16 MHz\n\n"
               "[device]\n"
               "model = ideal3\n"
               "decoherence = off\n\n"
               "[sweep]\n"
               "n_values = 0, 0.6, 1\n"
               "eps_min = -0.1\n"
               "eps_max = 0.1\n"
               "eps_steps = 21\n"
               "states = 101\n"});

  const auto scan_one = [&](const char* name, const char* n_value) {
    p.push_back({name,
                 std::string("Open-system robustness of the NOT loop to an "
                             "amplitude scale error at tuning index ") +
                     n_value,
                 std::string("experiment = robustness-scan\n\n"
                             "[path]\n"
                             "gate = not\n"
                             "omega_max = 16 MHz\n\n") +
                     kSingleDevice +
                     "\n[sweep]\n"
                     "n_values = " +
                     n_value +
                     "\n"
                     "eps_min = -0.1\n"
                     "eps_max = 0.1\n"
                     "eps_steps = 21\n"
                     "states = 101\n"});
  };
  scan_one("fig3b", "0.6");
  scan_one("fig3c", "0");
  scan_one("fig3d", "1");

  p.push_back({"fig4",
               "Population transfer of the two-qubit gate from the fgg "
               "register state with drive-frequency compensation on",
               std::string("experiment = two-qubit\n\n"
                           "[two_qubit]\n"
                           "vartheta = 0.5 pi\n"
                           "tau = 57 ns\n"
                           "initial = fgg\n"
                           "compensation = on\n\n") +
                   kTwoQubitDevice + "\n" + kStark +
                   "\n[assert]\n"
                   "enabled = off\n"
                   "state_fidelity = 0.9944 +- 0.01\n"});

  p.push_back({"fig5a",
               "Compensating frame shift versus drive amplitude (delta_s "
               "column of the calibration curve)",
               std::string("experiment = stark-curve\n\n") + kTwoQubitDevice +
                   "\n" + kStark});

  p.push_back({"fig5b",
               "Effective per-qubit coupling versus drive amplitude (g_eff "
               "column of the calibration curve)",
               std::string("experiment = stark-curve\n\n") + kTwoQubitDevice +
                   "\n" + kStark});

  p.push_back({"qs-table",
               "Amplitude-error sensitivity q_s of the tuned family against "
               "its closed form, at n = 0, 0.5 and 1",
               "experiment = qs-table\n\n"
               "[sweep]\n"
               "n_values = 0, 0.5, 1\n\n"
               "[assert]\n"
               "enabled = off\n"
               "integer_n_max_qs = 0 +- 1e-8\n"});

  p.push_back({"optimal-n",
               "Open-system scan of the tuning index on the 11-point grid "
               "0..1; reports the mean-fidelity optimum",
               std::string("experiment = robustness-scan\n\n"
                           "[path]\n"
                           "gate = not\n"
                           "omega_max = 16 MHz\n\n") +
                   kSingleDevice +
                   "\n[sweep]\n"
                   "n_values = 0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, "
                   "0.9, 1\n"
                   "eps_min = -0.1\n"
                   "eps_max = 0.1\n"
                   "eps_steps = 21\n"
                   "states = 101\n"
                   "criterion = mean\n\n"
                   "[assert]\n"
                   "enabled = off\n"
                   "optimal_n = 0.6 +- 1e-9\n"});

  p.push_back({"two-qubit",
               "Two-qubit transfer gate; override two_qubit.initial and "
               "two_qubit.compensation to explore",
               std::string("experiment = two-qubit\n\n"
                           "[two_qubit]\n"
                           "vartheta = 0.5 pi\n"
                           "tau = 57 ns\n"
                           "initial = fgg\n"
                           "compensation = on\n\n") +
                   kTwoQubitDevice + "\n" + kStark});

  p.push_back({"not-gate",
               "Uniform-state average gate fidelity of the NOT loop under "
               "decoherence",
               std::string("experiment = gate-fidelity\n\n"
                           "[path]\n"
                           "gate = not\n"
                           "tau = min\n"
                           "omega_max = 16 MHz\n\n") +
                   kSingleDevice +
                   "\n[run]\n"
                   "states = 1001\n\n"
                   "[assert]\n"
                   "enabled = off\n"
                   "gate_fidelity = 0.9975 +- 0.003\n"});

  p.push_back({"hadamard",
               "Uniform-state average gate fidelity of the Hadamard loop "
               "under decoherence",
               std::string("experiment = gate-fidelity\n\n"
                           "[path]\n"
                           "gate = hadamard\n"
                           "tau = min\n"
                           "omega_max = 16 MHz\n\n") +
                   kSingleDevice +
                   "\n[run]\n"
                   "states = 1001\n\n"
                   "[assert]\n"
                   "enabled = off\n"
                   "gate_fidelity = 0.9962 +- 0.003\n"});

  return p;
}

}  // namespace

const std::vector<Preset>& all_presets() {
  static const std::vector<Preset> presets = build();
  return presets;
}

const Preset* find_preset(const std::string& name) {
  for (const Preset& p : all_presets())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace holo
