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

#include "holonomy/holonomy.h"

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/linalg.hpp"
#include "exp/config.hpp"
#include "exp/experiments.hpp"
#include "exp/presets.hpp"
#include "json.hpp"
#include "path/path.hpp"
#include "path/waveform.hpp"

// Handle bodies; the header only forward-declares them.
struct hqg_experiment {
  holo::Config cfg;
};

struct hqg_report {
  holo::ExperimentReport rep;
  nlohmann::json doc;
};

struct hqg_waveform {
  holo::ControlWaveform wf;
  std::vector<holo::WaveformSample> rows;
};

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

int bad_arg(const std::string& msg) {
  return set_error(HQG_ERR_INVALID_ARGUMENT, msg);
}

// Runs `fn` and folds any escape into a status code. Library errors keep
// their code (the two enums match value for value); anything else is
// internal.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return HQG_OK;
  } catch (const holo::Error& e) {
    return set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::exception& e) {
    return set_error(HQG_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(HQG_ERR_INTERNAL, "unknown failure");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::filesystem::path scratch_dir() {
  static std::atomic<unsigned> counter{0};
  return std::filesystem::temp_directory_path() /
         ("hqg_scratch_" + std::to_string(::getpid()) + "_" +
          std::to_string(counter.fetch_add(1)));
}

}  // namespace

extern "C" {

const char* hqg_version(void) { return "1.0.0"; }

const char* hqg_strerror(int code) {
  switch (code) {
    case HQG_OK:
      return "ok";
    case HQG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case HQG_ERR_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case HQG_ERR_NONPHYSICAL_STATE:
      return "nonphysical state";
    case HQG_ERR_AMPLITUDE_EXCEEDED:
      return "drive amplitude exceeds the configured maximum";
    case HQG_ERR_BRANCH_SINGULARITY:
      return "phase branch singularity";
    case HQG_ERR_QUADRATURE:
      return "quadrature failure";
    case HQG_ERR_ACCURACY:
      return "accuracy target missed";
    case HQG_ERR_SEARCH_FAILED:
      return "search failed";
    case HQG_ERR_CONFIG:
      return "invalid configuration";
    case HQG_ERR_IO:
      return "input/output failure";
    case HQG_ERR_UNKNOWN_PRESET:
      return "unknown preset";
    case HQG_ERR_THRESHOLD:
      return "threshold miss";
    case HQG_ERR_INTERNAL:
      return "internal error";
    default:
      return "unrecognized status code";
  }
}

const char* hqg_last_error_message(void) { return g_last_error.c_str(); }

void hqg_string_free(char* s) { std::free(s); }

int hqg_experiment_from_file(const char* path, hqg_experiment** out) {
  if (!path || !out) return bad_arg("hqg_experiment_from_file: null argument");
  return guarded([&] { *out = new hqg_experiment{holo::Config::from_file(path)}; });
}

int hqg_experiment_from_string(const char* text, hqg_experiment** out) {
  if (!text || !out)
    return bad_arg("hqg_experiment_from_string: null argument");
  return guarded(
      [&] { *out = new hqg_experiment{holo::Config::from_string(text)}; });
}

int hqg_experiment_preset(const char* name, hqg_experiment** out) {
  if (!name || !out) return bad_arg("hqg_experiment_preset: null argument");
  return guarded([&] {
    const holo::Preset* p = holo::find_preset(name);
    holo::require(p != nullptr, holo::ErrorCode::unknown_preset,
                  std::string("unknown preset '") + name +
                      "'; hqg_preset_list() names the available ones");
    *out = new hqg_experiment{holo::Config::from_string(p->config)};
  });
}

void hqg_experiment_free(hqg_experiment* e) { delete e; }

int hqg_experiment_set(hqg_experiment* e, const char* key, const char* value) {
  if (!e || !key || !value) return bad_arg("hqg_experiment_set: null argument");
  return guarded([&] {
    holo::Config trial = e->cfg;
    trial.set(key, value);
    // A value that breaks the text form (embedded newline, say) must not
    // take effect; reparsing the render catches it.
    holo::Config::from_string(trial.render());
    e->cfg = std::move(trial);
  });
}

int hqg_experiment_render(const hqg_experiment* e, char** out_text) {
  if (!e || !out_text) return bad_arg("hqg_experiment_render: null argument");
  return guarded([&] {
    *out_text = dup_string(e->cfg.render());
    holo::require(*out_text != nullptr, holo::ErrorCode::internal,
                  "out of memory");
  });
}

const char* hqg_preset_list(void) {
  static const std::string listing = [] {
    std::string s;
    for (const holo::Preset& p : holo::all_presets())
      s += p.name + ": " + p.description + "\n";
    return s;
  }();
  return listing.c_str();
}

int hqg_experiment_run(const hqg_experiment* e, const char* out_dir, int jobs,
                       hqg_report** out) {
  if (!e || !out) return bad_arg("hqg_experiment_run: null argument");
  return guarded([&] {
    std::filesystem::path dir;
    const bool scratch = out_dir == nullptr;
    dir = scratch ? scratch_dir() : std::filesystem::path(out_dir);
    holo::ExperimentReport rep;
    try {
      rep = holo::run_experiment(e->cfg, dir.string(), jobs);
    } catch (...) {
      if (scratch) std::filesystem::remove_all(dir);
      throw;
    }
    if (scratch) std::filesystem::remove_all(dir);
    nlohmann::json doc = nlohmann::json::parse(rep.json_text);
    *out = new hqg_report{std::move(rep), std::move(doc)};
  });
}

void hqg_report_free(hqg_report* r) { delete r; }

int hqg_report_json(const hqg_report* r, char** out_json) {
  if (!r || !out_json) return bad_arg("hqg_report_json: null argument");
  return guarded([&] {
    *out_json = dup_string(r->rep.json_text);
    holo::require(*out_json != nullptr, holo::ErrorCode::internal,
                  "out of memory");
  });
}

int hqg_report_scalar(const hqg_report* r, const char* key, double* out) {
  if (!r || !key || !out) return bad_arg("hqg_report_scalar: null argument");
  return guarded([&] {
    const auto it = r->rep.scalars.find(key);
    if (it != r->rep.scalars.end()) {
      *out = it->second;
      return;
    }
    // Fall back to a dotted walk of the report document.
    const nlohmann::json* node = &r->doc;
    std::string rest = key;
    while (!rest.empty()) {
      const std::size_t dot = rest.find('.');
      const std::string head = rest.substr(0, dot);
      rest = dot == std::string::npos ? "" : rest.substr(dot + 1);
      holo::require(node->is_object() && node->contains(head),
                    holo::ErrorCode::invalid_argument,
                    std::string("report has no scalar '") + key + "'");
      node = &(*node)[head];
    }
    holo::require(node->is_number(), holo::ErrorCode::invalid_argument,
                  std::string("report entry '") + key + "' is not a number");
    *out = node->get<double>();
  });
}

int hqg_report_summary(const hqg_report* r, char** out_text) {
  if (!r || !out_text) return bad_arg("hqg_report_summary: null argument");
  return guarded([&] {
    *out_text = dup_string(r->rep.summary);
    holo::require(*out_text != nullptr, holo::ErrorCode::internal,
                  "out of memory");
  });
}

int hqg_qs_sensitivity(double n, double* out_qs) {
  if (!out_qs) return bad_arg("hqg_qs_sensitivity: null argument");
  return guarded([&] {
    holo::require(n >= 0.0 && std::isfinite(n),
                  holo::ErrorCode::invalid_argument,
                  "family index n must be finite and >= 0");
    const holo::HolonomySpec gate{holo::kPi / 2.0, 0.0, holo::kPi};
    *out_qs = holo::error_sensitivity_qs(
        holo::Path(holo::family_path(100.0, gate, n)));
  });
}

int hqg_waveform_synthesize(double tau_ns, double theta_rad, double phi_rad,
                            double gamma_rad, double n, double omega_max,
                            hqg_waveform** out) {
  if (!out) return bad_arg("hqg_waveform_synthesize: null argument");
  return guarded([&] {
    const holo::HolonomySpec gate{theta_rad, phi_rad, gamma_rad};
    double tau = tau_ns;
    double cap = omega_max;
    if (tau <= 0.0) {
      holo::require(omega_max > 0.0, holo::ErrorCode::invalid_argument,
                    "picking the shortest duration needs omega_max > 0");
      tau = holo::tau_for_peak(holo::standard_path(100.0, gate, n), omega_max);
      cap = 0.0;  // the peak now equals omega_max by construction
    }
    holo::ControlWaveform wf =
        holo::inverse_engineer(holo::Path(holo::standard_path(tau, gate, n)), cap);
    std::vector<holo::WaveformSample> rows = wf.samples();
    *out = new hqg_waveform{std::move(wf), std::move(rows)};
  });
}

void hqg_waveform_free(hqg_waveform* w) { delete w; }

int hqg_waveform_size(const hqg_waveform* w, size_t* out_rows) {
  if (!w || !out_rows) return bad_arg("hqg_waveform_size: null argument");
  *out_rows = w->rows.size();
  return HQG_OK;
}

int hqg_waveform_row(const hqg_waveform* w, size_t i, double out_row[4]) {
  if (!w || !out_row) return bad_arg("hqg_waveform_row: null argument");
  if (i >= w->rows.size())
    return bad_arg("hqg_waveform_row: row index out of range");
  out_row[0] = w->rows[i].t_ns;
  out_row[1] = w->rows[i].omega;
  out_row[2] = w->rows[i].phi1;
  out_row[3] = w->rows[i].phi2;
  return HQG_OK;
}

int hqg_waveform_tau(const hqg_waveform* w, double* out_tau_ns) {
  if (!w || !out_tau_ns) return bad_arg("hqg_waveform_tau: null argument");
  *out_tau_ns = w->wf.tau();
  return HQG_OK;
}

int hqg_waveform_peak(const hqg_waveform* w, double* out_peak) {
  if (!w || !out_peak) return bad_arg("hqg_waveform_peak: null argument");
  *out_peak = w->wf.peak_omega();
  return HQG_OK;
}

}  // extern "C"
