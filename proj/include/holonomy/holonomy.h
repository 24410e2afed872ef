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

// C interface to the holonomy simulation library.
//
// All objects are opaque handles created and destroyed through this API.
// Every fallible call returns an int status code (HQG_OK == 0 on success);
// hqg_strerror turns a code into a static description and
// hqg_last_error_message returns the detail text of the most recent failure
// on the calling thread.

#ifndef HOLONOMY_H
#define HOLONOMY_H

#include <stddef.h>

#if defined(_WIN32)
#define HQG_EXPORT __declspec(dllexport)
#else
#define HQG_EXPORT __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum hqg_status {
  HQG_OK = 0,
  HQG_ERR_INVALID_ARGUMENT = 1,
  HQG_ERR_DIMENSION_MISMATCH = 2,
  HQG_ERR_NONPHYSICAL_STATE = 3,
  HQG_ERR_AMPLITUDE_EXCEEDED = 4,
  HQG_ERR_BRANCH_SINGULARITY = 5,
  HQG_ERR_QUADRATURE = 6,
  HQG_ERR_ACCURACY = 7,
  HQG_ERR_SEARCH_FAILED = 8,
  HQG_ERR_CONFIG = 9,
  HQG_ERR_IO = 10,
  HQG_ERR_UNKNOWN_PRESET = 11,
  HQG_ERR_THRESHOLD = 12,
  HQG_ERR_INTERNAL = 13
};

typedef struct hqg_experiment hqg_experiment;
typedef struct hqg_report hqg_report;
typedef struct hqg_waveform hqg_waveform;

HQG_EXPORT const char* hqg_version(void);
HQG_EXPORT const char* hqg_strerror(int code);
HQG_EXPORT const char* hqg_last_error_message(void);
HQG_EXPORT void hqg_string_free(char* s);

// --- Experiments -----------------------------------------------------------
// An experiment is a parsed and validated configuration. Configurations are
// nested key-value text (see the README for the format); frequencies must
// carry explicit unit suffixes.

HQG_EXPORT int hqg_experiment_from_file(const char* path, hqg_experiment** out);
HQG_EXPORT int hqg_experiment_from_string(const char* text, hqg_experiment** out);
HQG_EXPORT int hqg_experiment_preset(const char* name, hqg_experiment** out);
HQG_EXPORT void hqg_experiment_free(hqg_experiment* e);

// Overrides one config key ("section.key" or bare key) with a raw value
// string, revalidating the result.
HQG_EXPORT int hqg_experiment_set(hqg_experiment* e, const char* key,
                                  const char* value);

// Returns the normalized config text (malloc'd; free with hqg_string_free).
HQG_EXPORT int hqg_experiment_render(const hqg_experiment* e, char** out_text);

// Newline-separated preset names, one "name: description" per line.
HQG_EXPORT const char* hqg_preset_list(void);

// Runs the experiment. out_dir may be NULL to skip artifact emission; jobs
// <= 0 selects the hardware default (the HOLONOMY_JOBS environment variable
// overrides either way). On success *out holds the run report.
HQG_EXPORT int hqg_experiment_run(const hqg_experiment* e, const char* out_dir,
                                  int jobs, hqg_report** out);

// --- Reports ---------------------------------------------------------------

HQG_EXPORT void hqg_report_free(hqg_report* r);

// Full report as a JSON document (malloc'd; free with hqg_string_free).
HQG_EXPORT int hqg_report_json(const hqg_report* r, char** out_json);

// Looks up a scalar metric by JSON pointer-ish dotted key, e.g.
// "state_fidelity" or "two_qubit.fidelity_unconditioned".
HQG_EXPORT int hqg_report_scalar(const hqg_report* r, const char* key,
                                 double* out);

// One-line human summary (malloc'd; free with hqg_string_free).
HQG_EXPORT int hqg_report_summary(const hqg_report* r, char** out_text);

// --- Direct library calls --------------------------------------------------

// Systematic-error sensitivity q_s of the zero-sensitivity path family at
// index n >= 0 (n = 0 is the constant-phase limit).
HQG_EXPORT int hqg_qs_sensitivity(double n, double* out_qs);

// Synthesizes the control waveform of the standard path: tau_ns <= 0 picks
// the shortest tau consistent with omega_max (rad/ns). gamma_rad is the
// holonomy angle; n selects the path family as in the config format.
HQG_EXPORT int hqg_waveform_synthesize(double tau_ns, double theta_rad,
                                       double phi_rad, double gamma_rad,
                                       double n, double omega_max,
                                       hqg_waveform** out);
HQG_EXPORT void hqg_waveform_free(hqg_waveform* w);
HQG_EXPORT int hqg_waveform_size(const hqg_waveform* w, size_t* out_rows);
// Fills row i as {t_ns, omega_rad_per_ns, phi1_rad, phi2_rad}.
HQG_EXPORT int hqg_waveform_row(const hqg_waveform* w, size_t i,
                                double out_row[4]);
HQG_EXPORT int hqg_waveform_tau(const hqg_waveform* w, double* out_tau_ns);
HQG_EXPORT int hqg_waveform_peak(const hqg_waveform* w, double* out_peak);

#ifdef __cplusplus
}
#endif

#endif  // HOLONOMY_H
