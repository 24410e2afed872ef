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

// Command-line front end. Everything below goes through the public C
// interface of the shared library; no internal headers are involved.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holonomy/holonomy.h"
#include "json.hpp"

namespace {

// Exit contract: 0 success, 2 configuration problems, 3 simulation
// failures, 4 threshold misses.
int exit_code_for(int status) {
  switch (status) {
    case HQG_OK:
      return 0;
    case HQG_ERR_INVALID_ARGUMENT:
    case HQG_ERR_CONFIG:
    case HQG_ERR_IO:
    case HQG_ERR_UNKNOWN_PRESET:
      return 2;
    case HQG_ERR_THRESHOLD:
      return 4;
    default:
      return 3;
  }
}

// One line of machine-readable JSON on stdout, detail on stderr.
int report_failure(int status, const std::string& message) {
  nlohmann::json err;
  err["error"]["code"] = status;
  err["error"]["status"] = hqg_strerror(status);
  err["error"]["message"] = message;
  std::printf("%s\n", err.dump().c_str());
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return exit_code_for(status);
}

int report_failure(int status) {
  return report_failure(status, hqg_last_error_message());
}

struct CommonOptions {
  std::string out_dir;
  int jobs = 0;
  bool enforce = false;
  std::vector<std::string> sets;
  std::string initial;
  std::string compensation;
};

void add_common(CLI::App* sub, CommonOptions* opt) {
  sub->add_option("-o,--out", opt->out_dir,
                  "Run directory for the artifacts (default runs/<name>)");
  sub->add_option("-j,--jobs", opt->jobs,
                  "Worker cap; 0 uses the hardware default. The "
                  "HOLONOMY_JOBS environment variable overrides this.");
  sub->add_flag("--assert", opt->enforce,
                "Enforce the [assert] thresholds; a miss exits 4");
  sub->add_option("--set", opt->sets,
                  "Override a config key, as section.key=value; repeatable")
      ->type_name("KEY=VALUE");
  sub->add_option("--initial", opt->initial,
                  "Two-qubit initial register state: fgg, fgf, ggf or ggg");
  sub->add_option("--compensation", opt->compensation,
                  "Two-qubit drive-frequency compensation: on or off");
}

int run_handle(hqg_experiment* e, const std::string& default_name,
               const CommonOptions& opt) {
  int st = HQG_OK;
  // The dedicated two-qubit flags are sugar for --set; --set wins when
  // both name the same key because later assignments take precedence.
  if (!opt.initial.empty())
    st = hqg_experiment_set(e, "two_qubit.initial", opt.initial.c_str());
  if (st == HQG_OK && !opt.compensation.empty())
    st = hqg_experiment_set(e, "two_qubit.compensation",
                            opt.compensation.c_str());
  for (const std::string& kv : opt.sets) {
    if (st != HQG_OK) break;
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      return report_failure(HQG_ERR_CONFIG,
                            "--set expects KEY=VALUE, got '" + kv + "'");
    st = hqg_experiment_set(e, kv.substr(0, eq).c_str(),
                            kv.substr(eq + 1).c_str());
  }
  if (st == HQG_OK && opt.enforce)
    st = hqg_experiment_set(e, "assert.enabled", "on");
  if (st != HQG_OK) return report_failure(st);

  const std::string out_dir =
      opt.out_dir.empty() ? (std::filesystem::path("runs") / default_name).string()
                          : opt.out_dir;

  const auto t0 = std::chrono::steady_clock::now();
  hqg_report* rep = nullptr;
  st = hqg_experiment_run(e, out_dir.c_str(), opt.jobs, &rep);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (st != HQG_OK) return report_failure(st);

  char* summary = nullptr;
  st = hqg_report_summary(rep, &summary);
  if (st == HQG_OK)
    std::printf("%s; wall %.2f s; artifacts %s\n", summary, wall,
                out_dir.c_str());
  hqg_string_free(summary);
  hqg_report_free(rep);
  return st == HQG_OK ? 0 : report_failure(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Holonomic-gate pulse synthesis and open-system simulation.\n"
      "Artifacts of a run land in one directory: config.echo, the\n"
      "experiment's CSV tables and report.json."};
  app.set_version_flag("--version", hqg_version());
  app.require_subcommand(1);

  std::string config_path, preset_name;
  CommonOptions run_opt, preset_opt;

  CLI::App* run = app.add_subcommand("run", "Run an experiment config file");
  run->add_option("config", config_path, "Path to the config file")
      ->required();
  add_common(run, &run_opt);

  CLI::App* preset =
      app.add_subcommand("preset", "Run a named canned experiment");
  preset->add_option("name", preset_name, "Preset name; see list-presets")
      ->required();
  add_common(preset, &preset_opt);

  CLI::App* list =
      app.add_subcommand("list-presets", "List the canned experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    return report_failure(HQG_ERR_CONFIG, e.what());
  }

  if (list->parsed()) {
    std::printf("%s", hqg_preset_list());
    return 0;
  }

  hqg_experiment* e = nullptr;
  int st;
  std::string name;
  const CommonOptions* opt;
  if (run->parsed()) {
    st = hqg_experiment_from_file(config_path.c_str(), &e);
    name = std::filesystem::path(config_path).stem().string();
    opt = &run_opt;
  } else {
    st = hqg_experiment_preset(preset_name.c_str(), &e);
    name = preset_name;
    opt = &preset_opt;
  }
  if (st != HQG_OK) return report_failure(st);

  const int code = run_handle(e, name, *opt);
  hqg_experiment_free(e);
  return code;
}
