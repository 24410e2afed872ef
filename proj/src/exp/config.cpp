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

#include "exp/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "core/error.hpp"
#include "core/linalg.hpp"

namespace holo {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Leading number of `text`; `rest` receives what follows it.
double parse_number(const std::string& text, const std::string& key,
                    std::string* rest) {
  const std::string t = trim(text);
  const char* begin = t.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  require(end != begin, ErrorCode::config,
          "key '" + key + "': expected a number, got '" + t + "'");
  if (rest) *rest = trim(std::string(end));
  return v;
}

double parse_plain_number(const std::string& text, const std::string& key) {
  std::string rest;
  const double v = parse_number(text, key, &rest);
  require(rest.empty(), ErrorCode::config,
          "key '" + key + "': unexpected trailing text '" + rest + "'");
  return v;
}

}  // namespace

Config Config::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::io, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str());
}

Config Config::from_string(const std::string& text) {
  Config cfg;
  cfg.text_ = text;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      // An empty header, [], pops back to the top level.
      require(s.back() == ']' && s.size() >= 2, ErrorCode::config,
              "line " + std::to_string(lineno) + ": malformed section header '" +
                  s + "'");
      section = trim(s.substr(1, s.size() - 2));
      continue;
    }
    const std::size_t eq = s.find('=');
    require(eq != std::string::npos, ErrorCode::config,
            "line " + std::to_string(lineno) + ": expected 'key = value', got '" +
                s + "'");
    const std::string name = trim(s.substr(0, eq));
    require(!name.empty(), ErrorCode::config,
            "line " + std::to_string(lineno) + ": empty key");
    const std::string value = trim(s.substr(eq + 1));
    const std::string full = section.empty() ? name : section + "." + name;
    // Last assignment wins, matching what a reader of the file expects.
    bool replaced = false;
    for (Entry& e : cfg.entries_) {
      if (e.key == full) {
        e.value = value;
        replaced = true;
        break;
      }
    }
    if (!replaced) cfg.entries_.push_back({full, value});
  }
  return cfg;
}

std::string Config::render() const {
  std::string out = text_;
  if (!overrides_.empty()) {
    if (!out.empty() && out.back() != '\n') out += '\n';
    out += "\n# command-line overrides\n";
    // Top-level keys first, behind an empty header that pops whatever
    // section the verbatim text above happened to end in.
    bool header = false;
    for (const auto& [key, value] : overrides_) {
      if (key.rfind('.') != std::string::npos) continue;
      if (!header) out += "[]\n";
      header = true;
      out += key + " = " + value + "\n";
    }
    for (const auto& [key, value] : overrides_) {
      const std::size_t dot = key.rfind('.');
      if (dot != std::string::npos)
        out += "[" + key.substr(0, dot) + "]\n" + key.substr(dot + 1) +
               " = " + value + "\n";
    }
  }
  return out;
}

const std::string* Config::find(const std::string& key) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->key == key) return &it->value;
  return nullptr;
}

bool Config::has(const std::string& key) const { return find(key) != nullptr; }

void Config::set(const std::string& key, const std::string& value) {
  // Keep the override representable as a single 'key = value' line; a
  // newline or an '=' would smuggle extra assignments into the render.
  require(!key.empty() && key.find_first_of("=[]#;\n\r \t") == std::string::npos,
          ErrorCode::config, "override key '" + key + "' is not a plain key");
  require(value.find_first_of("\n\r") == std::string::npos, ErrorCode::config,
          "override value for '" + key + "' must be a single line");
  entries_.push_back({key, trim(value)});
  overrides_.emplace_back(key, trim(value));
}

std::string Config::str(const std::string& key, const std::string& def) const {
  const std::string* v = find(key);
  return v ? *v : def;
}

std::string Config::require_str(const std::string& key) const {
  const std::string* v = find(key);
  require(v != nullptr, ErrorCode::config, "missing required key '" + key + "'");
  return *v;
}

double Config::number(const std::string& key, double def) const {
  const std::string* v = find(key);
  return v ? parse_plain_number(*v, key) : def;
}

int Config::integer(const std::string& key, int def) const {
  const double v = number(key, static_cast<double>(def));
  const int i = static_cast<int>(std::lround(v));
  require(std::abs(v - i) < 1e-9, ErrorCode::config,
          "key '" + key + "': expected an integer");
  return i;
}

bool Config::flag(const std::string& key, bool def) const {
  const std::string* v = find(key);
  if (!v) return def;
  const std::string s = lower(*v);
  if (s == "on" || s == "true" || s == "yes" || s == "1") return true;
  if (s == "off" || s == "false" || s == "no" || s == "0") return false;
  fail(ErrorCode::config, "key '" + key + "': expected on/off, got '" + *v + "'");
}

std::vector<double> Config::number_list(const std::string& key,
                                        const std::vector<double>& def) const {
  const std::string* v = find(key);
  if (!v) return def;
  std::vector<double> out;
  std::string item;
  std::istringstream in(*v);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    require(!item.empty(), ErrorCode::config,
            "key '" + key + "': empty list element");
    out.push_back(parse_plain_number(item, key));
  }
  require(!out.empty(), ErrorCode::config, "key '" + key + "': empty list");
  return out;
}

double Config::angle(const std::string& key, double def) const {
  const std::string* v = find(key);
  if (!v) return def;
  std::string unit;
  const double x = parse_number(*v, key, &unit);
  unit = lower(unit);
  if (unit.empty() || unit == "rad") return x;
  if (unit == "pi") return x * kPi;
  fail(ErrorCode::config,
       "key '" + key + "': unknown angle unit '" + unit + "' (use rad or pi)");
}

double Config::time_ns(const std::string& key, double def) const {
  const std::string* v = find(key);
  if (!v) return def;
  std::string unit;
  const double x = parse_number(*v, key, &unit);
  unit = lower(unit);
  if (unit == "ns") return x;
  if (unit == "us") return x * 1000.0;
  fail(ErrorCode::config,
       "key '" + key + "': duration needs a unit, ns or us (got '" + *v + "')");
}

bool Config::angular_for(const std::string& key) const {
  const std::size_t dot = key.rfind('.');
  if (dot != std::string::npos && flag(key.substr(0, dot) + ".angular", false))
    return true;
  return flag("angular", false);
}

double Config::frequency(const std::string& key, double def) const {
  const std::string* v = find(key);
  if (!v) return def;
  std::string unit;
  const double x = parse_number(*v, key, &unit);
  const std::string u = lower(unit);
  if (angular_for(key)) {
    if (u.empty() || u == "rad/ns") return x;
    if (u == "rad/us") return x * 1e-3;
    fail(ErrorCode::config, "key '" + key +
                                "': angular mode expects rad/ns or rad/us "
                                "(got '" +
                                *v + "')");
  }
  // Cycle units pick up the 2 pi on ingestion.
  if (u == "ghz") return x * kTwoPi;
  if (u == "mhz") return x * kTwoPi * 1e-3;
  if (u == "khz") return x * kTwoPi * 1e-6;
  if (u == "hz") return x * kTwoPi * 1e-9;
  fail(ErrorCode::config,
       "key '" + key +
           "': frequency needs a unit (Hz, kHz, MHz, GHz, or set "
           "angular = true for rad/ns); got '" +
           *v + "'");
}

std::vector<std::string> Config::section_keys(const std::string& section) const {
  const std::string prefix = section + ".";
  std::vector<std::string> out;
  for (const Entry& e : entries_) {
    if (e.key.rfind(prefix, 0) == 0) {
      const std::string name = e.key.substr(prefix.size());
      bool seen = false;
      for (const std::string& k : out) seen = seen || k == name;
      if (!seen) out.push_back(name);
    }
  }
  return out;
}

Tolerance parse_tolerance(const std::string& text, const std::string& key) {
  const std::size_t pm = text.find("+-");
  require(pm != std::string::npos, ErrorCode::config,
          "key '" + key + "': expected 'value +- tolerance', got '" + text +
              "'");
  Tolerance t;
  t.value = parse_plain_number(text.substr(0, pm), key);
  t.tol = parse_plain_number(text.substr(pm + 2), key);
  require(t.tol >= 0.0, ErrorCode::config,
          "key '" + key + "': negative tolerance");
  return t;
}

}  // namespace holo
