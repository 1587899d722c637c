// Copyright 2026 The indepkit Authors
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

#include "run_config.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace indepkit::cli {
namespace {

std::uint64_t parse_count(const std::string& key, const std::string& value,
                          std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || value.front() == '-' || v == 0 || v > max) {
    throw std::invalid_argument(key + ": expected a positive integer, got '" + value + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  return static_cast<int>(parse_count(key, value, std::numeric_limits<int>::max()));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

const std::map<std::string, std::string>& config_keys() {
  static const std::map<std::string, std::string> keys = {
      {"oracle_bound", "INDEPKIT_ORACLE_BOUND"},
      {"attribute_limit", "INDEPKIT_ATTRIBUTE_LIMIT"},
      {"max_attributes", "INDEPKIT_MAX_ATTRIBUTES"},
      {"max_rows", "INDEPKIT_MAX_ROWS"},
      {"domain_size", "INDEPKIT_DOMAIN_SIZE"},
      {"exhaustive_rows", "INDEPKIT_EXHAUSTIVE_ROWS"},
      {"candidate_budget", "INDEPKIT_CANDIDATE_BUDGET"},
      {"format", "INDEPKIT_FORMAT"},
      {"notation", "INDEPKIT_NOTATION"},
      {"seed", "INDEPKIT_SEED"},
  };
  return keys;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "oracle_bound") {
    oracle.grounding_bound = parse_count(key, value);
  } else if (key == "attribute_limit") {
    closure.attribute_limit = parse_int(key, value);
  } else if (key == "max_attributes") {
    search.max_attributes = parse_int(key, value);
  } else if (key == "max_rows") {
    search.max_rows = parse_int(key, value);
  } else if (key == "domain_size") {
    search.domain_size = parse_int(key, value);
  } else if (key == "exhaustive_rows") {
    search.exhaustive_rows = parse_int(key, value);
  } else if (key == "candidate_budget") {
    search.candidate_budget = parse_count(key, value);
  } else if (key == "format") {
    const std::string v = lower(value);
    if (v == "text") {
      format = OutputFormat::kText;
    } else if (v == "json") {
      format = OutputFormat::kJson;
    } else {
      throw std::invalid_argument("format: expected text or json, got '" + value + "'");
    }
  } else if (key == "notation") {
    const std::string v = lower(value);
    if (v == "ascii") {
      notation = Notation::kAscii;
    } else if (v == "unicode") {
      notation = Notation::kUnicode;
    } else if (v == "auto") {
      notation = notation_from_locale();
    } else {
      throw std::invalid_argument("notation: expected ascii, unicode or auto");
    }
  } else if (key == "seed") {
    std::size_t used = 0;
    try {
      seed = std::stoull(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) {
      throw std::invalid_argument("seed: expected a non-negative integer");
    }
  } else {
    throw std::invalid_argument("unknown configuration key '" + key + "'");
  }
}

void RunConfig::validate() const {
  if (search.domain_size < 2) {
    throw std::invalid_argument("domain_size: must be at least 2");
  }
  if (search.max_attributes > 64 || closure.attribute_limit > 64) {
    throw std::invalid_argument("attribute limits must not exceed 64");
  }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument(path.string() + ": expected a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_number_unsigned()) {
      text = std::to_string(value.get<std::uint64_t>());
    } else {
      throw std::invalid_argument(path.string() + ": " + key +
                                  ": expected a string or a non-negative integer");
    }
    config.set(key, text);
  }
}

void apply_environment(RunConfig& config) {
  for (const auto& [key, variable] : config_keys()) {
    if (const char* value = std::getenv(variable.c_str()); value && *value) {
      config.set(key, value);
    }
  }
}

Notation notation_from_locale() {
  for (const char* variable : {"LC_ALL", "LC_CTYPE", "LANG"}) {
    const char* value = std::getenv(variable);
    if (!value || !*value) continue;
    const std::string v = lower(value);
    return v.find("utf-8") != std::string::npos || v.find("utf8") != std::string::npos
               ? Notation::kUnicode
               : Notation::kAscii;
  }
  return Notation::kAscii;
}

}  // namespace indepkit::cli
