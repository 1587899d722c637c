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

#ifndef INDEPKIT_TOOLS_RUN_CONFIG_H_
#define INDEPKIT_TOOLS_RUN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "indepkit/atom.h"
#include "indepkit/implication.h"
#include "indepkit/model_check.h"

namespace indepkit::cli {

enum class OutputFormat { kText, kJson };

// Settings shared by every subcommand. Sources are layered as
// flags > INDEPKIT_* environment variables > JSON config file > defaults.
struct RunConfig {
  OracleOptions oracle;
  ClosureOptions closure;
  SearchBounds search;
  OutputFormat format = OutputFormat::kText;
  Notation notation = Notation::kAscii;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument on unknown keys or out-of-range values.
  void set(const std::string& key, const std::string& value);
  void validate() const;
};

// Keys accepted by RunConfig::set, each with its environment variable.
const std::map<std::string, std::string>& config_keys();

// Applies a JSON object of key -> value (numbers or strings).
void apply_config_file(RunConfig& config, const std::filesystem::path& path);
void apply_environment(RunConfig& config);

// UTF-8 notation when LC_ALL, LC_CTYPE or LANG (first one set) names UTF-8.
Notation notation_from_locale();

}  // namespace indepkit::cli

#endif  // INDEPKIT_TOOLS_RUN_CONFIG_H_
