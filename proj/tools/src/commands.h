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

#ifndef INDEPKIT_TOOLS_COMMANDS_H_
#define INDEPKIT_TOOLS_COMMANDS_H_

#include <iosfwd>
#include <optional>
#include <string>

#include "run_config.h"

namespace indepkit::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

// Failure the user has to fix: bad input, out-of-fragment query, ...
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckArgs {
  std::string relation;
  std::string domains;
  std::string atom;
  std::string method = "auto";
  bool exit_status = false;
};

struct ImpliesArgs {
  std::string constraints;
  std::string atom;
  std::string counterexample;  // output base name; empty for none
  bool sound_only = false;
  bool exit_status = false;
};

struct ClosureArgs {
  std::string constraints;
  std::string system = "mixed";
  bool nontrivial = false;
};

struct DeriveArgs {
  std::string constraints;
  std::string atom;
  std::string system = "mixed";
};

struct WitnessArgs {
  std::string kind;
  int k = 2;
  int m = 2;
  int extra = 0;
  int x = 1;
  int y = 1;
  int z = 1;
  bool complete_only = false;
  std::string attributes = "A,B,C";
  std::string column = "A";
  std::string grounding = "none";
  std::string output;
};

struct FromCnfArgs {
  std::string cnf;
  std::string output;
  bool decide = false;
};

int cmd_check(const RunConfig& config, const CheckArgs& args, std::ostream& out);
int cmd_implies(const RunConfig& config, const ImpliesArgs& args, std::ostream& out);
int cmd_closure(const RunConfig& config, const ClosureArgs& args, std::ostream& out);
int cmd_derive(const RunConfig& config, const DeriveArgs& args, std::ostream& out);
int cmd_witness(const RunConfig& config, const WitnessArgs& args, std::ostream& out);
int cmd_from_cnf(const RunConfig& config, const FromCnfArgs& args, std::ostream& out);

}  // namespace indepkit::cli

#endif  // INDEPKIT_TOOLS_COMMANDS_H_
