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

// JSON text for reports and derivations. Relations inside JSON are embedded
// as CSV strings in the relation file format; atoms as canonical ASCII text.

#ifndef INDEPKIT_REPORT_JSON_H_
#define INDEPKIT_REPORT_JSON_H_

#include <string>

#include "indepkit/model_check.h"
#include "indepkit/rules.h"

namespace indepkit {

// {"verdict": bool, "method": str, "stats": {...}, "witness": csv?}
std::string to_json(const CheckReport& report, int indent = 2);

// {"goal": str, "steps": [{"index", "atom", "rule", "premises"}]}
std::string to_json(const Derivation& d, const Schema& schema, int indent = 2);

}  // namespace indepkit

#endif  // INDEPKIT_REPORT_JSON_H_
