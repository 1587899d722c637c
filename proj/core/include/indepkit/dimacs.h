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

#ifndef INDEPKIT_DIMACS_H_
#define INDEPKIT_DIMACS_H_

#include <iosfwd>

#include "indepkit/constructions.h"

namespace indepkit {

// DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header, then
// zero-terminated clauses (which may span lines). Throws ParseError.
CnfFormula read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfFormula& phi);

}  // namespace indepkit

#endif  // INDEPKIT_DIMACS_H_
