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

#include "indepkit/dimacs.h"

#include <istream>
#include <ostream>
#include <sstream>

#include "indepkit/error.h"

namespace indepkit {

CnfFormula read_dimacs(std::istream& in) {
  CnfFormula phi;
  bool header = false;
  long declared_clauses = 0;
  std::vector<int> clause;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      std::string format;
      long vars = -1;
      if (header || !(words >> format >> vars >> declared_clauses) ||
          format != "cnf" || vars < 0 || declared_clauses < 0) {
        throw ParseError("bad problem line", number, 1);
      }
      phi.variable_count = static_cast<int>(vars);
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before the problem line", number, 1);
    words.clear();
    words.str(line);
    long lit;
    while (words >> lit) {
      if (lit == 0) {
        if (clause.empty()) throw ParseError("empty clause", number, 0);
        phi.clauses.push_back(std::move(clause));
        clause.clear();
        continue;
      }
      if (lit > phi.variable_count || -lit > phi.variable_count) {
        throw ParseError("literal " + std::to_string(lit) + " out of range",
                         number, 0);
      }
      clause.push_back(static_cast<int>(lit));
    }
    if (!words.eof()) throw ParseError("expected an integer literal", number, 0);
  }
  if (!header) throw ParseError("missing problem line", number, 0);
  if (!clause.empty()) phi.clauses.push_back(std::move(clause));
  if (static_cast<long>(phi.clauses.size()) != declared_clauses) {
    throw ParseError("problem line declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(phi.clauses.size()),
                     number, 0);
  }
  return phi;
}

void write_dimacs(std::ostream& out, const CnfFormula& phi) {
  out << "p cnf " << phi.variable_count << ' ' << phi.clauses.size() << '\n';
  for (const auto& clause : phi.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

}  // namespace indepkit
