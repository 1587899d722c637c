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

#include "indepkit/report_json.h"

#include "indepkit/relation_io.h"
#include "json.hpp"

namespace indepkit {

std::string to_json(const CheckReport& report, int indent) {
  nlohmann::ordered_json stats = {
      {"nodes_explored", report.stats.nodes_explored},
      {"groundings_examined", report.stats.groundings_examined},
  };
  if (report.stats.flow_value) stats["flow_value"] = *report.stats.flow_value;
  nlohmann::ordered_json doc = {
      {"verdict", report.verdict},
      {"method", std::string(method_name(report.method))},
      {"stats", stats},
  };
  if (report.witness) doc["witness"] = relation_to_csv(*report.witness);
  return doc.dump(indent);
}

std::string to_json(const Derivation& d, const Schema& schema, int indent) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const DerivationStep& s = d.steps()[i];
    nlohmann::ordered_json premises = nlohmann::ordered_json::array();
    for (std::size_t p : s.premises) premises.push_back(p + 1);
    steps.push_back({
        {"index", i + 1},
        {"atom", render(s.atom, schema)},
        {"rule", s.rule ? std::string(rule_name(*s.rule)) : "premise"},
        {"premises", premises},
    });
  }
  nlohmann::ordered_json doc = {
      {"goal", d.size() ? render(d.goal(), schema) : ""},
      {"steps", steps},
  };
  return doc.dump(indent);
}

}  // namespace indepkit
