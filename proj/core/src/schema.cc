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

#include "indepkit/schema.h"

#include <set>
#include <utility>

#include "indepkit/error.h"

namespace indepkit {

Schema::Schema(std::vector<std::string> attributes,
               std::vector<std::vector<std::string>> domains)
    : attributes_(std::move(attributes)), domains_(std::move(domains)) {
  if (attributes_.size() != domains_.size()) {
    throw SchemaError("schema needs one domain per attribute");
  }
  if (attributes_.size() > static_cast<std::size_t>(kMaxAttributes)) {
    throw SchemaError("schema has more than " + std::to_string(kMaxAttributes) +
                      " attributes");
  }
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    const std::string& a = attributes_[i];
    if (a.empty()) throw SchemaError("empty attribute name");
    if (!seen.insert(a).second) {
      throw SchemaError("duplicate attribute '" + a + "'");
    }
    const auto& dom = domains_[i];
    if (dom.size() < 2) {
      throw SchemaError("domain of '" + a + "' needs at least two values");
    }
    std::set<std::string_view> values;
    for (const std::string& v : dom) {
      if (!values.insert(v).second) {
        throw SchemaError("domain of '" + a + "' repeats value '" + v + "'");
      }
    }
  }
}

Schema Schema::uniform(std::vector<std::string> attributes, int domain_size) {
  std::vector<std::string> dom;
  for (int i = 0; i < domain_size; ++i) dom.push_back(std::to_string(i));
  std::vector<std::vector<std::string>> domains(attributes.size(), dom);
  return Schema(std::move(attributes), std::move(domains));
}

std::optional<int> Schema::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (attributes_[i] == name) return i;
  }
  return std::nullopt;
}

int Schema::position(std::string_view name) const {
  if (auto p = find(name)) return *p;
  throw SchemaError("unknown attribute '" + std::string(name) + "'");
}

AttributeSet Schema::set_of(const std::vector<std::string>& names) const {
  AttributeSet s;
  for (const auto& n : names) s.insert(position(n));
  return s;
}

std::optional<Value> Schema::find_value(int position,
                                        std::string_view value) const {
  const auto& dom = domains_[position];
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (dom[i] == value) return static_cast<Value>(i);
  }
  return std::nullopt;
}

Value Schema::value(int position, std::string_view value) const {
  if (auto v = find_value(position, value)) return *v;
  throw SchemaError("value '" + std::string(value) +
                    "' is not in the domain of '" + attributes_[position] + "'");
}

std::string_view Schema::value_name(int position, Value v) const {
  if (v == kNull) return kNullToken;
  return domains_[position][v];
}

Schema Schema::restrict(AttributeSet set) const {
  if (!set.subset_of(all())) throw SchemaError("attribute set leaves the schema");
  std::vector<std::string> attrs;
  std::vector<std::vector<std::string>> doms;
  for (int p : set.positions()) {
    attrs.push_back(attributes_[p]);
    doms.push_back(domains_[p]);
  }
  return Schema(std::move(attrs), std::move(doms));
}

std::string Schema::format_set(AttributeSet set) const {
  if (set.empty()) return "{}";
  std::string out;
  for (int p : set.positions()) {
    if (!out.empty()) out += ',';
    out += attributes_[p];
  }
  return out;
}

}  // namespace indepkit
