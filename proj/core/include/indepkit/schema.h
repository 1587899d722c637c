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

#ifndef INDEPKIT_SCHEMA_H_
#define INDEPKIT_SCHEMA_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indepkit/attribute_set.h"

namespace indepkit {

// A cell value: an index into the attribute's domain, or kNull.
using Value = std::int32_t;
inline constexpr Value kNull = -1;

// Text form of the null marker in files and rendered output.
inline constexpr std::string_view kNullToken = "*";

// Ordered attribute list with a finite domain per attribute. The null marker
// is implicit in every domain and never stored; a domain string "*" is an
// ordinary value. Every domain holds at least two non-null values.
class Schema {
 public:
  Schema(std::vector<std::string> attributes,
         std::vector<std::vector<std::string>> domains);

  // Every attribute gets the domain {"0", "1", ..., size-1}.
  static Schema uniform(std::vector<std::string> attributes, int domain_size);

  int size() const { return static_cast<int>(attributes_.size()); }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::string& name(int position) const { return attributes_[position]; }
  const std::vector<std::string>& domain(int position) const {
    return domains_[position];
  }
  int domain_size(int position) const {
    return static_cast<int>(domains_[position].size());
  }
  AttributeSet all() const { return AttributeSet::first(size()); }

  std::optional<int> find(std::string_view name) const;
  // Throws SchemaError for unknown names.
  int position(std::string_view name) const;
  AttributeSet set_of(const std::vector<std::string>& names) const;

  std::optional<Value> find_value(int position, std::string_view value) const;
  // Throws SchemaError when `value` is not in the domain.
  Value value(int position, std::string_view value) const;
  // Domain string for v, or "*" for kNull.
  std::string_view value_name(int position, Value v) const;

  // Sub-schema over the attributes of `set`, in schema order.
  Schema restrict(AttributeSet set) const;

  // Attribute names joined by ',' in schema order; "{}" when empty.
  std::string format_set(AttributeSet set) const;

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::vector<std::string> attributes_;
  std::vector<std::vector<std::string>> domains_;
};

}  // namespace indepkit

#endif  // INDEPKIT_SCHEMA_H_
