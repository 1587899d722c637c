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

#include "indepkit/relation.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "indepkit/error.h"

namespace indepkit {

std::size_t TupleHash::operator()(const Tuple& t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Value v : t) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool is_complete(const Tuple& t) {
  return std::find(t.begin(), t.end(), kNull) == t.end();
}

Relation::Relation(std::shared_ptr<const Schema> schema)
    : schema_(std::move(schema)) {
  if (!schema_) throw SchemaError("relation without schema");
}

Relation::Relation(std::shared_ptr<const Schema> schema,
                   std::span<const Row> rows)
    : Relation(std::move(schema)) {
  for (const Row& row : rows) add(row.values, row.multiplicity);
}

void Relation::add(Tuple t, std::uint64_t multiplicity) {
  if (multiplicity == 0) throw SchemaError("multiplicity must be positive");
  if (static_cast<int>(t.size()) != schema_->size()) {
    throw SchemaError("tuple has " + std::to_string(t.size()) +
                      " values, schema has " + std::to_string(schema_->size()));
  }
  for (int i = 0; i < schema_->size(); ++i) {
    if (t[i] != kNull && (t[i] < 0 || t[i] >= schema_->domain_size(i))) {
      throw SchemaError("value out of the domain of '" + schema_->name(i) + "'");
    }
  }
  total_ += multiplicity;
  auto it = index_.find(t);
  if (it != index_.end()) {
    rows_[it->second].multiplicity += multiplicity;
    return;
  }
  index_.emplace(t, rows_.size());
  rows_.push_back({std::move(t), multiplicity});
}

void Relation::add_text(const std::vector<std::string>& cells,
                        std::uint64_t multiplicity) {
  if (static_cast<int>(cells.size()) != schema_->size()) {
    throw SchemaError("row has " + std::to_string(cells.size()) +
                      " cells, schema has " + std::to_string(schema_->size()));
  }
  Tuple t(cells.size());
  for (int i = 0; i < schema_->size(); ++i) {
    t[i] = cells[i] == kNullToken ? kNull : schema_->value(i, cells[i]);
  }
  add(std::move(t), multiplicity);
}

std::uint64_t Relation::multiplicity(const Tuple& t) const {
  auto it = index_.find(t);
  return it == index_.end() ? 0 : rows_[it->second].multiplicity;
}

bool operator==(const Relation& a, const Relation& b) {
  if (!(a.schema() == b.schema())) return false;
  if (a.rows_.size() != b.rows_.size() || a.total_ != b.total_) return false;
  for (const Row& row : a.rows_) {
    if (b.multiplicity(row.values) != row.multiplicity) return false;
  }
  return true;
}

Tuple restrict_tuple(const Tuple& t, AttributeSet x) {
  Tuple out;
  out.reserve(x.size());
  for (int p : x.positions()) out.push_back(t[p]);
  return out;
}

Relation project(const Relation& r, AttributeSet x) {
  auto schema = std::make_shared<const Schema>(r.schema().restrict(x));
  Relation out(std::move(schema));
  const std::vector<int> pos = x.positions();
  for (const Row& row : r.rows()) {
    Tuple t;
    t.reserve(pos.size());
    for (int p : pos) t.push_back(row.values[p]);
    out.add(std::move(t), row.multiplicity);
  }
  return out;
}

bool is_complete(const Relation& r) {
  return std::all_of(r.rows().begin(), r.rows().end(),
                     [](const Row& row) { return is_complete(row.values); });
}

bool is_complete_on(const Relation& r, AttributeSet x) {
  for (const Row& row : r.rows()) {
    for (int p : x.positions()) {
      if (row.values[p] == kNull) return false;
    }
  }
  return true;
}

std::uint64_t count_groundings(const Relation& r) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const Row& row : r.rows()) {
    for (int i = 0; i < r.schema().size(); ++i) {
      if (row.values[i] != kNull) continue;
      const auto d = static_cast<std::uint64_t>(r.schema().domain_size(i));
      for (std::uint64_t c = 0; c < row.multiplicity; ++c) {
        if (total > kMax / d) return kMax;
        total *= d;
      }
    }
  }
  return total;
}

std::string to_string(const Relation& r) {
  std::ostringstream out;
  const Schema& s = r.schema();
  for (int i = 0; i < s.size(); ++i) out << (i ? " " : "") << s.name(i);
  out << " | #\n";
  for (const Row& row : r.rows()) {
    for (int i = 0; i < s.size(); ++i) {
      out << (i ? " " : "") << s.value_name(i, row.values[i]);
    }
    out << " | " << row.multiplicity << '\n';
  }
  return out.str();
}

}  // namespace indepkit
