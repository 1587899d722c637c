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

#ifndef INDEPKIT_RELATION_H_
#define INDEPKIT_RELATION_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "indepkit/attribute_set.h"
#include "indepkit/schema.h"

namespace indepkit {

// One value per schema attribute, in schema order.
using Tuple = std::vector<Value>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept;
};

bool is_complete(const Tuple& t);

// A distinct tuple together with its number of copies.
struct Row {
  Tuple values;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const Row&, const Row&) = default;
};

// Finite multiset of tuples over a schema, stored canonically: distinct
// tuples in order of first insertion, each with a positive multiplicity.
class Relation {
 public:
  explicit Relation(std::shared_ptr<const Schema> schema);
  Relation(std::shared_ptr<const Schema> schema, std::span<const Row> rows);

  // Validates `t` against the schema and merges it with an equal tuple if one
  // is already present. Multiplicity 0 is rejected.
  void add(Tuple t, std::uint64_t multiplicity = 1);
  // Convenience for fixtures: cells given as domain strings or "*".
  void add_text(const std::vector<std::string>& cells,
                std::uint64_t multiplicity = 1);

  const Schema& schema() const { return *schema_; }
  const std::shared_ptr<const Schema>& schema_ptr() const { return schema_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t distinct_size() const { return rows_.size(); }
  std::uint64_t total_multiplicity() const { return total_; }
  bool empty() const { return rows_.empty(); }
  std::uint64_t multiplicity(const Tuple& t) const;

  // Multiset equality: same schema, same tuples with the same multiplicities,
  // in any order.
  friend bool operator==(const Relation& a, const Relation& b);

 private:
  std::shared_ptr<const Schema> schema_;
  std::vector<Row> rows_;
  std::unordered_map<Tuple, std::size_t, TupleHash> index_;
  std::uint64_t total_ = 0;
};

// r(X): restriction to the attributes of `x` with multiplicities summed over
// tuples that agree on `x`. Throws SchemaError if `x` leaves the schema.
Relation project(const Relation& r, AttributeSet x);

// Restriction of a single tuple to the positions of `x`, in schema order.
Tuple restrict_tuple(const Tuple& t, AttributeSet x);

bool is_complete(const Relation& r);

// True iff no cell of a position in `x` is null.
bool is_complete_on(const Relation& r, AttributeSet x);

// Number of groundings: the product over every null cell of every tuple copy
// of that attribute's domain size. Saturates at UINT64_MAX.
std::uint64_t count_groundings(const Relation& r);

// Human-readable table, mainly for diagnostics and test failure messages.
std::string to_string(const Relation& r);

}  // namespace indepkit

#endif  // INDEPKIT_RELATION_H_
