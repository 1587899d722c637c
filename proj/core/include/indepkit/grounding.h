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

#ifndef INDEPKIT_GROUNDING_H_
#define INDEPKIT_GROUNDING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "indepkit/relation.h"

namespace indepkit {

enum class EnumerationStatus {
  kActive,     // more groundings may follow
  kExhausted,  // every grounding has been produced
  kTruncated,  // stopped because the limit was reached; more exist
};

// Streams every grounding of a relation. Each copy of a tuple is grounded
// independently. Order is lexicographic over (tuple order, copy index,
// attribute order, domain order) with the last null cell varying fastest.
//
//   GroundingEnumerator e(r);
//   while (auto g = e.next()) use(*g);
class GroundingEnumerator {
 public:
  explicit GroundingEnumerator(const Relation& r,
                               std::optional<std::uint64_t> limit = {});

  // Next grounding as a canonical relation, or nullopt when the stream ends.
  std::optional<Relation> next();

  // Lower-level access: advances and returns the grounded tuple copies
  // (one entry per copy, in tuple order). Returns nullptr at the end.
  const std::vector<Tuple>* next_copies();

  EnumerationStatus status() const { return status_; }
  std::uint64_t produced() const { return produced_; }

 private:
  struct NullCell {
    std::size_t copy;
    int attribute;
    int domain_size;
  };

  const Relation* source_;
  std::optional<std::uint64_t> limit_;
  std::vector<Tuple> copies_;
  std::vector<NullCell> cells_;
  bool started_ = false;
  std::uint64_t produced_ = 0;
  EnumerationStatus status_ = EnumerationStatus::kActive;
};

// All groundings, or throws LimitError when there are more than `limit`.
std::vector<Relation> enumerate_groundings(const Relation& r,
                                           std::uint64_t limit);

// Builds a relation from grounded copies, merging equal tuples.
Relation relation_from_copies(const Relation& like,
                              const std::vector<Tuple>& copies);

// One tuple entry per copy, in row order.
std::vector<Tuple> expand_copies(const Relation& r);

// True iff `g` is a grounding of `r`: same schema, complete, and its copies
// can be matched one-to-one with the copies of `r` so that every copy agrees
// with its partner wherever the partner is non-null.
bool is_grounding_of(const Relation& g, const Relation& r);

}  // namespace indepkit

#endif  // INDEPKIT_GROUNDING_H_
