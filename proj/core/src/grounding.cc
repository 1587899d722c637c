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

#include "indepkit/grounding.h"

#include "indepkit/error.h"
#include "indepkit/flow.h"

namespace indepkit {

std::vector<Tuple> expand_copies(const Relation& r) {
  std::vector<Tuple> copies;
  copies.reserve(r.total_multiplicity());
  for (const Row& row : r.rows()) {
    for (std::uint64_t c = 0; c < row.multiplicity; ++c) {
      copies.push_back(row.values);
    }
  }
  return copies;
}

Relation relation_from_copies(const Relation& like,
                              const std::vector<Tuple>& copies) {
  Relation out(like.schema_ptr());
  for (const Tuple& t : copies) out.add(t);
  return out;
}

GroundingEnumerator::GroundingEnumerator(const Relation& r,
                                         std::optional<std::uint64_t> limit)
    : source_(&r), limit_(limit), copies_(expand_copies(r)) {
  for (std::size_t c = 0; c < copies_.size(); ++c) {
    for (int a = 0; a < r.schema().size(); ++a) {
      if (copies_[c][a] == kNull) {
        cells_.push_back({c, a, r.schema().domain_size(a)});
        copies_[c][a] = 0;
      }
    }
  }
}

const std::vector<Tuple>* GroundingEnumerator::next_copies() {
  if (status_ != EnumerationStatus::kActive) return nullptr;
  if (started_) {
    // Odometer step, last cell fastest.
    std::size_t i = cells_.size();
    bool advanced = false;
    while (i > 0) {
      --i;
      Value& v = copies_[cells_[i].copy][cells_[i].attribute];
      if (v + 1 < cells_[i].domain_size) {
        ++v;
        advanced = true;
        break;
      }
      v = 0;
    }
    if (!advanced) {
      status_ = EnumerationStatus::kExhausted;
      return nullptr;
    }
  }
  started_ = true;
  if (limit_ && produced_ >= *limit_) {
    status_ = EnumerationStatus::kTruncated;
    return nullptr;
  }
  ++produced_;
  return &copies_;
}

std::optional<Relation> GroundingEnumerator::next() {
  const std::vector<Tuple>* copies = next_copies();
  if (copies == nullptr) return std::nullopt;
  return relation_from_copies(*source_, *copies);
}

std::vector<Relation> enumerate_groundings(const Relation& r,
                                           std::uint64_t limit) {
  if (count_groundings(r) > limit) {
    throw LimitError("relation has more than " + std::to_string(limit) +
                     " groundings");
  }
  std::vector<Relation> out;
  GroundingEnumerator e(r);
  while (auto g = e.next()) out.push_back(std::move(*g));
  return out;
}

bool is_grounding_of(const Relation& g, const Relation& r) {
  if (!(g.schema() == r.schema())) return false;
  if (g.total_multiplicity() != r.total_multiplicity()) return false;
  if (!is_complete(g)) return false;
  FlowNetwork net;
  const int source = net.add_node();
  const int sink = net.add_node();
  net.set_source(source);
  net.set_sink(sink);
  std::vector<int> g_nodes, r_nodes;
  for (const Row& row : g.rows()) {
    g_nodes.push_back(net.add_node());
    net.add_edge(source, g_nodes.back(),
                 static_cast<std::int64_t>(row.multiplicity));
  }
  for (const Row& row : r.rows()) {
    r_nodes.push_back(net.add_node());
    net.add_edge(r_nodes.back(), sink,
                 static_cast<std::int64_t>(row.multiplicity));
  }
  const int n = r.schema().size();
  for (std::size_t i = 0; i < g.rows().size(); ++i) {
    for (std::size_t j = 0; j < r.rows().size(); ++j) {
      const Tuple& a = g.rows()[i].values;
      const Tuple& b = r.rows()[j].values;
      bool ok = true;
      for (int k = 0; k < n && ok; ++k) ok = b[k] == kNull || a[k] == b[k];
      if (ok) {
        net.add_edge(g_nodes[i], r_nodes[j],
                     static_cast<std::int64_t>(g.rows()[i].multiplicity));
      }
    }
  }
  return max_flow(net).value ==
         static_cast<std::int64_t>(g.total_multiplicity());
}

}  // namespace indepkit
