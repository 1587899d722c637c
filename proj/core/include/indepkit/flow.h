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

#ifndef INDEPKIT_FLOW_H_
#define INDEPKIT_FLOW_H_

#include <cstdint>
#include <vector>

namespace indepkit {

// Directed network with integral capacities and a designated source and
// sink. Nodes are 0..node_count()-1.
class FlowNetwork {
 public:
  struct Edge {
    int from;
    int to;
    std::int64_t capacity;
  };

  FlowNetwork() = default;
  explicit FlowNetwork(int node_count) : node_count_(node_count) {}

  int add_node() { return node_count_++; }
  // Returns the edge id. Throws std::invalid_argument on bad endpoints or a
  // negative capacity.
  int add_edge(int from, int to, std::int64_t capacity);

  void set_source(int node) { source_ = node; }
  void set_sink(int node) { sink_ = node; }

  int node_count() const { return node_count_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Source and sink are set and distinct, no edge enters the source and no
  // edge leaves the sink.
  bool valid() const;

 private:
  int node_count_ = 0;
  int source_ = -1;
  int sink_ = -1;
  std::vector<Edge> edges_;
};

struct FlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> edge_flow;  // indexed by edge id
  int augmenting_paths = 0;
};

// Edmonds–Karp: shortest augmenting paths found by breadth-first search,
// neighbours visited in edge insertion order. Throws std::invalid_argument
// for an invalid network.
FlowResult max_flow(const FlowNetwork& network);

}  // namespace indepkit

#endif  // INDEPKIT_FLOW_H_
