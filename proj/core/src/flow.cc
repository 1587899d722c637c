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

#include "indepkit/flow.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace indepkit {

int FlowNetwork::add_edge(int from, int to, std::int64_t capacity) {
  if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  edges_.push_back({from, to, capacity});
  return static_cast<int>(edges_.size()) - 1;
}

bool FlowNetwork::valid() const {
  if (source_ < 0 || sink_ < 0 || source_ >= node_count_ ||
      sink_ >= node_count_ || source_ == sink_) {
    return false;
  }
  return std::none_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.to == source_ || e.from == sink_;
  });
}

FlowResult max_flow(const FlowNetwork& network) {
  if (!network.valid()) throw std::invalid_argument("invalid flow network");
  const int n = network.node_count();
  const auto& edges = network.edges();

  // Residual arcs: 2i is edge i forward, 2i+1 its reverse.
  std::vector<std::vector<int>> adj(n);
  std::vector<std::int64_t> residual(2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].from].push_back(static_cast<int>(2 * i));
    adj[edges[i].to].push_back(static_cast<int>(2 * i + 1));
    residual[2 * i] = edges[i].capacity;
    residual[2 * i + 1] = 0;
  }
  auto head = [&](int arc) {
    const auto& e = edges[arc / 2];
    return arc % 2 == 0 ? e.to : e.from;
  };

  FlowResult result;
  const int s = network.source();
  const int t = network.sink();
  std::vector<int> via(n);
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> queue{s};
    via[s] = -2;
    while (!queue.empty() && via[t] == -1) {
      const int u = queue.front();
      queue.pop_front();
      for (int arc : adj[u]) {
        const int v = head(arc);
        if (via[v] == -1 && residual[arc] > 0) {
          via[v] = arc;
          queue.push_back(v);
        }
      }
    }
    if (via[t] == -1) break;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (int v = t; v != s; v = head(via[v] ^ 1)) {
      push = std::min(push, residual[via[v]]);
    }
    for (int v = t; v != s; v = head(via[v] ^ 1)) {
      residual[via[v]] -= push;
      residual[via[v] ^ 1] += push;
    }
    result.value += push;
    ++result.augmenting_paths;
  }
  result.edge_flow.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    result.edge_flow[i] = residual[2 * i + 1];
  }
  return result;
}

}  // namespace indepkit
