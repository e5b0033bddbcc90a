#include "hexaframe/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace hexaframe {

FlowNetwork::FlowNetwork(int nodes) : adjacency_(nodes) {
  if (nodes < 2) throw std::invalid_argument("flow network needs at least two nodes");
}

int FlowNetwork::add_arc(int from, int to, int capacity) {
  if (capacity < 0) throw std::invalid_argument("arc capacity must be non-negative");
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back(Arc{to, capacity, 0});
  adjacency_.at(from).push_back(id);
  arcs_.push_back(Arc{from, 0, 0});
  adjacency_.at(to).push_back(id + 1);
  return id;
}

int FlowNetwork::flow_on(int arc) const { return arcs_.at(arc).flow; }

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(adjacency_.size(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop();
    for (int id : adjacency_[node]) {
      const Arc& arc = arcs_[id];
      if (arc.capacity > arc.flow && level_[arc.to] < 0) {
        level_[arc.to] = level_[node] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

int FlowNetwork::push(int node, int sink, int limit) {
  if (node == sink) return limit;
  for (auto& i = cursor_[node]; i < adjacency_[node].size(); ++i) {
    const int id = adjacency_[node][i];
    Arc& arc = arcs_[id];
    if (arc.capacity <= arc.flow || level_[arc.to] != level_[node] + 1) continue;
    const int pushed = push(arc.to, sink, std::min(limit, arc.capacity - arc.flow));
    if (pushed > 0) {
      arc.flow += pushed;
      arcs_[id ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

int FlowNetwork::max_flow(int source, int sink) {
  int total = 0;
  while (build_levels(source, sink)) {
    cursor_.assign(adjacency_.size(), 0);
    while (int pushed = push(source, sink, std::numeric_limits<int>::max())) total += pushed;
  }
  return total;
}

}  // namespace hexaframe
