#pragma once

#include <cstdint>
#include <vector>

namespace hexaframe {

/// Integral max-flow (Dinic). Arcs are explored in insertion order, so the
/// resulting flow is a deterministic function of the construction sequence.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes);

  /// Returns an arc id usable with flow_on().
  int add_arc(int from, int to, int capacity);

  int max_flow(int source, int sink);

  int flow_on(int arc) const;
  int node_count() const { return static_cast<int>(adjacency_.size()); }

 private:
  struct Arc {
    int to;
    int capacity;
    int flow;
  };

  bool build_levels(int source, int sink);
  int push(int node, int sink, int limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace hexaframe
