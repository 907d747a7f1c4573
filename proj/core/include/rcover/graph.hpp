#pragma once
// Undirected weighted graphs with exact rational costs, plus the handful of
// polynomial subroutines the covering algorithms lean on: Dijkstra under a
// vertex contraction, metric-closure spanning trees, and subgraph
// connectivity checks.
#include <utility>
#include <vector>

#include "rcover/rational.hpp"

namespace rcover {

struct WeightedGraph {
  struct Edge {
    int u = -1, v = -1;
    Rat cost;
  };

  int n = 0;
  std::vector<Edge> edges;
  // incidence[v] = edge ids touching v
  std::vector<std::vector<int>> incidence;

  int other_end(int edge_id, int at) const {
    const Edge& e = edges[edge_id];
    return e.u == at ? e.v : e.u;
  }
};

// Builds a graph, merging parallel edges by cost sum. Throws
// std::invalid_argument on self-loops, negative costs or bad endpoints.
WeightedGraph make_graph(int n, const std::vector<std::tuple<int, int, Rat>>& edge_list);

Rat edge_set_cost(const WeightedGraph& g, const std::vector<int>& edge_ids);

// Union-find over graph vertices; quotient graphs model "already connected"
// vertex pairs (contracted first-stage or selected pairs).
class VertexContraction {
 public:
  explicit VertexContraction(int n);
  int find(int v) const;
  void merge(int u, int v);
  bool same(int u, int v) const { return find(u) == find(v); }

 private:
  mutable std::vector<int> parent_;
};

struct ShortestPaths {
  // Distances are per original vertex (vertices in a contracted class share
  // a value). unreachable[v] marks infinite distance.
  std::vector<Rat> dist;
  std::vector<char> reachable;
  // Parent edge id per contracted class representative, -1 at sources.
  std::vector<int> parent_edge;
  const VertexContraction* contraction = nullptr;
};

// Multi-source Dijkstra. `contraction` (optional) identifies vertex classes
// whose internal distance is zero; `edge_enabled` (optional, size |E|)
// restricts the edge set. Exact rational labels throughout.
ShortestPaths shortest_paths(const WeightedGraph& g, const std::vector<int>& sources,
                             const VertexContraction* contraction = nullptr,
                             const std::vector<char>* edge_enabled = nullptr);

// Original-edge path from some source to v (empty when v is itself a source
// up to contraction). Requires reachable[v].
std::vector<int> extract_path(const WeightedGraph& g, const ShortestPaths& sp, int v);

struct MetricMst {
  // Tree edges of the closure as (terminal idx a, terminal idx b, distance).
  std::vector<std::tuple<int, int, Rat>> closure_edges;
  Rat closure_cost;          // sum of closure tree edge lengths
  std::vector<int> edge_ids; // expansion to original edges, deduplicated
  Rat bought_cost;           // cost of edge_ids (<= closure_cost)
};

// MST of the metric closure over `terminals` (>= 1 vertex), expanded back to
// original edges. Ties broken lexicographically by (distance, a, b) with a,b
// positions in the `terminals` list. Throws if the terminals are not mutually
// reachable.
MetricMst metric_closure_mst(const WeightedGraph& g, const std::vector<int>& terminals);

// Connectivity of `u` and `v` in the subgraph spanned by edge_ids (plus the
// optional contraction).
bool connected_in_subset(const WeightedGraph& g, const std::vector<int>& edge_ids, int u, int v,
                         const VertexContraction* contraction = nullptr);

// Component labels (0..c-1) of the subgraph spanned by edge_ids.
std::vector<int> subset_components(const WeightedGraph& g, const std::vector<int>& edge_ids);

// Sorted union of edge id lists with duplicates removed.
std::vector<int> merge_edge_sets(std::initializer_list<const std::vector<int>*> sets);

}  // namespace rcover
