#pragma once
// Exact max-flow / min-cut (Edmonds-Karp on rational capacities) and the
// Gusfield form of the Gomory-Hu cut tree.
#include <vector>

#include "rcover/rational.hpp"
#include "rcover/graph.hpp"

namespace rcover {

struct MinCutResult {
  Rat value;
  std::vector<int> cut_edges;    // edge ids crossing the cut, sorted
  std::vector<char> source_side; // per original vertex; the minimal source side
};

// Min cut separating `sinks` from `sources` (either side may hold several
// vertices). Flow value equals the certified cut weight by construction.
// `edge_enabled` (optional) restricts to a subgraph; disabled edges never
// appear in the cut. Source/sink overlap is a logic error.
MinCutResult max_flow_min_cut(const WeightedGraph& g, const std::vector<int>& sources,
                              const std::vector<int>& sinks,
                              const std::vector<char>* edge_enabled = nullptr);

Rat min_cut_value(const WeightedGraph& g, int s, int t,
                  const std::vector<char>* edge_enabled = nullptr);

struct GomoryHuTree {
  std::vector<int> parent;   // parent[v], parent[0] = -1
  std::vector<Rat> label;    // cut value between v and parent[v]
};

// Gusfield's algorithm: n-1 max-flow calls, no contractions. The tree's
// minimum label on the u-v path equals the exact u-v min cut value.
GomoryHuTree gomory_hu_tree(const WeightedGraph& g);

Rat gomory_hu_query(const GomoryHuTree& t, int u, int v);

}  // namespace rcover
