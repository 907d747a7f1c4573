#pragma once
// Exact LP machinery for 0/1 covering systems: a dense rational simplex
// (Bland's rule, so finite termination) run on the packing dual, which
// yields both the fractional cover and the optimal dual packing.
#include <utility>
#include <vector>

#include "rcover/graph.hpp"
#include "rcover/rational.hpp"

namespace rcover {

struct CoveringLpResult {
  Rat value;            // optimal objective (= primal = dual by strong duality)
  std::vector<Rat> x;   // fractional cover, per column
  std::vector<Rat> y;   // optimal packing dual, per row
};

// min sum_j costs[j] x_j  s.t.  sum_{j in rows[i]} x_j >= 1 for every i, x >= 0.
// rows[i] lists the columns covering row i. Throws std::invalid_argument when
// some row is uncoverable (empty) or a cost is negative.
CoveringLpResult solve_covering_lp(const std::vector<Rat>& costs,
                                   const std::vector<std::vector<int>>& rows);

struct PathLpResult {
  Rat value;
  std::vector<Rat> x;                  // per edge
  std::vector<std::vector<int>> rows;  // generated path rows (edge id lists)
};

// Exact optimum of min c.x s.t. x-length of every s_i-t_i path >= 1, x >= 0,
// by row generation with exact Dijkstra separation. Throws when some pair is
// disconnected.
PathLpResult solve_multicut_path_lp(const WeightedGraph& g,
                                    const std::vector<std::pair<int, int>>& pairs);

}  // namespace rcover
