#pragma once
// Fractional multicut via Garg-Konemann length scaling, certified against
// the concurrent flow it routes (weak duality, no floating point), and the
// Garg-Vazirani-Yannakakis region-growing rounding.
#include <utility>
#include <vector>

#include "rcover/graph.hpp"
#include "rcover/rational.hpp"

namespace rcover {

struct FractionalMulticut {
  std::vector<Rat> x;   // per edge; every pair has x-distance >= 1 exactly
  Rat value;            // sum c_e x_e
  Rat flow_lower;       // feasible multicommodity flow value: LP >= flow_lower
  Rat gap;              // value / flow_lower, <= 1+eps_f on return
  int iterations = 0;
};

// Approximates the minimum fractional multicut. The returned x is exactly
// feasible (lengths are normalized by the final shortest pair distance) and
// carries a certificate: value <= (1+eps_f) * flow_lower <= (1+eps_f) * LP.
// Internally restarts with a finer step if the certificate is not yet met,
// so the postcondition holds unconditionally. Throws when a pair is
// disconnected or coincident.
FractionalMulticut fractional_multicut(const WeightedGraph& g,
                                       const std::vector<std::pair<int, int>>& pairs,
                                       const Rat& eps_f = Rat(1, 20));

struct GvyRegion {
  int pair_index;            // pair whose source seeded the region
  Rat radius;                // chosen radius, < 1/2
  std::vector<int> vertices; // ball contents at that radius
  std::vector<int> cut;      // boundary edge ids
  Rat cut_cost;
  Rat volume;                // credited volume at the chosen radius
};

struct GvyResult {
  std::vector<int> cut_edges;  // union of region boundaries, sorted
  Rat cut_cost;
  std::vector<GvyRegion> regions;
  Rat log_bound;  // rational upper estimate of ln(#pairs + 1) used in the guarantee
};

// Region growing on a feasible fractional multicut x (pair x-distances >= 1).
// Each region satisfies cut_cost <= 2 * log_bound * volume exactly, which
// yields total cut cost <= 4 * log_bound * frac_value. Pairs are processed in
// index order; radii are exact rationals found by scanning the piecewise
// volume function.
GvyResult gvy_region_growing(const WeightedGraph& g,
                             const std::vector<std::pair<int, int>>& pairs,
                             const std::vector<Rat>& x, const Rat& frac_value);

}  // namespace rcover
