#pragma once
// The five covering problems under one roof. An Instance carries the problem
// structure plus the robust parameters (k, lambda); "items" are the things a
// solution buys (sets or edges) and "demands" are the things a scenario may
// request (elements, terminals, or pairs).
#include <string>
#include <utility>
#include <vector>

#include "rcover/graph.hpp"
#include "rcover/rational.hpp"

namespace rcover {

enum class ProblemKind { set_cover, steiner_tree, steiner_forest, min_cut, multicut };

std::string problem_name(ProblemKind kind);

struct Instance {
  ProblemKind kind = ProblemKind::set_cover;

  // set cover
  int universe = 0;
  std::vector<std::vector<int>> sets;  // sorted, deduplicated element lists
  std::vector<Rat> set_cost;           // second-stage base cost c
  std::vector<Rat> set_first_cost;     // first-stage cost b; empty unless nonuniform
  bool nonuniform = false;             // set-dependent inflation: b <= c, lambda fixed to 1

  // graph problems
  WeightedGraph graph;
  int root = -1;                          // min-cut always; Steiner tree optional
  std::vector<int> terminals;             // Steiner tree terminals / min-cut demand vertices
  std::vector<std::pair<int, int>> pairs; // Steiner forest / multicut demands

  int k = 1;
  Rat lambda = Rat(1);
};

// Number of demands a scenario draws from: elements, terminals, or pairs.
int demand_count(const Instance& inst);

// Human label for error messages and reports ("element 3", "pair 1 (2-7)").
std::string demand_label(const Instance& inst, int demand);

// Root used by the Steiner tree algorithms: inst.root, or the lowest-index
// terminal in the unrooted case.
int steiner_root(const Instance& inst);

// Structural + semantic validation (ids in range, k within the demand count,
// lambda >= 1, b <= c, every demand coverable). Throws std::invalid_argument
// with a message naming the offending entity.
void validate_instance(const Instance& inst);

int item_count(const Instance& inst);

// Item costs in the order items are indexed (set index / edge id). For
// nonuniform set cover these are the second-stage costs c, which is what the
// threshold grid measures.
std::vector<Rat> item_costs(const Instance& inst);

// First-stage item costs: b for nonuniform set cover, otherwise == item_costs.
std::vector<Rat> item_first_costs(const Instance& inst);

Rat items_cost(const Instance& inst, const std::vector<int>& items);
Rat items_first_cost(const Instance& inst, const std::vector<int>& items);

// Does `items` (bought both stages together) satisfy every demand in
// `demands`? Coverage for cut problems means deletion disconnects.
bool covers(const Instance& inst, const std::vector<int>& items,
            const std::vector<int>& demands);

struct SingletonCover {
  Rat cost;  // second-stage base cost of the items
  std::vector<int> items;
};

// Exact cheapest cover of one demand on its own: min-cost covering set,
// shortest path to the root / between the pair, or minimum cut. Polynomial
// for every problem.
SingletonCover exact_singleton_cover(const Instance& inst, int demand);

}  // namespace rcover
