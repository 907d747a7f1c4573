#include "rcover/instance.hpp"

#include <algorithm>
#include <stdexcept>

#include "rcover/maxflow.hpp"

namespace rcover {

std::string problem_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::set_cover: return "setcover";
    case ProblemKind::steiner_tree: return "steiner-tree";
    case ProblemKind::steiner_forest: return "steiner-forest";
    case ProblemKind::min_cut: return "mincut";
    case ProblemKind::multicut: return "multicut";
  }
  return "?";
}

int demand_count(const Instance& inst) {
  switch (inst.kind) {
    case ProblemKind::set_cover: return inst.universe;
    case ProblemKind::steiner_tree:
    case ProblemKind::min_cut: return (int)inst.terminals.size();
    case ProblemKind::steiner_forest:
    case ProblemKind::multicut: return (int)inst.pairs.size();
  }
  return 0;
}

std::string demand_label(const Instance& inst, int demand) {
  switch (inst.kind) {
    case ProblemKind::set_cover: return "element " + std::to_string(demand);
    case ProblemKind::steiner_tree: return "terminal " + std::to_string(inst.terminals[demand]);
    case ProblemKind::min_cut: return "vertex " + std::to_string(inst.terminals[demand]);
    case ProblemKind::steiner_forest:
    case ProblemKind::multicut:
      return "pair " + std::to_string(demand) + " (" +
             std::to_string(inst.pairs[demand].first) + "-" +
             std::to_string(inst.pairs[demand].second) + ")";
  }
  return "?";
}

int steiner_root(const Instance& inst) {
  if (inst.root >= 0) return inst.root;
  if (inst.terminals.empty()) throw std::invalid_argument("unrooted instance has no terminals");
  return *std::min_element(inst.terminals.begin(), inst.terminals.end());
}

namespace {

void check_vertex(const Instance& inst, int v, const std::string& what) {
  if (v < 0 || v >= inst.graph.n)
    throw std::invalid_argument(what + " " + std::to_string(v) + " is not a vertex (n=" +
                                std::to_string(inst.graph.n) + ")");
}

}  // namespace

void validate_instance(const Instance& inst) {
  if (inst.k < 1) throw std::invalid_argument("k must be >= 1");
  if (inst.lambda < 1) throw std::invalid_argument("lambda must be >= 1");

  if (inst.kind == ProblemKind::set_cover) {
    if (inst.universe < 1) throw std::invalid_argument("set cover universe is empty");
    if (inst.sets.empty()) throw std::invalid_argument("set cover has no sets");
    if (inst.set_cost.size() != inst.sets.size())
      throw std::invalid_argument("set cost list does not match the number of sets");
    if (inst.nonuniform) {
      if (inst.set_first_cost.size() != inst.sets.size())
        throw std::invalid_argument("first-stage cost list does not match the number of sets");
      if (inst.lambda != 1)
        throw std::invalid_argument(
            "nonuniform set cover carries its inflation in the costs; lambda must be 1");
    }
    std::vector<char> covered(inst.universe, 0);
    for (std::size_t r = 0; r < inst.sets.size(); ++r) {
      if (inst.set_cost[r] < 0)
        throw std::invalid_argument("set " + std::to_string(r) + " has negative cost");
      if (inst.nonuniform) {
        if (inst.set_first_cost[r] < 0)
          throw std::invalid_argument("set " + std::to_string(r) + " has negative first-stage cost");
        if (inst.set_first_cost[r] > inst.set_cost[r])
          throw std::invalid_argument("set " + std::to_string(r) +
                                      " has first-stage cost above its second-stage cost");
      }
      for (int e : inst.sets[r]) {
        if (e < 0 || e >= inst.universe)
          throw std::invalid_argument("set " + std::to_string(r) + " contains element " +
                                      std::to_string(e) + " outside the universe");
        covered[e] = 1;
      }
    }
    for (int e = 0; e < inst.universe; ++e)
      if (!covered[e])
        throw std::invalid_argument("element " + std::to_string(e) + " is covered by no set");
  } else {
    if (inst.graph.n < 1) throw std::invalid_argument("graph has no vertices");
    int m = demand_count(inst);
    if (m < 1) throw std::invalid_argument("instance has no demands");

    if (inst.kind == ProblemKind::steiner_tree || inst.kind == ProblemKind::min_cut) {
      for (int t : inst.terminals) check_vertex(inst, t, "terminal");
      if (inst.kind == ProblemKind::min_cut) {
        if (inst.root < 0) throw std::invalid_argument("min-cut instance needs a root");
        check_vertex(inst, inst.root, "root");
        for (int t : inst.terminals)
          if (t == inst.root)
            throw std::invalid_argument("terminal " + std::to_string(t) + " equals the root");
      } else {
        if (inst.root >= 0) check_vertex(inst, inst.root, "root");
        int r = steiner_root(inst);
        ShortestPaths sp = shortest_paths(inst.graph, {r});
        for (int t : inst.terminals)
          if (!sp.reachable[t])
            throw std::invalid_argument("terminal " + std::to_string(t) +
                                        " is unreachable from the root");
      }
    } else {
      for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
        auto [s, t] = inst.pairs[i];
        check_vertex(inst, s, "pair endpoint");
        check_vertex(inst, t, "pair endpoint");
        if (s == t)
          throw std::invalid_argument("pair " + std::to_string(i) + " endpoints coincide");
        ShortestPaths sp = shortest_paths(inst.graph, {s});
        if (!sp.reachable[t]) {
          if (inst.kind == ProblemKind::steiner_forest)
            throw std::invalid_argument("pair " + std::to_string(i) +
                                        " endpoints are in different components");
          throw std::invalid_argument("pair " + std::to_string(i) +
                                      " is already disconnected; nothing to cut");
        }
      }
    }
  }

  if (inst.k > demand_count(inst))
    throw std::invalid_argument("k exceeds the number of demands (" +
                                std::to_string(demand_count(inst)) + ")");
}

int item_count(const Instance& inst) {
  return inst.kind == ProblemKind::set_cover ? (int)inst.sets.size() : (int)inst.graph.edges.size();
}

std::vector<Rat> item_costs(const Instance& inst) {
  if (inst.kind == ProblemKind::set_cover) return inst.set_cost;
  std::vector<Rat> out;
  out.reserve(inst.graph.edges.size());
  for (const auto& e : inst.graph.edges) out.push_back(e.cost);
  return out;
}

std::vector<Rat> item_first_costs(const Instance& inst) {
  if (inst.kind == ProblemKind::set_cover && inst.nonuniform) return inst.set_first_cost;
  return item_costs(inst);
}

namespace {
Rat sum_costs(const std::vector<Rat>& costs, const std::vector<int>& items) {
  Rat total = 0;
  for (int i : items) total += costs[i];
  return total;
}
}  // namespace

Rat items_cost(const Instance& inst, const std::vector<int>& items) {
  if (inst.kind == ProblemKind::set_cover) return sum_costs(inst.set_cost, items);
  return edge_set_cost(inst.graph, items);
}

Rat items_first_cost(const Instance& inst, const std::vector<int>& items) {
  if (inst.kind == ProblemKind::set_cover && inst.nonuniform)
    return sum_costs(inst.set_first_cost, items);
  return items_cost(inst, items);
}

bool covers(const Instance& inst, const std::vector<int>& items,
            const std::vector<int>& demands) {
  switch (inst.kind) {
    case ProblemKind::set_cover: {
      std::vector<char> got(inst.universe, 0);
      for (int r : items)
        for (int e : inst.sets[r]) got[e] = 1;
      for (int d : demands)
        if (!got[d]) return false;
      return true;
    }
    case ProblemKind::steiner_tree: {
      int r = steiner_root(inst);
      for (int d : demands)
        if (!connected_in_subset(inst.graph, items, inst.terminals[d], r)) return false;
      return true;
    }
    case ProblemKind::steiner_forest: {
      for (int d : demands)
        if (!connected_in_subset(inst.graph, items, inst.pairs[d].first, inst.pairs[d].second))
          return false;
      return true;
    }
    case ProblemKind::min_cut:
    case ProblemKind::multicut: {
      std::vector<char> enabled(inst.graph.edges.size(), 1);
      for (int id : items) enabled[id] = 0;
      // One source-set BFS per demand on the remaining edges.
      for (int d : demands) {
        int s = inst.kind == ProblemKind::min_cut ? inst.root : inst.pairs[d].first;
        int t = inst.kind == ProblemKind::min_cut ? inst.terminals[d] : inst.pairs[d].second;
        ShortestPaths sp = shortest_paths(inst.graph, {s}, nullptr, &enabled);
        if (sp.reachable[t]) return false;
      }
      return true;
    }
  }
  return false;
}

SingletonCover exact_singleton_cover(const Instance& inst, int demand) {
  SingletonCover out;
  out.cost = 0;
  switch (inst.kind) {
    case ProblemKind::set_cover: {
      int best = -1;
      for (std::size_t r = 0; r < inst.sets.size(); ++r) {
        bool has = std::binary_search(inst.sets[r].begin(), inst.sets[r].end(), demand);
        if (has && (best < 0 || inst.set_cost[r] < inst.set_cost[best])) best = (int)r;
      }
      if (best < 0) throw std::invalid_argument("element " + std::to_string(demand) +
                                                " is covered by no set");
      out.cost = inst.set_cost[best];
      out.items = {best};
      return out;
    }
    case ProblemKind::steiner_tree: {
      int r = steiner_root(inst);
      int t = inst.terminals[demand];
      if (t == r) return out;
      ShortestPaths sp = shortest_paths(inst.graph, {r});
      out.items = extract_path(inst.graph, sp, t);
      out.cost = sp.dist[t];
      return out;
    }
    case ProblemKind::steiner_forest: {
      auto [s, t] = inst.pairs[demand];
      ShortestPaths sp = shortest_paths(inst.graph, {s});
      out.items = extract_path(inst.graph, sp, t);
      out.cost = sp.dist[t];
      return out;
    }
    case ProblemKind::min_cut: {
      MinCutResult cut = max_flow_min_cut(inst.graph, {inst.root}, {inst.terminals[demand]});
      out.items = cut.cut_edges;
      out.cost = cut.value;
      return out;
    }
    case ProblemKind::multicut: {
      auto [s, t] = inst.pairs[demand];
      MinCutResult cut = max_flow_min_cut(inst.graph, {s}, {t});
      out.items = cut.cut_edges;
      out.cost = cut.value;
      return out;
    }
  }
  return out;
}

}  // namespace rcover
