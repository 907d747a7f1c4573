#include "rcover/steiner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace rcover {

Rat steiner_tree_beta(const Rat& lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  Rat inv = Rat(1) / lambda;
  return Rat(2) - inv + sqrt_upper(Rat(4) + inv * inv);
}

TerminalNet build_terminal_net(const WeightedGraph& g, const std::vector<int>& terminals,
                               int root, const Rat& threshold) {
  TerminalNet net;
  net.root = root;
  net.threshold = threshold;
  net.members.push_back(root);
  // dist[v] = exact distance to the current net; admitting u folds u's
  // single-source distances in, so each admission costs one Dijkstra.
  ShortestPaths sp = shortest_paths(g, {root});
  std::vector<Rat> dist = sp.dist;
  std::vector<char> reach = sp.reachable;
  for (int t : terminals) {
    if (!reach[t] || dist[t] > threshold) {
      net.members.push_back(t);
      ShortestPaths one = shortest_paths(g, {t});
      for (int v = 0; v < g.n; ++v) {
        if (!one.reachable[v]) continue;
        if (!reach[v] || one.dist[v] < dist[v]) {
          reach[v] = 1;
          dist[v] = one.dist[v];
        }
      }
    }
  }
  net.to_net = shortest_paths(g, net.members);
  return net;
}

DiscriminatingOutput discriminating_steiner_tree(const Instance& inst, const Rat& T) {
  if (T < 0) throw std::invalid_argument("negative threshold");
  const WeightedGraph& g = inst.graph;
  int root = steiner_root(inst);
  Rat beta = steiner_tree_beta(inst.lambda);

  DiscriminatingOutput out;
  out.T = T;
  out.beta = beta;
  out.alpha1 = 2 * beta / (beta - 2);
  out.alpha2 = 2;

  Rat bar = beta * T / inst.k;
  TerminalNet net = build_terminal_net(g, inst.terminals, root, bar);
  if (net.members.size() > 1) {
    MetricMst mst = metric_closure_mst(g, net.members);
    out.first_stage = mst.edge_ids;
    out.first_stage_cost = mst.bought_cost;
  }

  out.singleton_augment.resize(inst.terminals.size());
  out.augment_cost.assign(inst.terminals.size(), Rat(0));
  for (size_t i = 0; i < inst.terminals.size(); ++i) {
    int t = inst.terminals[i];
    assert(net.to_net.reachable[t]);
    out.singleton_augment[i] = extract_path(g, net.to_net, t);
    out.augment_cost[i] = edge_set_cost(g, out.singleton_augment[i]);
    assert(out.augment_cost[i] <= bar);
  }
  return out;
}

WitnessResult maxmin_steiner_tree_witness(const Instance& inst, const Rat& T) {
  const WeightedGraph& g = inst.graph;
  int root = steiner_root(inst);
  Rat beta = steiner_tree_beta(inst.lambda);
  Rat bar = beta * T / inst.k;
  TerminalNet net = build_terminal_net(g, inst.terminals, root, bar);

  // Map a net vertex back to the first terminal listed at that vertex.
  std::map<int, int> demand_at;
  for (size_t i = 0; i < inst.terminals.size(); ++i)
    demand_at.emplace(inst.terminals[i], int(i));

  std::vector<int> others(net.members.begin() + 1, net.members.end());
  WitnessResult w;
  if (int(others.size()) <= inst.k) {
    // Connecting all net terminals costs at least half the closure MST.
    for (int v : others) w.demands.push_back(demand_at.at(v));
    w.certificate = net.members.size() > 1
                        ? Rat(metric_closure_mst(g, net.members).closure_cost / 2)
                        : Rat(0);
  } else {
    // k net vertices are pairwise > beta*T/k apart and equally far from the
    // root, so their beta*T/(2k)-balls are disjoint and each must be exited.
    std::sort(others.begin(), others.end());
    others.resize(inst.k);
    for (int v : others) w.demands.push_back(demand_at.at(v));
    w.certificate = beta * T / 2;
  }
  std::sort(w.demands.begin(), w.demands.end());
  return w;
}

// ---------------------------------------------------------------------------
// Primal-dual Steiner forest (synchronized moat growing, exact event times).

GwForest gw_steiner_forest(const WeightedGraph& g,
                           const std::vector<std::pair<int, int>>& pairs) {
  GwForest res;
  res.cost = 0;
  res.dual = 0;
  if (pairs.empty()) return res;

  VertexContraction comp(g.n);
  std::vector<Rat> covered(g.edges.size(), Rat(0));  // moat growth charged to each edge
  std::vector<int> bought;  // in buy order

  auto component_active = [&](int rep) {
    // Active iff some pair has exactly one endpoint inside.
    for (const auto& [s, t] : pairs) {
      if ((comp.find(s) == rep) != (comp.find(t) == rep)) return true;
    }
    return false;
  };

  for (int iter = 0; iter <= int(g.edges.size()) + g.n; ++iter) {
    std::vector<char> active(g.n, 0);
    bool any_active = false;
    for (int v = 0; v < g.n; ++v) {
      if (comp.find(v) == v && component_active(v)) {
        active[v] = 1;
        any_active = true;
      }
    }
    if (!any_active) break;

    // Next event: an edge between distinct components becomes fully covered.
    int best = -1;
    Rat best_dt;
    for (size_t e = 0; e < g.edges.size(); ++e) {
      int ru = comp.find(g.edges[e].u), rv = comp.find(g.edges[e].v);
      if (ru == rv) continue;
      int speed = int(active[ru]) + int(active[rv]);
      if (speed == 0) continue;
      Rat dt = (g.edges[e].cost - covered[e]) / speed;
      if (best < 0 || dt < best_dt) {
        best = int(e);
        best_dt = dt;
      }
    }
    if (best < 0)
      throw std::invalid_argument("steiner forest pair endpoints are not connected");
    assert(best_dt >= 0);

    int active_count = 0;
    for (int v = 0; v < g.n; ++v) active_count += active[v];
    res.dual += best_dt * active_count;
    for (size_t e = 0; e < g.edges.size(); ++e) {
      int ru = comp.find(g.edges[e].u), rv = comp.find(g.edges[e].v);
      if (ru == rv) continue;
      covered[e] += best_dt * (int(active[ru]) + int(active[rv]));
      assert(covered[e] <= g.edges[e].cost);
    }
    bought.push_back(best);
    comp.merge(g.edges[best].u, g.edges[best].v);
  }

  // Reverse-delete: drop any edge whose removal keeps all pairs connected.
  std::vector<char> keep(bought.size(), 1);
  for (int i = int(bought.size()) - 1; i >= 0; --i) {
    keep[i] = 0;
    std::vector<int> rest;
    for (size_t j = 0; j < bought.size(); ++j)
      if (keep[j]) rest.push_back(bought[j]);
    for (const auto& [s, t] : pairs) {
      if (!connected_in_subset(g, rest, s, t)) {
        keep[i] = 1;
        break;
      }
    }
  }
  for (size_t j = 0; j < bought.size(); ++j)
    if (keep[j]) res.edges.push_back(bought[j]);
  std::sort(res.edges.begin(), res.edges.end());
  res.cost = edge_set_cost(g, res.edges);
  assert(res.cost <= 2 * res.dual);
  for (const auto& [s, t] : pairs) assert(connected_in_subset(g, res.edges, s, t));
  return res;
}

Rat steiner_forest_gamma(const Rat& lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  Rat gamma = Rat(4) - Rat(2) / lambda;
  return std::max(gamma, Rat(9, 4));
}

PairClassification steiner_forest_select(const WeightedGraph& g,
                                         const std::vector<std::pair<int, int>>& pairs, int k,
                                         const Rat& T, const Rat& beta, const Rat& gamma) {
  if (2 * gamma > beta) throw std::invalid_argument("selection requires gamma <= beta/2");
  PairClassification cls(g.n);
  cls.T = T;
  cls.beta = beta;
  cls.gamma = gamma;
  Rat bar = beta * T / k;        // admission: contracted distance must exceed this
  Rat guard = gamma * T / k;     // blocking: a witness strictly within this

  std::vector<char> in_w(g.n, 0);
  // The auxiliary forest lives on W; aux_comp certifies it stays acyclic.
  VertexContraction aux_comp(g.n);
  std::vector<char> admitted(pairs.size(), 0);

  for (;;) {
    int pick = -1;
    Rat pick_dist;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (admitted[i]) continue;
      ShortestPaths sp = shortest_paths(g, {pairs[i].first}, &cls.contraction);
      if (!sp.reachable[pairs[i].second])
        throw std::invalid_argument("steiner forest pair endpoints are not connected");
      if (sp.dist[pairs[i].second] > bar) {
        pick = int(i);
        pick_dist = sp.dist[pairs[i].second];
        break;
      }
    }
    if (pick < 0) break;

    admitted[pick] = 1;
    cls.real_pairs.push_back(pick);
    cls.admitted_distance.push_back(pick_dist);

    // Classify both endpoints against W as it stood before this pair.
    std::vector<int> w_prior = cls.witnesses;
    int ends[2] = {pairs[pick].first, pairs[pick].second};
    std::array<int, 2> fresh = {-1, -1};
    int stand_in[2];
    for (int side = 0; side < 2; ++side) {
      int x = ends[side];
      ShortestPaths from_x = shortest_paths(g, {x});
      int blocker = -1;
      Rat blocker_dist;
      for (int wv : w_prior) {
        if (!from_x.reachable[wv] || from_x.dist[wv] >= guard) continue;
        if (blocker < 0 || from_x.dist[wv] < blocker_dist ||
            (from_x.dist[wv] == blocker_dist && wv < blocker)) {
          blocker = wv;
          blocker_dist = from_x.dist[wv];
        }
      }
      if (blocker < 0 && in_w[x]) blocker = x;  // zero-radius guard (T = 0)
      if (blocker >= 0) {
        cls.fake_pairs.push_back({x, blocker, pick});
        cls.contraction.merge(x, blocker);
        stand_in[side] = blocker;
      } else {
        cls.witnesses.push_back(x);
        in_w[x] = 1;
        fresh[side] = x;
        stand_in[side] = x;
      }
    }
    cls.fresh.push_back(fresh);

    // One auxiliary edge per admitted pair; a cycle (or self-loop) would mean
    // two W vertices within 2*gamma*T/k <= beta*T/k of each other along the
    // admitted pair, contradicting the admission distance.
    assert(!aux_comp.same(stand_in[0], stand_in[1]));
    cls.aux_edges.emplace_back(stand_in[0], stand_in[1]);
    aux_comp.merge(stand_in[0], stand_in[1]);

    cls.contraction.merge(pairs[pick].first, pairs[pick].second);
  }

  // Bookkeeping identities of the selection.
  size_t n_g = 0, n_o = 0, n_b = 0;
  for (const auto& f : cls.fresh) {
    int cnt = int(f[0] >= 0) + int(f[1] >= 0);
    (cnt == 2 ? n_g : cnt == 1 ? n_o : n_b) += 1;
  }
  assert(cls.witnesses.size() == 2 * n_g + n_o);
  assert(cls.fake_pairs.size() == 2 * n_b + n_o);
  assert(cls.fake_pairs.size() == 2 * cls.real_pairs.size() - cls.witnesses.size());
  assert(cls.witnesses.size() >= cls.real_pairs.size());
  assert(cls.real_pairs.size() >= cls.fake_pairs.size());
#ifndef NDEBUG
  for (size_t a = 0; a < cls.witnesses.size(); ++a) {
    ShortestPaths sp = shortest_paths(g, {cls.witnesses[a]});
    for (size_t b = a + 1; b < cls.witnesses.size(); ++b)
      assert(!sp.reachable[cls.witnesses[b]] || sp.dist[cls.witnesses[b]] >= guard);
  }
#endif
  return cls;
}

DiscriminatingOutput discriminating_steiner_forest_params(const Instance& inst, const Rat& T,
                                                          const Rat& gamma, const Rat& beta) {
  if (T < 0) throw std::invalid_argument("negative threshold");
  if (gamma <= 2) throw std::invalid_argument("selection guarantee needs gamma > 2");
  const WeightedGraph& g = inst.graph;

  DiscriminatingOutput out;
  out.T = T;
  out.beta = beta;
  out.alpha1 = 4 * gamma / (gamma - 2);
  out.alpha2 = out.alpha1;

  PairClassification cls = steiner_forest_select(g, inst.pairs, inst.k, T, beta, gamma);

  // Buy: a 2-approximate forest for the admitted pairs, plus a shortest path
  // per fake pair (each costs < gamma*T/k).
  std::vector<std::pair<int, int>> real;
  for (int i : cls.real_pairs) real.push_back(inst.pairs[i]);
  GwForest forest = gw_steiner_forest(g, real);
  std::vector<int> stage = forest.edges;
  for (const auto& f : cls.fake_pairs) {
    if (f.endpoint == f.blocker) continue;
    ShortestPaths sp = shortest_paths(g, {f.blocker});
    assert(sp.reachable[f.endpoint]);
    std::vector<int> path = extract_path(g, sp, f.endpoint);
    stage = merge_edge_sets({&stage, &path});
  }
  out.first_stage = stage;
  out.first_stage_cost = edge_set_cost(g, stage);

  // Every pair is now within beta*T/k in the contracted metric, and the first
  // stage connects each contracted class, so the contracted path augments.
  out.singleton_augment.resize(inst.pairs.size());
  out.augment_cost.assign(inst.pairs.size(), Rat(0));
  Rat bar = beta * T / inst.k;
  for (size_t i = 0; i < inst.pairs.size(); ++i) {
    ShortestPaths sp = shortest_paths(g, {inst.pairs[i].first}, &cls.contraction);
    assert(sp.reachable[inst.pairs[i].second]);
    out.singleton_augment[i] = extract_path(g, sp, inst.pairs[i].second);
    out.augment_cost[i] = edge_set_cost(g, out.singleton_augment[i]);
    assert(sp.dist[inst.pairs[i].second] <= bar);
    assert(out.augment_cost[i] <= bar);
  }
  return out;
}

DiscriminatingOutput discriminating_steiner_forest(const Instance& inst, const Rat& T) {
  Rat gamma = steiner_forest_gamma(inst.lambda);
  return discriminating_steiner_forest_params(inst, T, gamma, 2 * gamma);
}

WitnessResult maxmin_steiner_forest_witness(const Instance& inst, const Rat& T) {
  const WeightedGraph& g = inst.graph;
  const Rat gamma(3), beta(6);
  PairClassification cls = steiner_forest_select(g, inst.pairs, inst.k, T, beta, gamma);

  WitnessResult w;
  if (int(cls.real_pairs.size()) <= inst.k) {
    // All admitted pairs fit in one scenario; the forest dual lower-bounds
    // the cost of connecting them.
    std::vector<std::pair<int, int>> real;
    for (int i : cls.real_pairs) real.push_back(inst.pairs[i]);
    w.demands = cls.real_pairs;
    w.certificate = gw_steiner_forest(g, real).dual;
  } else {
    // Pairs with a fresh endpoint: those endpoints are pairwise >= gamma*T/k
    // apart (distinct W vertices), so their gamma*T/(2k)-balls are disjoint
    // and each fresh pair forces its ball to be exited. Padding with other
    // admitted pairs never lowers the cover cost.
    std::vector<int> fresh_pairs, others;
    for (size_t j = 0; j < cls.real_pairs.size(); ++j) {
      bool has_fresh = cls.fresh[j][0] >= 0 || cls.fresh[j][1] >= 0;
      (has_fresh ? fresh_pairs : others).push_back(cls.real_pairs[j]);
    }
    std::sort(fresh_pairs.begin(), fresh_pairs.end());
    std::sort(others.begin(), others.end());
    int take = std::min<int>(inst.k, int(fresh_pairs.size()));
    w.demands.assign(fresh_pairs.begin(), fresh_pairs.begin() + take);
    for (int i : others) {
      if (int(w.demands.size()) >= inst.k) break;
      w.demands.push_back(i);
    }
    w.certificate = take * (gamma / 2) * (T / inst.k);
    if (w.certificate < T) w.note = "fresh-endpoint ball bound fell short";
  }
  std::sort(w.demands.begin(), w.demands.end());
  return w;
}

}  // namespace rcover
