#include "rcover/oracle.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <climits>
#include <functional>
#include <map>
#include <queue>

#include "rcover/maxflow.hpp"

namespace rcover {
namespace {

using I64 = long long;
constexpr I64 kInf = LLONG_MAX / 4;

I64 sat_add(I64 a, I64 b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

// Integer-scaled copies of a rational cost vector. All oracle dynamic
// programs run on these; results divide the scale back out.
struct Scaled {
  Int scale;
  std::vector<I64> val;
};

Scaled scale_values(const std::vector<Rat>& costs) {
  Scaled s;
  s.scale = common_denominator(costs);
  I64 total = 0;
  for (const Rat& c : costs) {
    Rat prod = c * s.scale;
    assert(prod.get_den() == 1);
    if (!prod.get_num().fits_slong_p())
      throw OracleRefusal("oracle limit: costs too large for integer-scaled enumeration");
    long v = prod.get_num().get_si();
    if (v < 0 || v >= kInf / 8)
      throw OracleRefusal("oracle limit: costs too large for integer-scaled enumeration");
    total = sat_add(total, v);
    s.val.push_back(v);
  }
  if (total >= kInf / 8)
    throw OracleRefusal("oracle limit: total cost too large for integer-scaled enumeration");
  return s;
}

Rat unscale(I64 v, const Int& scale) { return Rat(long(v)) / Rat(scale); }

// cost[mask] = sum of val over the mask's bits (built in one pass).
std::vector<I64> subset_costs(const std::vector<I64>& val) {
  std::vector<I64> cost(size_t(1) << val.size(), 0);
  for (size_t mask = 1; mask < cost.size(); ++mask)
    cost[mask] = cost[mask & (mask - 1)] + val[__builtin_ctzll(mask)];
  return cost;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int v) {
    while (p[v] != v) v = p[v] = p[p[v]];
    return v;
  }
  void merge(int a, int b) { p[find(a)] = find(b); }
};

// Component labels 0..nc-1 (first-occurrence order) after contracting the
// edges in `mask`.
std::vector<int> contraction_labels(const WeightedGraph& g, unsigned long mask, int* nc_out) {
  Dsu dsu(g.n);
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (mask >> e & 1) dsu.merge(g.edges[e].u, g.edges[e].v);
  std::vector<int> lab(g.n, -1);
  int nc = 0;
  for (int v = 0; v < g.n; ++v) {
    int r = dsu.find(v);
    if (lab[r] < 0) lab[r] = nc++;
    lab[v] = lab[r];
  }
  if (nc_out) *nc_out = nc;
  return lab;
}

// All-pairs shortest paths of the label quotient (parallel edges keep the
// cheapest copy; contracted edges vanish).
std::vector<std::vector<I64>> quotient_apsp(const WeightedGraph& g, const std::vector<I64>& ecost,
                                            const std::vector<int>& lab, int nc) {
  std::vector<std::vector<I64>> d(nc, std::vector<I64>(nc, kInf));
  for (int i = 0; i < nc; ++i) d[i][i] = 0;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int a = lab[g.edges[e].u], b = lab[g.edges[e].v];
    if (a == b) continue;
    d[a][b] = std::min(d[a][b], ecost[e]);
    d[b][a] = d[a][b];
  }
  for (int w = 0; w < nc; ++w)
    for (int i = 0; i < nc; ++i) {
      if (d[i][w] >= kInf) continue;
      for (int j = 0; j < nc; ++j)
        d[i][j] = std::min(d[i][j], sat_add(d[i][w], d[w][j]));
    }
  return d;
}

// Subset dynamic program for minimum Steiner trees: S[mask][v] = cheapest
// tree containing terminal set `mask` plus vertex v. One table answers every
// sub-subset of the terminals.
struct SteinerTable {
  std::vector<int> terms;
  std::vector<std::vector<I64>> S;

  I64 answer(unsigned mask) const {
    if (mask == 0) return 0;
    int j = __builtin_ctz(mask);
    return S[mask ^ (1u << j)][terms[j]];
  }
};

SteinerTable steiner_table(const std::vector<std::vector<I64>>& dist,
                           const std::vector<int>& terms) {
  int n = int(dist.size()), q = int(terms.size());
  if (q > 13) throw OracleRefusal("oracle limit: too many terminals for the subset table");
  SteinerTable t;
  t.terms = terms;
  t.S.assign(size_t(1) << q, std::vector<I64>(n, kInf));
  t.S[0].assign(n, 0);
  for (int i = 0; i < q; ++i)
    for (int v = 0; v < n; ++v) t.S[size_t(1) << i][v] = dist[terms[i]][v];
  std::vector<I64> tmp(n);
  for (unsigned mask = 1; mask < (1u << q); ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    unsigned low = mask & -mask;
    for (int v = 0; v < n; ++v) {
      I64 best = kInf;
      for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
        if (!(sub & low)) continue;
        best = std::min(best, sat_add(t.S[sub][v], t.S[mask ^ sub][v]));
      }
      tmp[v] = best;
    }
    auto& row = t.S[mask];
    for (int v = 0; v < n; ++v) {
      I64 best = tmp[v];
      for (int u = 0; u < n; ++u) best = std::min(best, sat_add(tmp[u], dist[u][v]));
      row[v] = best;
    }
  }
  return t;
}

// Minimum partition cost over `items` where a block's cost is block_cost of
// its bit mask (3^items subset convolution).
I64 min_partition_cost(int items, const std::function<I64(unsigned)>& block_cost) {
  std::vector<I64> dp(size_t(1) << items, kInf);
  dp[0] = 0;
  for (unsigned mask = 1; mask < (1u << items); ++mask) {
    unsigned low = mask & -mask;
    for (unsigned sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;
      I64 b = block_cost(sub);
      if (b >= kInf || dp[mask ^ sub] >= kInf) continue;
      dp[mask] = std::min(dp[mask], b + dp[mask ^ sub]);
    }
  }
  return dp.back();
}

// Exact max-flow on integer-scaled capacities (augmenting shortest paths);
// `enabled` may carve out a subgraph.
I64 i64_min_cut_value(const WeightedGraph& g, const std::vector<I64>& cap,
                      const std::vector<char>* enabled, const std::vector<int>& sources,
                      const std::vector<int>& sinks) {
  std::vector<char> is_source(g.n, 0), is_sink(g.n, 0);
  for (int s : sources) is_source[s] = 1;
  for (int t : sinks) is_sink[t] = 1;
  for (int v = 0; v < g.n; ++v)
    if (is_source[v] && is_sink[v]) throw std::invalid_argument("cut source meets sink");

  std::vector<I64> flow(g.edges.size(), 0);  // signed along u -> v
  auto residual = [&](int e, int from) {
    return from == g.edges[e].u ? cap[e] - flow[e] : cap[e] + flow[e];
  };
  I64 total = 0;
  for (;;) {
    std::vector<int> parent(g.n, -2);
    std::queue<int> bfs;
    for (int s : sources) {
      parent[s] = -1;
      bfs.push(s);
    }
    int reached = -1;
    while (!bfs.empty() && reached < 0) {
      int v = bfs.front();
      bfs.pop();
      for (int e : g.incidence[v]) {
        if (enabled && !(*enabled)[e]) continue;
        if (residual(e, v) <= 0) continue;
        int w = g.other_end(e, v);
        if (parent[w] != -2) continue;
        parent[w] = e;
        if (is_sink[w]) {
          reached = w;
          break;
        }
        bfs.push(w);
      }
    }
    if (reached < 0) return total;
    I64 bottleneck = kInf;
    for (int v = reached; parent[v] >= 0;) {
      int e = parent[v];
      int u = g.other_end(e, v);
      bottleneck = std::min(bottleneck, residual(e, u));
      v = u;
    }
    for (int v = reached; parent[v] >= 0;) {
      int e = parent[v];
      int u = g.other_end(e, v);
      flow[e] += (u == g.edges[e].u) ? bottleneck : -bottleneck;
      v = u;
    }
    total += bottleneck;
  }
}

std::vector<I64> graph_scaled_costs(const WeightedGraph& g, Int* scale) {
  std::vector<Rat> costs;
  for (const auto& e : g.edges) costs.push_back(e.cost);
  Scaled s = scale_values(costs);
  *scale = s.scale;
  return s.val;
}

// Pair-separation bitmask after removing the edges in `removed`.
unsigned separation_mask(const WeightedGraph& g, const std::vector<std::pair<int, int>>& pairs,
                         unsigned long removed) {
  Dsu dsu(g.n);
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (!(removed >> e & 1)) dsu.merge(g.edges[e].u, g.edges[e].v);
  unsigned sep = 0;
  for (size_t i = 0; i < pairs.size(); ++i)
    if (dsu.find(pairs[i].first) != dsu.find(pairs[i].second)) sep |= 1u << i;
  return sep;
}

// Cheapest edge subset separating every pair (scaled cost; the subset via
// `mask_out`). `cost` is the subset-sum table of the scaled edge costs.
I64 min_multicut_scan(const WeightedGraph& g, const std::vector<std::pair<int, int>>& pairs,
                      const std::vector<I64>& cost, unsigned long* mask_out) {
  unsigned want = (1u << pairs.size()) - 1;
  I64 best = kInf;
  unsigned long best_mask = 0;
  for (unsigned long mask = 0; mask < cost.size(); ++mask) {
    if (cost[mask] >= best) continue;
    if ((separation_mask(g, pairs, mask) & want) == want) {
      best = cost[mask];
      best_mask = mask;
    }
  }
  if (mask_out) *mask_out = best_mask;
  return best;
}

std::vector<int> identity_labels(int n) {
  std::vector<int> lab(n);
  for (int i = 0; i < n; ++i) lab[i] = i;
  return lab;
}

// Relabel to 0..nc-1 in first-occurrence order.
std::vector<int> canonical_labels(std::vector<int> lab, int* nc_out) {
  std::vector<int> seen(lab.size(), -1);
  int nc = 0;
  for (int& l : lab) {
    if (seen[l] < 0) seen[l] = nc++;
    l = seen[l];
  }
  *nc_out = nc;
  return lab;
}

// Distinct images of `vertices` under `lab`, first-occurrence order, with a
// vertex -> bit position map.
void image_terms(const std::vector<int>& vertices, const std::vector<int>& lab,
                 std::vector<int>* terms, std::map<int, int>* bit_of_label) {
  for (int v : vertices) {
    int l = lab[v];
    if (bit_of_label->count(l)) continue;
    bit_of_label->emplace(l, int(terms->size()));
    terms->push_back(l);
  }
}

// Optimal edge set for a connectivity demand by contract-or-delete: scan the
// edges once; an edge belongs to some optimal solution iff contracting it
// drops the quotient optimum by exactly its cost. Committed edges contract
// (their labels merge), rejected ones get infinite cost, so by the end the
// quotient optimum reaches zero and the committed edges are a certified
// optimal solution. `value(lab, nc, work)` must return the quotient optimum
// under component labels `lab` and edge costs `work`.
std::vector<int> connectivity_witness(
    const WeightedGraph& g, const std::vector<I64>& ecost, I64 optimum,
    const std::function<I64(const std::vector<int>&, int, const std::vector<I64>&)>& value) {
  std::vector<int> lab = identity_labels(g.n);
  std::vector<I64> work = ecost;
  std::vector<int> items;
  I64 remaining = optimum;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    // Settled either way below: committed edges become quotient self-loops,
    // rejected ones must never be used again.
    I64 ce = work[e];
    work[e] = kInf;
    if (lab[g.edges[e].u] == lab[g.edges[e].v]) continue;
    std::vector<int> merged = lab;
    int keep = merged[g.edges[e].u], drop = merged[g.edges[e].v];
    for (int& l : merged)
      if (l == drop) l = keep;
    int mc = 0;
    merged = canonical_labels(std::move(merged), &mc);
    I64 with_e = value(merged, mc, work);
    if (sat_add(with_e, ce) == remaining) {
      items.push_back(int(e));
      lab = std::move(merged);
      remaining = with_e;
    }
  }
  assert(remaining == 0);
  return items;
}

}  // namespace

std::vector<std::vector<int>> k_subsets(int n, int k, long cap) {
  if (k < 0 || k > n) throw std::invalid_argument("k out of range");
  // Count C(n,k) first so oversized requests refuse before allocating.
  long count = 1;
  for (int i = 1; i <= k; ++i) {
    if (count > cap * i) {
      count = cap + 1;
      break;
    }
    count = count * (n - k + i) / i;
  }
  if (count > cap) throw OracleRefusal("oracle limit: scenario count exceeds the enumeration cap");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Rat exact_steiner_tree_cost(const WeightedGraph& g, const std::vector<int>& terminals) {
  if (g.n > 64) throw OracleRefusal("oracle limit: graph too large for the subset table");
  Int scale;
  std::vector<I64> ecost = graph_scaled_costs(g, &scale);
  std::vector<int> lab = identity_labels(g.n);
  std::vector<int> terms;
  std::map<int, int> bit;
  image_terms(terminals, lab, &terms, &bit);
  SteinerTable table = steiner_table(quotient_apsp(g, ecost, lab, g.n), terms);
  I64 v = table.answer((1u << terms.size()) - 1);
  if (v >= kInf) throw std::invalid_argument("terminals are not mutually reachable");
  return unscale(v, scale);
}

Rat exact_steiner_forest_cost(const WeightedGraph& g,
                              const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.size() > 6) throw OracleRefusal("oracle limit: too many pairs for exact forests");
  if (g.n > 64) throw OracleRefusal("oracle limit: graph too large for the subset table");
  if (pairs.empty()) return Rat(0);
  Int scale;
  std::vector<I64> ecost = graph_scaled_costs(g, &scale);
  std::vector<int> lab = identity_labels(g.n);
  std::vector<int> endpoints;
  for (const auto& [s, t] : pairs) {
    endpoints.push_back(s);
    endpoints.push_back(t);
  }
  std::vector<int> terms;
  std::map<int, int> bit;
  image_terms(endpoints, lab, &terms, &bit);
  SteinerTable table = steiner_table(quotient_apsp(g, ecost, lab, g.n), terms);
  std::vector<unsigned> pmask(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i)
    pmask[i] = (1u << bit.at(lab[pairs[i].first])) | (1u << bit.at(lab[pairs[i].second]));
  I64 v = min_partition_cost(int(pairs.size()), [&](unsigned sub) {
    unsigned mask = 0;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (sub >> i & 1) mask |= pmask[i];
    return table.answer(mask);
  });
  if (v >= kInf) throw std::invalid_argument("pair endpoints are not mutually reachable");
  return unscale(v, scale);
}

Rat exact_multicut_cost(const WeightedGraph& g, const std::vector<std::pair<int, int>>& pairs) {
  if (g.edges.size() > 18) throw OracleRefusal("oracle limit: too many edges for exact multicut");
  if (pairs.size() > 16) throw OracleRefusal("oracle limit: too many pairs for exact multicut");
  if (pairs.empty()) return Rat(0);
  Int scale;
  std::vector<I64> ecost = graph_scaled_costs(g, &scale);
  I64 best = min_multicut_scan(g, pairs, subset_costs(ecost), nullptr);
  if (best >= kInf) throw std::invalid_argument("some pair cannot be separated");
  return unscale(best, scale);
}

ExactCover exact_cover(const Instance& inst, const std::vector<int>& demands) {
  ExactCover out;
  out.cost = 0;
  switch (inst.kind) {
    case ProblemKind::set_cover: {
      // Cover exactly the demanded elements: subset DP over those bits, with
      // the chosen set recorded per state for the witness walk.
      std::vector<int> elems = demands;
      std::sort(elems.begin(), elems.end());
      elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
      if (elems.size() > 20)
        throw OracleRefusal("oracle limit: demand set too large for the cover table");
      Scaled sc = scale_values(inst.set_cost);
      std::map<int, int> bit;
      for (size_t i = 0; i < elems.size(); ++i) bit.emplace(elems[i], int(i));
      std::vector<unsigned> cov(inst.sets.size(), 0);
      for (size_t s = 0; s < inst.sets.size(); ++s)
        for (int e : inst.sets[s]) {
          auto it = bit.find(e);
          if (it != bit.end()) cov[s] |= 1u << it->second;
        }
      std::vector<std::vector<int>> by_bit(elems.size());
      for (size_t s = 0; s < inst.sets.size(); ++s)
        for (size_t b = 0; b < elems.size(); ++b)
          if (cov[s] >> b & 1) by_bit[b].push_back(int(s));
      std::vector<I64> dp(size_t(1) << elems.size(), kInf);
      std::vector<int> choice(dp.size(), -1);
      dp[0] = 0;
      for (unsigned mask = 1; mask < dp.size(); ++mask) {
        int low = __builtin_ctz(mask);
        for (int s : by_bit[low]) {
          I64 cand = sat_add(dp[mask & ~cov[s]], sc.val[s]);
          if (cand < dp[mask]) {
            dp[mask] = cand;
            choice[mask] = s;
          }
        }
      }
      assert(dp.back() < kInf);  // validated: every element coverable
      out.cost = unscale(dp.back(), sc.scale);
      for (unsigned mask = unsigned(dp.size() - 1); mask;) {
        int s = choice[mask];
        out.items.push_back(s);
        mask &= ~cov[s];
      }
      break;
    }
    case ProblemKind::steiner_tree: {
      const WeightedGraph& g = inst.graph;
      if (g.n > 64) throw OracleRefusal("oracle limit: graph too large for the subset table");
      Int scale;
      std::vector<I64> ecost = graph_scaled_costs(g, &scale);
      std::vector<int> verts = {steiner_root(inst)};
      for (int d : demands) verts.push_back(inst.terminals[d]);
      auto value = [&](const std::vector<int>& lab, int nc, const std::vector<I64>& work) -> I64 {
        std::vector<int> terms;
        std::map<int, int> bit;
        image_terms(verts, lab, &terms, &bit);
        if (terms.size() <= 1) return 0;
        return steiner_table(quotient_apsp(g, work, lab, nc), terms)
            .answer((1u << terms.size()) - 1);
      };
      I64 opt = value(identity_labels(g.n), g.n, ecost);
      if (opt >= kInf) throw std::invalid_argument("terminals are not mutually reachable");
      out.cost = unscale(opt, scale);
      out.items = connectivity_witness(g, ecost, opt, value);
      break;
    }
    case ProblemKind::steiner_forest: {
      const WeightedGraph& g = inst.graph;
      if (demands.size() > 6) throw OracleRefusal("oracle limit: too many pairs for exact forests");
      if (g.n > 64) throw OracleRefusal("oracle limit: graph too large for the subset table");
      Int scale;
      std::vector<I64> ecost = graph_scaled_costs(g, &scale);
      std::vector<std::pair<int, int>> sub;
      std::vector<int> endpoints;
      for (int d : demands) {
        sub.push_back(inst.pairs[d]);
        endpoints.push_back(sub.back().first);
        endpoints.push_back(sub.back().second);
      }
      auto value = [&](const std::vector<int>& lab, int nc, const std::vector<I64>& work) -> I64 {
        std::vector<int> terms;
        std::map<int, int> bit;
        image_terms(endpoints, lab, &terms, &bit);
        SteinerTable table = steiner_table(quotient_apsp(g, work, lab, nc), terms);
        std::vector<unsigned> pmask(sub.size());
        for (size_t i = 0; i < sub.size(); ++i)
          pmask[i] = (1u << bit.at(lab[sub[i].first])) | (1u << bit.at(lab[sub[i].second]));
        return min_partition_cost(int(sub.size()), [&](unsigned s) {
          unsigned mask = 0;
          for (size_t i = 0; i < sub.size(); ++i)
            if (s >> i & 1) mask |= pmask[i];
          return table.answer(mask);
        });
      };
      I64 opt = value(identity_labels(g.n), g.n, ecost);
      if (opt >= kInf) throw std::invalid_argument("pair endpoints are not mutually reachable");
      out.cost = unscale(opt, scale);
      out.items = connectivity_witness(g, ecost, opt, value);
      break;
    }
    case ProblemKind::min_cut: {
      std::vector<int> sinks;
      for (int d : demands) sinks.push_back(inst.terminals[d]);
      std::sort(sinks.begin(), sinks.end());
      sinks.erase(std::unique(sinks.begin(), sinks.end()), sinks.end());
      if (sinks.empty()) break;
      MinCutResult cut = max_flow_min_cut(inst.graph, {inst.root}, sinks);
      out.cost = cut.value;
      out.items = cut.cut_edges;
      break;
    }
    case ProblemKind::multicut: {
      const WeightedGraph& g = inst.graph;
      if (g.edges.size() > 18)
        throw OracleRefusal("oracle limit: too many edges for exact multicut");
      if (demands.size() > 16)
        throw OracleRefusal("oracle limit: too many pairs for exact multicut");
      if (demands.empty()) break;
      std::vector<std::pair<int, int>> sub;
      for (int d : demands) sub.push_back(inst.pairs[d]);
      Int scale;
      std::vector<I64> ecost = graph_scaled_costs(g, &scale);
      unsigned long best_mask = 0;
      I64 best = min_multicut_scan(g, sub, subset_costs(ecost), &best_mask);
      if (best >= kInf) throw std::invalid_argument("some pair cannot be separated");
      out.cost = unscale(best, scale);
      for (size_t e = 0; e < g.edges.size(); ++e)
        if (best_mask >> e & 1) out.items.push_back(int(e));
      break;
    }
  }
  std::sort(out.items.begin(), out.items.end());
  return out;
}

Rat exact_cover_cost(const Instance& inst, const std::vector<int>& demands) {
  switch (inst.kind) {
    case ProblemKind::set_cover:
      return exact_cover(inst, demands).cost;
    case ProblemKind::steiner_tree: {
      std::vector<int> verts = {steiner_root(inst)};
      for (int d : demands) verts.push_back(inst.terminals[d]);
      return exact_steiner_tree_cost(inst.graph, verts);
    }
    case ProblemKind::steiner_forest: {
      std::vector<std::pair<int, int>> sub;
      for (int d : demands) sub.push_back(inst.pairs[d]);
      return exact_steiner_forest_cost(inst.graph, sub);
    }
    case ProblemKind::min_cut: {
      std::vector<int> sinks;
      for (int d : demands) sinks.push_back(inst.terminals[d]);
      std::sort(sinks.begin(), sinks.end());
      sinks.erase(std::unique(sinks.begin(), sinks.end()), sinks.end());
      if (sinks.empty()) return Rat(0);
      Int scale;
      std::vector<I64> cap = graph_scaled_costs(inst.graph, &scale);
      return unscale(i64_min_cut_value(inst.graph, cap, nullptr, {inst.root}, sinks), scale);
    }
    case ProblemKind::multicut: {
      std::vector<std::pair<int, int>> sub;
      for (int d : demands) sub.push_back(inst.pairs[d]);
      return exact_multicut_cost(inst.graph, sub);
    }
  }
  throw std::logic_error("unknown problem kind");
}

namespace {

constexpr long kScenarioCap = 20000;

ExactRobustResult robust_set_cover(const Instance& inst) {
  int u = inst.universe;
  if (u > 16) throw OracleRefusal("oracle limit: universe too large for exhaustive pre-buy");
  if (inst.sets.size() > 64) throw OracleRefusal("oracle limit: too many sets");
  // One shared scale so first- and second-stage values add exactly.
  std::vector<Rat> all = item_first_costs(inst);
  for (const Rat& c : inst.set_cost) all.push_back(c);
  Scaled both = scale_values(all);
  std::vector<I64> bval(both.val.begin(), both.val.begin() + inst.sets.size());
  std::vector<I64> cval(both.val.begin() + inst.sets.size(), both.val.end());

  std::vector<unsigned> cov(inst.sets.size(), 0);
  for (size_t s = 0; s < inst.sets.size(); ++s)
    for (int e : inst.sets[s]) cov[s] |= 1u << e;
  std::vector<std::vector<int>> by_elem(u);
  for (size_t s = 0; s < inst.sets.size(); ++s)
    for (int e : inst.sets[s]) by_elem[e].push_back(int(s));

  // dpc[mask]: cheapest second-stage cover of exactly `mask`.
  std::vector<I64> dpc(size_t(1) << u, kInf);
  dpc[0] = 0;
  for (unsigned mask = 1; mask < dpc.size(); ++mask) {
    int low = __builtin_ctz(mask);
    for (int s : by_elem[low]) dpc[mask] = std::min(dpc[mask], sat_add(dpc[mask & ~cov[s]], cval[s]));
    assert(dpc[mask] < kInf);
  }
  // pre[mask]: cheapest first-stage whose union covers at least `mask`.
  std::vector<I64> pre(size_t(1) << u, kInf);
  std::vector<int> parent(size_t(1) << u, -1);
  pre[0] = 0;
  for (unsigned mask = 1; mask < pre.size(); ++mask) {
    int low = __builtin_ctz(mask);
    for (int s : by_elem[low]) {
      I64 cand = sat_add(pre[mask & ~cov[s]], bval[s]);
      if (cand < pre[mask]) {
        pre[mask] = cand;
        parent[mask] = s;
      }
    }
  }

  auto scenarios = k_subsets(u, std::min(inst.k, u), kScenarioCap);
  std::vector<unsigned> smask;
  for (const auto& sc : scenarios) {
    unsigned m = 0;
    for (int e : sc) m |= 1u << e;
    smask.push_back(m);
  }

  ExactRobustResult best;
  bool have = false;
  unsigned best_mask = 0;
  for (unsigned U = 0; U < pre.size(); ++U) {
    if (pre[U] >= kInf) continue;
    I64 worst = -1;
    size_t wi = 0;
    for (size_t i = 0; i < smask.size(); ++i) {
      I64 r = dpc[smask[i] & ~U];
      if (r > worst) {
        worst = r;
        wi = i;
      }
    }
    Rat obj = (Rat(long(pre[U])) + inst.lambda * Rat(long(worst))) / Rat(both.scale);
    if (!have || obj < best.objective) {
      have = true;
      best.objective = obj;
      best.first_stage_cost = unscale(pre[U], both.scale);
      best.worst_augment_cost = unscale(worst, both.scale);
      best.worst_scenario = scenarios[wi];
      best_mask = U;
    }
  }
  for (unsigned m = best_mask; m;) {
    int s = parent[m];
    best.first_stage.push_back(s);
    m &= ~cov[s];
  }
  std::sort(best.first_stage.begin(), best.first_stage.end());
  return best;
}

// Shared driver for Steiner tree/forest: enumerate contracted first stages,
// memoize the worst-scenario residual per contraction signature.
ExactRobustResult robust_connectivity(const Instance& inst) {
  const WeightedGraph& g = inst.graph;
  size_t m = g.edges.size();
  if (m > 18) throw OracleRefusal("oracle limit: too many edges for exhaustive pre-buy");
  bool tree = inst.kind == ProblemKind::steiner_tree;
  if (tree && inst.terminals.size() > 12)
    throw OracleRefusal("oracle limit: too many terminals");
  if (!tree && inst.pairs.size() > 6) throw OracleRefusal("oracle limit: too many pairs");

  Int scale;
  std::vector<I64> ecost = graph_scaled_costs(g, &scale);
  std::vector<I64> cost = subset_costs(ecost);
  auto scenarios =
      k_subsets(demand_count(inst), std::min(inst.k, demand_count(inst)), kScenarioCap);

  int root = tree ? steiner_root(inst) : -1;
  struct Memo {
    I64 worst;
    size_t scenario;
  };
  std::map<std::vector<int>, Memo> memo;

  ExactRobustResult best;
  bool have = false;
  Rat best_scaled;  // best.objective * scale, for integer-side pruning
  unsigned long best_e0 = 0;
  for (unsigned long e0 = 0; e0 < (1ul << m); ++e0) {
    if (have && Rat(long(cost[e0])) >= best_scaled) continue;
    int nc = 0;
    std::vector<int> lab = contraction_labels(g, e0, &nc);
    auto it = memo.find(lab);
    if (it == memo.end()) {
      auto dist = quotient_apsp(g, ecost, lab, nc);
      std::vector<int> base;
      if (tree) {
        base.push_back(root);
        for (int t : inst.terminals) base.push_back(t);
      } else {
        for (const auto& [s, t] : inst.pairs) {
          base.push_back(s);
          base.push_back(t);
        }
      }
      std::vector<int> terms;
      std::map<int, int> bit;
      image_terms(base, lab, &terms, &bit);
      SteinerTable table = steiner_table(dist, terms);

      Memo entry{-1, 0};
      if (tree) {
        unsigned rbit = 1u << bit.at(lab[root]);
        for (size_t i = 0; i < scenarios.size(); ++i) {
          unsigned mask = rbit;
          for (int d : scenarios[i]) mask |= 1u << bit.at(lab[inst.terminals[d]]);
          I64 r = table.answer(mask);
          if (r > entry.worst) entry = {r, i};
        }
      } else {
        std::vector<unsigned> pmask(inst.pairs.size());
        for (size_t i = 0; i < inst.pairs.size(); ++i)
          pmask[i] =
              (1u << bit.at(lab[inst.pairs[i].first])) | (1u << bit.at(lab[inst.pairs[i].second]));
        for (size_t i = 0; i < scenarios.size(); ++i) {
          const auto& sc = scenarios[i];
          I64 r = min_partition_cost(int(sc.size()), [&](unsigned sub) {
            unsigned mask = 0;
            for (size_t j = 0; j < sc.size(); ++j)
              if (sub >> j & 1) mask |= pmask[sc[j]];
            return table.answer(mask);
          });
          if (r > entry.worst) entry = {r, i};
        }
      }
      assert(entry.worst < kInf);  // validated: demands reachable
      it = memo.emplace(std::move(lab), entry).first;
    }
    Rat obj_scaled = Rat(long(cost[e0])) + inst.lambda * Rat(long(it->second.worst));
    if (!have || obj_scaled < best_scaled) {
      have = true;
      best_scaled = obj_scaled;
      best.objective = obj_scaled / Rat(scale);
      best.first_stage_cost = unscale(cost[e0], scale);
      best.worst_augment_cost = unscale(it->second.worst, scale);
      best.worst_scenario = scenarios[it->second.scenario];
      best_e0 = e0;
    }
  }
  for (size_t e = 0; e < m; ++e)
    if (best_e0 >> e & 1) best.first_stage.push_back(int(e));
  return best;
}

ExactRobustResult robust_min_cut(const Instance& inst) {
  const WeightedGraph& g = inst.graph;
  size_t m = g.edges.size();
  if (m > 18) throw OracleRefusal("oracle limit: too many edges for exhaustive pre-buy");
  Int scale;
  std::vector<I64> cap = graph_scaled_costs(g, &scale);
  std::vector<I64> cost = subset_costs(cap);
  auto scenarios =
      k_subsets(demand_count(inst), std::min(inst.k, demand_count(inst)), kScenarioCap);

  ExactRobustResult best;
  bool have = false;
  I64 best_num = kInf;  // numerator bound (scaled objective) for pruning
  Rat best_scaled;
  unsigned long best_e0 = 0;
  for (unsigned long e0 = 0; e0 < (1ul << m); ++e0) {
    if (cost[e0] >= best_num) continue;
    std::vector<char> enabled(m, 1);
    for (size_t e = 0; e < m; ++e)
      if (e0 >> e & 1) enabled[e] = 0;
    I64 worst = -1;
    size_t wi = 0;
    for (size_t i = 0; i < scenarios.size(); ++i) {
      std::vector<int> sinks;
      for (int d : scenarios[i]) sinks.push_back(inst.terminals[d]);
      I64 r = i64_min_cut_value(g, cap, &enabled, {inst.root}, sinks);
      if (r > worst) {
        worst = r;
        wi = i;
      }
      if (have && Rat(long(cost[e0])) + inst.lambda * Rat(long(worst)) >= best_scaled) break;
    }
    Rat obj_scaled = Rat(long(cost[e0])) + inst.lambda * Rat(long(worst));
    if (!have || obj_scaled < best_scaled) {
      have = true;
      best_scaled = obj_scaled;
      best_num = rat_ceil(best_scaled).fits_slong_p() ? rat_ceil(best_scaled).get_si() : kInf;
      best.objective = obj_scaled / Rat(scale);
      best.first_stage_cost = unscale(cost[e0], scale);
      best.worst_augment_cost = unscale(worst, scale);
      best.worst_scenario = scenarios[wi];
      best_e0 = e0;
    }
  }
  for (size_t e = 0; e < m; ++e)
    if (best_e0 >> e & 1) best.first_stage.push_back(int(e));
  return best;
}

ExactRobustResult robust_multicut(const Instance& inst) {
  const WeightedGraph& g = inst.graph;
  size_t m = g.edges.size();
  if (m > 14) throw OracleRefusal("oracle limit: too many edges for exhaustive pre-buy");
  if (inst.pairs.size() > 16) throw OracleRefusal("oracle limit: too many pairs");
  Int scale;
  std::vector<I64> ecost = graph_scaled_costs(g, &scale);
  std::vector<I64> cost = subset_costs(ecost);
  std::vector<unsigned> sep(size_t(1) << m);
  for (unsigned long mask = 0; mask < sep.size(); ++mask)
    sep[mask] = separation_mask(g, inst.pairs, mask);

  auto scenarios =
      k_subsets(demand_count(inst), std::min(inst.k, demand_count(inst)), kScenarioCap);
  std::vector<unsigned> smask;
  for (const auto& sc : scenarios) {
    unsigned v = 0;
    for (int d : sc) v |= 1u << d;
    smask.push_back(v);
  }

  ExactRobustResult best;
  bool have = false;
  Rat best_scaled;
  unsigned long best_e0 = 0;
  unsigned long full = (1ul << m) - 1;
  std::vector<I64> extra(smask.size());
  for (unsigned long e0 = 0; e0 <= full; ++e0) {
    if (have && Rat(long(cost[e0])) >= best_scaled) continue;
    std::fill(extra.begin(), extra.end(), kInf);
    for (unsigned long sup = e0;; sup = (sup + 1) | e0) {
      I64 add = cost[sup] - cost[e0];
      for (size_t i = 0; i < smask.size(); ++i)
        if ((sep[sup] & smask[i]) == smask[i]) extra[i] = std::min(extra[i], add);
      if (sup == full) break;
    }
    I64 worst = -1;
    size_t wi = 0;
    for (size_t i = 0; i < extra.size(); ++i)
      if (extra[i] > worst) {
        worst = extra[i];
        wi = i;
      }
    assert(worst < kInf);  // removing everything separates everything
    Rat obj_scaled = Rat(long(cost[e0])) + inst.lambda * Rat(long(worst));
    if (!have || obj_scaled < best_scaled) {
      have = true;
      best_scaled = obj_scaled;
      best.objective = obj_scaled / Rat(scale);
      best.first_stage_cost = unscale(cost[e0], scale);
      best.worst_augment_cost = unscale(worst, scale);
      best.worst_scenario = scenarios[wi];
      best_e0 = e0;
    }
  }
  for (size_t e = 0; e < m; ++e)
    if (best_e0 >> e & 1) best.first_stage.push_back(int(e));
  return best;
}

}  // namespace

ExactRobustResult exact_robust_opt(const Instance& inst) {
  switch (inst.kind) {
    case ProblemKind::set_cover:
      return robust_set_cover(inst);
    case ProblemKind::steiner_tree:
    case ProblemKind::steiner_forest:
      return robust_connectivity(inst);
    case ProblemKind::min_cut:
      return robust_min_cut(inst);
    case ProblemKind::multicut:
      return robust_multicut(inst);
  }
  throw std::logic_error("unknown problem kind");
}

ExactMaxMinResult exact_maxmin_value(const Instance& inst) {
  int n = demand_count(inst);
  auto scenarios = k_subsets(n, std::min(inst.k, n), kScenarioCap);
  ExactMaxMinResult best;
  best.value = -1;
  // Shared tables make the scan cheap for the table-based problems; the
  // others are one exact computation per scenario.
  switch (inst.kind) {
    case ProblemKind::set_cover: {
      if (inst.universe > 16) throw OracleRefusal("oracle limit: universe too large");
      Scaled sc = scale_values(inst.set_cost);
      std::vector<unsigned> cov(inst.sets.size(), 0);
      for (size_t s = 0; s < inst.sets.size(); ++s)
        for (int e : inst.sets[s]) cov[s] |= 1u << e;
      std::vector<std::vector<int>> by_elem(inst.universe);
      for (size_t s = 0; s < inst.sets.size(); ++s)
        for (int e : inst.sets[s]) by_elem[e].push_back(int(s));
      std::vector<I64> dp(size_t(1) << inst.universe, kInf);
      dp[0] = 0;
      for (unsigned mask = 1; mask < dp.size(); ++mask) {
        int low = __builtin_ctz(mask);
        for (int s : by_elem[low]) dp[mask] = std::min(dp[mask], sat_add(dp[mask & ~cov[s]], sc.val[s]));
      }
      for (const auto& d : scenarios) {
        unsigned mask = 0;
        for (int e : d) mask |= 1u << e;
        Rat v = unscale(dp[mask], sc.scale);
        if (v > best.value) {
          best.value = v;
          best.scenario = d;
        }
      }
      return best;
    }
    case ProblemKind::steiner_tree: {
      if (inst.terminals.size() > 12) throw OracleRefusal("oracle limit: too many terminals");
      Int scale;
      std::vector<I64> ecost = graph_scaled_costs(inst.graph, &scale);
      std::vector<int> lab = identity_labels(inst.graph.n);
      std::vector<int> base = {steiner_root(inst)};
      for (int t : inst.terminals) base.push_back(t);
      std::vector<int> terms;
      std::map<int, int> bit;
      image_terms(base, lab, &terms, &bit);
      SteinerTable table =
          steiner_table(quotient_apsp(inst.graph, ecost, lab, inst.graph.n), terms);
      unsigned rbit = 1u << bit.at(steiner_root(inst));
      for (const auto& d : scenarios) {
        unsigned mask = rbit;
        for (int i : d) mask |= 1u << bit.at(inst.terminals[i]);
        Rat v = unscale(table.answer(mask), scale);
        if (v > best.value) {
          best.value = v;
          best.scenario = d;
        }
      }
      return best;
    }
    case ProblemKind::steiner_forest:
    case ProblemKind::multicut: {
      for (const auto& d : scenarios) {
        Rat v = exact_cover_cost(inst, d);
        if (v > best.value) {
          best.value = v;
          best.scenario = d;
        }
      }
      return best;
    }
    case ProblemKind::min_cut: {
      Int scale;
      std::vector<I64> cap = graph_scaled_costs(inst.graph, &scale);
      for (const auto& d : scenarios) {
        std::vector<int> sinks;
        for (int i : d) sinks.push_back(inst.terminals[i]);
        Rat v = unscale(i64_min_cut_value(inst.graph, cap, nullptr, {inst.root}, sinks), scale);
        if (v > best.value) {
          best.value = v;
          best.scenario = d;
        }
      }
      return best;
    }
  }
  throw std::logic_error("unknown problem kind");
}

}  // namespace rcover
