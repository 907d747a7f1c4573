#include "rcover/graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace rcover {

WeightedGraph make_graph(int n, const std::vector<std::tuple<int, int, Rat>>& edge_list) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  WeightedGraph g;
  g.n = n;
  std::map<std::pair<int, int>, int> seen;  // endpoints -> edge id
  for (const auto& [u, v, c] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (c < 0) throw std::invalid_argument("negative edge cost");
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto it = seen.find(key);
    if (it != seen.end()) {
      g.edges[it->second].cost += c;  // merge parallel edges by cost sum
    } else {
      seen[key] = (int)g.edges.size();
      g.edges.push_back({key.first, key.second, c});
    }
  }
  g.incidence.assign(n, {});
  for (int id = 0; id < (int)g.edges.size(); ++id) {
    g.incidence[g.edges[id].u].push_back(id);
    g.incidence[g.edges[id].v].push_back(id);
  }
  return g;
}

Rat edge_set_cost(const WeightedGraph& g, const std::vector<int>& edge_ids) {
  Rat total = 0;
  for (int id : edge_ids) total += g.edges[id].cost;
  return total;
}

VertexContraction::VertexContraction(int n) : parent_(n) {
  for (int i = 0; i < n; ++i) parent_[i] = i;
}

int VertexContraction::find(int v) const {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

void VertexContraction::merge(int u, int v) {
  u = find(u);
  v = find(v);
  if (u == v) return;
  // Deterministic: smaller index wins as representative.
  if (u > v) std::swap(u, v);
  parent_[v] = u;
}

ShortestPaths shortest_paths(const WeightedGraph& g, const std::vector<int>& sources,
                             const VertexContraction* contraction,
                             const std::vector<char>* edge_enabled) {
  ShortestPaths out;
  out.contraction = contraction;
  out.dist.assign(g.n, Rat(0));
  out.reachable.assign(g.n, 0);
  out.parent_edge.assign(g.n, -1);
  auto rep = [&](int v) { return contraction ? contraction->find(v) : v; };

  // Labels live on class representatives.
  std::vector<Rat> dist(g.n, Rat(0));
  std::vector<char> known(g.n, 0), done(g.n, 0);
  std::vector<int> parent(g.n, -1);
  for (int s : sources) {
    int r = rep(s);
    known[r] = 1;
    dist[r] = 0;
  }
  // O(n^2) scan; exact comparisons make a heap pointless at these sizes.
  for (;;) {
    int best = -1;
    for (int v = 0; v < g.n; ++v) {
      if (!known[v] || done[v]) continue;
      if (best == -1 || dist[v] < dist[best]) best = v;
    }
    if (best == -1) break;
    done[best] = 1;
    for (int u = 0; u < g.n; ++u) {
      if (rep(u) != best) continue;
      for (int id : g.incidence[u]) {
        if (edge_enabled && !(*edge_enabled)[id]) continue;
        int w = rep(g.other_end(id, u));
        if (w == best) continue;  // internal to the contracted class
        Rat cand = dist[best] + g.edges[id].cost;
        if (!known[w] || cand < dist[w]) {
          known[w] = 1;
          dist[w] = cand;
          parent[w] = id;
        }
      }
    }
  }
  for (int v = 0; v < g.n; ++v) {
    int r = rep(v);
    if (known[r]) {
      out.reachable[v] = 1;
      out.dist[v] = dist[r];
    }
    out.parent_edge[v] = parent[r];
  }
  return out;
}

std::vector<int> extract_path(const WeightedGraph& g, const ShortestPaths& sp, int v) {
  if (!sp.reachable[v]) throw std::logic_error("extract_path: unreachable vertex");
  auto rep = [&](int x) { return sp.contraction ? sp.contraction->find(x) : x; };
  std::vector<int> path;
  int at = rep(v);
  while (sp.parent_edge[at] != -1) {
    int id = sp.parent_edge[at];
    path.push_back(id);
    // Step to the class on the far side of the parent edge.
    int a = rep(g.edges[id].u), b = rep(g.edges[id].v);
    at = (a == at) ? b : a;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

MetricMst metric_closure_mst(const WeightedGraph& g, const std::vector<int>& terminals) {
  if (terminals.empty()) throw std::invalid_argument("metric_closure_mst: no terminals");
  int t = (int)terminals.size();
  MetricMst out;
  out.closure_cost = 0;
  out.bought_cost = 0;
  if (t == 1) return out;

  std::vector<ShortestPaths> sp;
  sp.reserve(t);
  for (int i = 0; i < t; ++i) sp.push_back(shortest_paths(g, {terminals[i]}));
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (!sp[i].reachable[terminals[j]])
        throw std::invalid_argument("metric_closure_mst: terminals in different components");

  // Prim over the closure, lexicographic (distance, a, b) ties.
  std::vector<char> in_tree(t, 0);
  in_tree[0] = 1;
  std::set<int> bought;
  for (int it = 1; it < t; ++it) {
    int ba = -1, bb = -1;
    Rat bd;
    for (int a = 0; a < t; ++a) {
      if (!in_tree[a]) continue;
      for (int b = 0; b < t; ++b) {
        if (in_tree[b]) continue;
        Rat d = sp[a].dist[terminals[b]];
        std::tuple<Rat, int, int> cand{d, a, b};
        if (ba == -1 || cand < std::tuple<Rat, int, int>{bd, ba, bb}) {
          ba = a;
          bb = b;
          bd = d;
        }
      }
    }
    assert(ba != -1);
    in_tree[bb] = 1;
    out.closure_edges.emplace_back(ba, bb, bd);
    out.closure_cost += bd;
    for (int id : extract_path(g, sp[ba], terminals[bb])) bought.insert(id);
  }
  out.edge_ids.assign(bought.begin(), bought.end());
  out.bought_cost = edge_set_cost(g, out.edge_ids);
  return out;
}

bool connected_in_subset(const WeightedGraph& g, const std::vector<int>& edge_ids, int u, int v,
                         const VertexContraction* contraction) {
  VertexContraction uf(g.n);
  if (contraction)
    for (int x = 0; x < g.n; ++x) uf.merge(x, contraction->find(x));
  for (int id : edge_ids) uf.merge(g.edges[id].u, g.edges[id].v);
  return uf.same(u, v);
}

std::vector<int> subset_components(const WeightedGraph& g, const std::vector<int>& edge_ids) {
  VertexContraction uf(g.n);
  for (int id : edge_ids) uf.merge(g.edges[id].u, g.edges[id].v);
  std::vector<int> label(g.n, -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v) {
    int r = uf.find(v);
    if (label[r] == -1) label[r] = next++;
    label[v] = label[r];
  }
  return label;
}

std::vector<int> merge_edge_sets(std::initializer_list<const std::vector<int>*> sets) {
  std::set<int> acc;
  for (const auto* s : sets) acc.insert(s->begin(), s->end());
  return std::vector<int>(acc.begin(), acc.end());
}

}  // namespace rcover
