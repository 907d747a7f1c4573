#include "rcover/maxflow.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace rcover {

namespace {

// Residual network over the undirected graph: per edge we track a signed
// flow f with |f| <= cost; capacity u->v is cost - f, v->u is cost + f.
struct Residual {
  const WeightedGraph& g;
  const std::vector<char>* enabled;
  std::vector<Rat> flow;  // signed, positive in direction u->v

  explicit Residual(const WeightedGraph& g_, const std::vector<char>* en)
      : g(g_), enabled(en), flow(g_.edges.size(), Rat(0)) {}

  bool usable(int id) const { return !enabled || (*enabled)[id]; }

  Rat residual(int id, int from) const {
    const auto& e = g.edges[id];
    return from == e.u ? Rat(e.cost - flow[id]) : Rat(e.cost + flow[id]);
  }

  void push(int id, int from, const Rat& amount) {
    if (from == g.edges[id].u)
      flow[id] += amount;
    else
      flow[id] -= amount;
  }
};

}  // namespace

MinCutResult max_flow_min_cut(const WeightedGraph& g, const std::vector<int>& sources,
                              const std::vector<int>& sinks,
                              const std::vector<char>* edge_enabled) {
  std::vector<char> is_source(g.n, 0), is_sink(g.n, 0);
  for (int s : sources) is_source[s] = 1;
  for (int t : sinks) is_sink[t] = 1;
  for (int v = 0; v < g.n; ++v)
    if (is_source[v] && is_sink[v]) throw std::logic_error("max_flow_min_cut: source meets sink");

  Residual net(g, edge_enabled);
  Rat value = 0;
  std::vector<int> prev_edge(g.n), prev_vertex(g.n);
  for (;;) {
    // BFS from the source set in the residual network.
    std::vector<char> seen(g.n, 0);
    std::queue<int> bfs;
    for (int s : sources)
      if (!seen[s]) {
        seen[s] = 1;
        bfs.push(s);
      }
    int reached_sink = -1;
    while (!bfs.empty() && reached_sink == -1) {
      int v = bfs.front();
      bfs.pop();
      for (int id : g.incidence[v]) {
        if (!net.usable(id)) continue;
        if (net.residual(id, v) <= 0) continue;
        int w = g.other_end(id, v);
        if (seen[w]) continue;
        seen[w] = 1;
        prev_edge[w] = id;
        prev_vertex[w] = v;
        if (is_sink[w]) {
          reached_sink = w;
          break;
        }
        bfs.push(w);
      }
    }
    if (reached_sink == -1) {
      // `seen` is the minimal source side; collect crossing edges.
      MinCutResult out;
      out.value = value;
      out.source_side.assign(seen.begin(), seen.end());
      for (int id = 0; id < (int)g.edges.size(); ++id) {
        if (!net.usable(id)) continue;
        if (seen[g.edges[id].u] != seen[g.edges[id].v]) out.cut_edges.push_back(id);
      }
      return out;
    }
    // Bottleneck along the augmenting path, then push.
    Rat bottleneck;
    bool first = true;
    for (int v = reached_sink; !is_source[v]; v = prev_vertex[v]) {
      Rat r = net.residual(prev_edge[v], prev_vertex[v]);
      if (first || r < bottleneck) bottleneck = r;
      first = false;
    }
    assert(bottleneck > 0);
    for (int v = reached_sink; !is_source[v]; v = prev_vertex[v])
      net.push(prev_edge[v], prev_vertex[v], bottleneck);
    value += bottleneck;
  }
}

Rat min_cut_value(const WeightedGraph& g, int s, int t, const std::vector<char>* edge_enabled) {
  return max_flow_min_cut(g, {s}, {t}, edge_enabled).value;
}

GomoryHuTree gomory_hu_tree(const WeightedGraph& g) {
  GomoryHuTree t;
  t.parent.assign(g.n, 0);
  t.label.assign(g.n, Rat(0));
  if (g.n > 0) t.parent[0] = -1;
  for (int i = 1; i < g.n; ++i) {
    MinCutResult cut = max_flow_min_cut(g, {i}, {t.parent[i]});
    t.label[i] = cut.value;
    for (int j = i + 1; j < g.n; ++j)
      if (t.parent[j] == t.parent[i] && cut.source_side[j]) t.parent[j] = i;
  }
  return t;
}

Rat gomory_hu_query(const GomoryHuTree& t, int u, int v) {
  if (u == v) throw std::logic_error("gomory_hu_query: identical vertices");
  // Depths, then walk up both sides tracking the path minimum.
  auto depth = [&](int x) {
    int d = 0;
    for (int y = x; t.parent[y] != -1; y = t.parent[y]) ++d;
    return d;
  };
  int du = depth(u), dv = depth(v);
  bool first = true;
  Rat best;
  auto step = [&](int& x) {
    if (first || t.label[x] < best) best = t.label[x];
    first = false;
    x = t.parent[x];
  };
  while (du > dv) {
    step(u);
    --du;
  }
  while (dv > du) {
    step(v);
    --dv;
  }
  while (u != v) {
    step(u);
    step(v);
  }
  return best;
}

}  // namespace rcover
