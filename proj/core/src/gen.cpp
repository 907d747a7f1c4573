#include "rcover/gen.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <tuple>

#include "rcover/graph.hpp"

namespace rcover {
namespace {

// Uniform draw from [0, n) by rejection, so the distribution is exact and
// identical on every platform.
long below(std::mt19937_64& rng, long n) {
  std::uint64_t bound = std::uint64_t(n);
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit) return long(r % bound);
  }
}

bool chance(std::mt19937_64& rng, const Rat& p) {
  // exact-to-2^-64 draw: r*den < num*2^64
  Int r((unsigned long)rng());
  return r * p.get_den() < (p.get_num() << 64);
}

// Fisher-Yates prefix: `take` distinct values from 0..n-1.
std::vector<int> distinct_vertices(std::mt19937_64& rng, int n, int take) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < take; ++i) std::swap(pool[i], pool[i + below(rng, n - i)]);
  pool.resize(take);
  return pool;
}

Instance gen_set_cover(const GenConfig& cfg, std::mt19937_64& rng) {
  if (cfg.n < 1 || cfg.sets < 1)
    throw std::invalid_argument("set cover generation needs n >= 1 and sets >= 1");
  if (cfg.nonuniform && cfg.lambda != 1)
    throw std::invalid_argument("nonuniform set cover carries its inflation in the costs; lambda must be 1");
  Instance inst;
  inst.kind = ProblemKind::set_cover;
  inst.universe = cfg.n;
  inst.nonuniform = cfg.nonuniform;
  inst.sets.assign(cfg.sets, {});
  // Every element lands in one guaranteed set plus a coin flip per other set.
  for (int e = 0; e < cfg.n; ++e) {
    long home = below(rng, cfg.sets);
    for (long s = 0; s < cfg.sets; ++s)
      if (s == home || chance(rng, cfg.membership_probability)) inst.sets[s].push_back(e);
  }
  for (auto& set : inst.sets)
    if (set.empty()) set.push_back(int(below(rng, cfg.n)));
  for (int s = 0; s < cfg.sets; ++s) {
    Rat c = 1 + below(rng, cfg.max_cost);
    inst.set_cost.push_back(c);
    if (cfg.nonuniform) inst.set_first_cost.push_back(Rat(1 + below(rng, c.get_num().get_si())));
  }
  return inst;
}

WeightedGraph gen_connected_graph(const GenConfig& cfg, std::mt19937_64& rng) {
  if (cfg.n < 2) throw std::invalid_argument("graph generation needs n >= 2");
  if (cfg.edge_probability <= 0 || cfg.edge_probability > 1)
    throw std::invalid_argument("edge probability must be in (0, 1]");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::tuple<int, int, Rat>> edges;
    for (int u = 0; u < cfg.n; ++u)
      for (int v = u + 1; v < cfg.n; ++v)
        if (chance(rng, cfg.edge_probability)) edges.emplace_back(u, v, 1 + below(rng, cfg.max_cost));
    WeightedGraph g = make_graph(cfg.n, edges);
    std::vector<int> all(g.edges.size());
    for (size_t e = 0; e < all.size(); ++e) all[e] = int(e);
    std::vector<int> comp = subset_components(g, all);
    if (*std::max_element(comp.begin(), comp.end()) == 0) return g;
  }
  throw std::invalid_argument("graph generation kept drawing disconnected graphs; raise p or lower n");
}

}  // namespace

Instance generate_instance(const GenConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance inst;
  if (cfg.kind == ProblemKind::set_cover) {
    inst = gen_set_cover(cfg, rng);
  } else {
    if (cfg.demands < 1) throw std::invalid_argument("graph generation needs demands >= 1");
    inst.kind = cfg.kind;
    inst.graph = gen_connected_graph(cfg, rng);
    if (cfg.kind == ProblemKind::steiner_tree || cfg.kind == ProblemKind::min_cut) {
      bool rooted = cfg.rooted || cfg.kind == ProblemKind::min_cut;
      int take = cfg.demands + (rooted ? 1 : 0);
      if (take > cfg.n)
        throw std::invalid_argument("more terminals than vertices");
      std::vector<int> verts = distinct_vertices(rng, cfg.n, take);
      if (rooted) {
        inst.root = verts.back();
        verts.pop_back();
      }
      std::sort(verts.begin(), verts.end());
      inst.terminals = verts;
    } else {
      long distinct = long(cfg.n) * (cfg.n - 1) / 2;
      if (cfg.demands > distinct)
        throw std::invalid_argument("more pairs than distinct vertex pairs");
      while (int(inst.pairs.size()) < cfg.demands) {
        int s = int(below(rng, cfg.n));
        int t = int(below(rng, cfg.n));
        if (s == t) continue;
        if (s > t) std::swap(s, t);
        bool dup = false;
        for (const auto& [a, b] : inst.pairs) dup = dup || (a == s && b == t);
        if (!dup) inst.pairs.emplace_back(s, t);
      }
    }
  }
  inst.k = cfg.k;
  inst.lambda = cfg.lambda;
  validate_instance(inst);
  return inst;
}

}  // namespace rcover
