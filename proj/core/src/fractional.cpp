#include "rcover/fractional.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace rcover {

namespace {

// One Garg-Konemann run with step eps. Returns false when the duality-gap
// certificate (gap <= target) was not reached, in which case the caller
// retries with a finer step.
bool gk_run(const WeightedGraph& g, const std::vector<std::pair<int, int>>& pairs,
            const Rat& eps, const Rat& target_gap, FractionalMulticut* out) {
  const int m = (int)g.edges.size();
  // delta = (1+eps) / ((1+eps) * L)^(1/eps) with L = n an upper bound on the
  // number of edges of a simple path; 1/eps is an integer by construction.
  unsigned inv_eps = (unsigned)mpz_get_ui(Rat(1 / eps).get_num().get_mpz_t());
  Rat delta = (1 + eps) / rat_pow((1 + eps) * std::max(2, g.n), inv_eps);

  std::vector<Rat> len(m), congestion(m, Rat(0));
  for (int j = 0; j < m; ++j) {
    if (g.edges[j].cost <= 0)
      throw std::invalid_argument("fractional multicut: zero-cost edge unsupported");
    len[j] = delta / g.edges[j].cost;
  }
  Rat routed = 0;
  int iterations = 0;

  WeightedGraph metric = g;
  auto refresh_metric = [&]() {
    for (int j = 0; j < m; ++j) metric.edges[j].cost = len[j];
  };
  auto certify = [&]() -> bool {
    refresh_metric();
    // alpha = min pair distance under len; x = len/alpha is exactly feasible.
    Rat alpha;
    bool first = true;
    for (const auto& [s, t] : pairs) {
      ShortestPaths sp = shortest_paths(metric, {s});
      if (!sp.reachable[t]) throw std::invalid_argument("fractional multicut: disconnected pair");
      if (first || sp.dist[t] < alpha) alpha = sp.dist[t];
      first = false;
    }
    if (alpha <= 0) return false;  // some pair still at distance zero
    Rat cut_value = 0;
    for (int j = 0; j < m; ++j) cut_value += g.edges[j].cost * len[j];
    cut_value /= alpha;
    Rat max_cong = 0;
    for (int j = 0; j < m; ++j) max_cong = std::max(max_cong, congestion[j]);
    if (max_cong == 0 || routed == 0) return false;
    Rat flow_lower = routed / max_cong;
    if (cut_value > target_gap * flow_lower) return false;
    out->x.assign(m, Rat(0));
    for (int j = 0; j < m; ++j) out->x[j] = len[j] / alpha;
    out->value = cut_value;
    out->flow_lower = flow_lower;
    out->gap = cut_value / flow_lower;
    out->iterations = iterations;
    return true;
  };

  for (;;) {
    // Globally shortest pair path under current lengths.
    refresh_metric();
    int best_pair = -1;
    Rat best_dist;
    ShortestPaths best_sp;
    for (int i = 0; i < (int)pairs.size(); ++i) {
      ShortestPaths sp = shortest_paths(metric, {pairs[i].first});
      if (!sp.reachable[pairs[i].second])
        throw std::invalid_argument("fractional multicut: disconnected pair");
      Rat d = sp.dist[pairs[i].second];
      if (best_pair == -1 || d < best_dist) {
        best_pair = i;
        best_dist = d;
        best_sp = sp;
      }
    }
    if (best_pair == -1) return false;  // no pairs: caller handles separately
    if (best_dist >= 1) break;
    std::vector<int> path = extract_path(metric, best_sp, pairs[best_pair].second);
    Rat cmin;
    bool first = true;
    for (int id : path) {
      if (first || g.edges[id].cost < cmin) cmin = g.edges[id].cost;
      first = false;
    }
    routed += cmin;
    for (int id : path) {
      Rat frac = cmin / g.edges[id].cost;
      congestion[id] += frac;
      len[id] *= 1 + eps * frac;
    }
    ++iterations;
    // Early exit once the certificate already holds.
    if (iterations % 64 == 0 && certify()) return true;
  }
  return certify();
}

}  // namespace

FractionalMulticut fractional_multicut(const WeightedGraph& g,
                                       const std::vector<std::pair<int, int>>& pairs,
                                       const Rat& eps_f) {
  if (eps_f <= 0 || eps_f >= 1) throw std::invalid_argument("fractional multicut: eps_f in (0,1)");
  for (const auto& [s, t] : pairs)
    if (s == t) throw std::invalid_argument("fractional multicut: coincident pair");
  FractionalMulticut out;
  if (pairs.empty()) {
    out.x.assign(g.edges.size(), Rat(0));
    out.value = 0;
    out.flow_lower = 0;
    out.gap = 1;
    return out;
  }
  Rat target = 1 + eps_f;
  // Internal step with integral 1/eps so delta stays rational; refine until
  // the weak-duality certificate lands under the target gap.
  Int denom = rat_ceil(4 / eps_f);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rat eps(1, denom);
    if (gk_run(g, pairs, eps, target, &out)) return out;
    denom *= 2;
  }
  throw std::logic_error("fractional multicut: certificate not reached (step underflow)");
}

GvyResult gvy_region_growing(const WeightedGraph& g,
                             const std::vector<std::pair<int, int>>& pairs,
                             const std::vector<Rat>& x, const Rat& frac_value) {
  const int m = (int)g.edges.size();
  const int kappa = (int)pairs.size();
  GvyResult out;
  out.cut_cost = 0;
  out.log_bound = 0;
  if (kappa == 0) return out;
  // ln(kappa+1) is irrational for kappa >= 1, so the dyadic upper estimate is
  // strictly larger, which is what the existence argument needs.
  out.log_bound = ln_upper(Rat(kappa + 1));
  const Rat two_log = 2 * out.log_bound;
  const Rat half(1, 2);
  const Rat credit = frac_value / kappa;

  std::vector<char> alive(g.n, 1);
  std::vector<char> edge_alive(m, 1);
  std::set<int> cut_acc;

  for (int pi = 0; pi < kappa; ++pi) {
    auto [s, t] = pairs[pi];
    if (!alive[s] || !alive[t]) continue;
    // Distances inside the alive subgraph under x as lengths.
    WeightedGraph metric = g;
    for (int j = 0; j < m; ++j) metric.edges[j].cost = x[j];
    std::vector<char> enabled(m, 0);
    for (int j = 0; j < m; ++j)
      enabled[j] = edge_alive[j] && alive[g.edges[j].u] && alive[g.edges[j].v];
    ShortestPaths sp = shortest_paths(metric, {s}, nullptr, &enabled);
    if (!sp.reachable[t]) continue;  // already separated by earlier regions
    assert(sp.dist[t] >= 1);

    // Piecewise-linear volume sweep. Breakpoints: vertex entry radii and
    // chord saturation radii, all below 1/2.
    std::vector<Rat> breaks;
    breaks.push_back(Rat(0));
    for (int v = 0; v < g.n; ++v)
      if (alive[v] && sp.reachable[v] && sp.dist[v] < half) breaks.push_back(sp.dist[v]);
    for (int j = 0; j < m; ++j) {
      if (!enabled[j]) continue;
      int u = g.edges[j].u, v = g.edges[j].v;
      if (!sp.reachable[u] || !sp.reachable[v]) continue;
      Rat cap_r = (x[j] + sp.dist[u] + sp.dist[v]) / 2;
      if (cap_r > 0 && cap_r < half) breaks.push_back(cap_r);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    auto covered = [&](int j, const Rat& r) -> Rat {
      int u = g.edges[j].u, v = g.edges[j].v;
      Rat c = 0;
      if (sp.reachable[u] && sp.dist[u] <= r) c += r - sp.dist[u];
      if (sp.reachable[v] && sp.dist[v] <= r) c += r - sp.dist[v];
      return std::min(c, x[j]);
    };
    auto volume_at = [&](const Rat& r) -> Rat {
      Rat vol = credit;
      for (int j = 0; j < m; ++j)
        if (enabled[j]) vol += g.edges[j].cost * covered(j, r);
      return vol;
    };
    auto cut_at = [&](const Rat& r, std::vector<int>* edges_out) -> Rat {
      Rat c = 0;
      for (int j = 0; j < m; ++j) {
        if (!enabled[j]) continue;
        int u = g.edges[j].u, v = g.edges[j].v;
        bool iu = sp.reachable[u] && sp.dist[u] <= r;
        bool iv = sp.reachable[v] && sp.dist[v] <= r;
        if (iu != iv) {
          c += g.edges[j].cost;
          if (edges_out) edges_out->push_back(j);
        }
      }
      return c;
    };

    // First radius r < 1/2 with cut(r) <= 2*log_bound*vol(r); exists because
    // otherwise the volume would exceed frac_value * (kappa+1)/kappa by 1/2.
    bool found = false;
    Rat radius;
    for (std::size_t b = 0; b < breaks.size() && !found; ++b) {
      Rat a = breaks[b];
      Rat next = (b + 1 < breaks.size()) ? breaks[b + 1] : half;
      Rat vol_a = volume_at(a);
      Rat cut_a = cut_at(a, nullptr);
      if (cut_a <= two_log * vol_a) {
        radius = a;
        found = true;
        break;
      }
      // Within (a, next) the cut is constant and volume grows with slope
      // >= cut_a; solve for the crossing point.
      Rat slope = 0;
      for (int j = 0; j < m; ++j) {
        if (!enabled[j]) continue;
        int u = g.edges[j].u, v = g.edges[j].v;
        Rat mid = (a + next) / 2;
        Rat cov_mid = covered(j, mid), cov_a = covered(j, a);
        if (next > a) slope += g.edges[j].cost * (cov_mid - cov_a) / (mid - a);
      }
      if (slope <= 0) continue;
      Rat r0 = a + (cut_a / two_log - vol_a) / slope;
      if (r0 > a && r0 < next && r0 < half) {
        // Volume is linear on (a,next) so the inequality holds exactly at r0.
        radius = r0;
        found = true;
      }
    }
    if (!found) throw std::logic_error("gvy_region_growing: no admissible radius (infeasible x?)");

    GvyRegion region;
    region.pair_index = pi;
    region.radius = radius;
    region.volume = volume_at(radius);
    region.cut_cost = cut_at(radius, &region.cut);
    assert(region.cut_cost <= two_log * region.volume);
    for (int v = 0; v < g.n; ++v)
      if (alive[v] && sp.reachable[v] && sp.dist[v] <= radius) region.vertices.push_back(v);
    for (int v : region.vertices) alive[v] = 0;
    for (int id : region.cut) edge_alive[id] = 0;
    // A radius below 1/2 cannot swallow both endpoints of any pair: their
    // x-distance is at least 1.
    for (const auto& [ps, pt] : pairs)
      assert(!(std::find(region.vertices.begin(), region.vertices.end(), ps) !=
                   region.vertices.end() &&
               std::find(region.vertices.begin(), region.vertices.end(), pt) !=
                   region.vertices.end()));
    cut_acc.insert(region.cut.begin(), region.cut.end());
    out.regions.push_back(std::move(region));
  }
  out.cut_edges.assign(cut_acc.begin(), cut_acc.end());
  out.cut_cost = edge_set_cost(g, out.cut_edges);
  return out;
}

}  // namespace rcover
