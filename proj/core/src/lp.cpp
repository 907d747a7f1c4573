#include "rcover/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace rcover {

CoveringLpResult solve_covering_lp(const std::vector<Rat>& costs,
                                   const std::vector<std::vector<int>>& rows) {
  const int ncols = (int)costs.size();
  const int nrows = (int)rows.size();
  for (const Rat& c : costs)
    if (c < 0) throw std::invalid_argument("covering LP: negative cost");
  std::vector<std::vector<char>> hit(nrows, std::vector<char>(ncols, 0));
  for (int i = 0; i < nrows; ++i) {
    if (rows[i].empty()) throw std::invalid_argument("covering LP: uncoverable row");
    for (int j : rows[i]) {
      if (j < 0 || j >= ncols) throw std::invalid_argument("covering LP: bad column index");
      hit[i][j] = 1;
    }
  }

  // Simplex on the packing dual:  max sum y_i  s.t. per column j:
  //   sum_{i hitting j} y_i + s_j = costs[j],  y, s >= 0.
  // Variables 0..nrows-1 are y, nrows..nrows+ncols-1 are slacks. The slack
  // basis is feasible because costs >= 0.
  const int nvar = nrows + ncols;
  // tab[r] = constraint row r (ncols of them): coefficients + rhs at the end.
  std::vector<std::vector<Rat>> tab(ncols, std::vector<Rat>(nvar + 1, Rat(0)));
  std::vector<Rat> obj(nvar + 1, Rat(0));  // reduced objective row (maximize)
  std::vector<int> basis(ncols);
  for (int j = 0; j < ncols; ++j) {
    for (int i = 0; i < nrows; ++i)
      if (hit[i][j]) tab[j][i] = 1;
    tab[j][nrows + j] = 1;
    tab[j][nvar] = costs[j];
    basis[j] = nrows + j;
  }
  for (int i = 0; i < nrows; ++i) obj[i] = 1;

  for (;;) {
    // Bland: entering = lowest-index variable with positive reduced cost.
    int enter = -1;
    for (int v = 0; v < nvar; ++v)
      if (obj[v] > 0) {
        enter = v;
        break;
      }
    if (enter == -1) break;
    // Ratio test, ties by lowest basis variable index (Bland).
    int leave = -1;
    Rat best_ratio;
    for (int r = 0; r < ncols; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rat ratio = tab[r][nvar] / tab[r][enter];
      if (leave == -1 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == -1)
      throw std::invalid_argument("covering LP: unbounded dual (uncoverable row)");
    // Pivot.
    Rat piv = tab[leave][enter];
    for (int v = 0; v <= nvar; ++v) tab[leave][v] /= piv;
    for (int r = 0; r < ncols; ++r) {
      if (r == leave) continue;
      if (tab[r][enter] == 0) continue;
      Rat f = tab[r][enter];
      for (int v = 0; v <= nvar; ++v) tab[r][v] -= f * tab[leave][v];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (int v = 0; v <= nvar; ++v) obj[v] -= f * tab[leave][v];
    }
    basis[leave] = enter;
  }

  CoveringLpResult out;
  out.y.assign(nrows, Rat(0));
  for (int r = 0; r < ncols; ++r)
    if (basis[r] < nrows) out.y[basis[r]] = tab[r][nvar];
  out.value = 0;
  for (const Rat& yi : out.y) out.value += yi;
  // The covering primal appears as the negated reduced costs of the slacks.
  out.x.assign(ncols, Rat(0));
  for (int j = 0; j < ncols; ++j) out.x[j] = -obj[nrows + j];
#ifndef NDEBUG
  // Strong duality and feasibility sanity checks.
  Rat primal = 0;
  for (int j = 0; j < ncols; ++j) {
    assert(out.x[j] >= 0);
    primal += costs[j] * out.x[j];
  }
  assert(primal == out.value);
  for (int i = 0; i < nrows; ++i) {
    Rat s = 0;
    for (int j : rows[i]) s += out.x[j];
    assert(s >= 1);
  }
#endif
  return out;
}

PathLpResult solve_multicut_path_lp(const WeightedGraph& g,
                                    const std::vector<std::pair<int, int>>& pairs) {
  const int m = (int)g.edges.size();
  std::vector<Rat> costs(m);
  for (int j = 0; j < m; ++j) costs[j] = g.edges[j].cost;

  PathLpResult out;
  out.x.assign(m, Rat(0));
  out.value = 0;
  for (;;) {
    // Separate: shortest path per pair under current x as edge lengths.
    WeightedGraph metric = g;
    for (int j = 0; j < m; ++j) metric.edges[j].cost = out.x[j];
    bool added = false;
    for (const auto& [s, t] : pairs) {
      ShortestPaths sp = shortest_paths(metric, {s});
      if (!sp.reachable[t]) throw std::invalid_argument("path LP: disconnected pair");
      if (sp.dist[t] < 1) {
        out.rows.push_back(extract_path(metric, sp, t));
        added = true;
      }
    }
    if (!added) return out;
    CoveringLpResult lp = solve_covering_lp(costs, out.rows);
    out.x = lp.x;
    out.value = lp.value;
  }
}

}  // namespace rcover
