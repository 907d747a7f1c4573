#include "rcover/io.hpp"

#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

namespace rcover {
namespace {

struct TokenLine {
  int number = 0;
  std::vector<std::string> tokens;
};

// Splits the stream into whitespace-separated tokens per line, skipping blank
// lines and `#` comments.
std::vector<TokenLine> tokenize(std::istream& in) {
  std::vector<TokenLine> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    TokenLine tl;
    tl.number = number;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      tl.tokens.push_back(tok);
    }
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
  }
  return out;
}

long parse_int(const std::string& tok, int line, const std::string& what) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, what + " `" + tok + "` is not an integer");
  }
  if (used != tok.size()) throw ParseError(line, what + " `" + tok + "` is not an integer");
  return v;
}

Rat parse_rat(const std::string& tok, int line, const std::string& what) {
  try {
    return rat_from_string(tok);
  } catch (const std::exception&) {
    throw ParseError(line, what + " `" + tok + "` is not a rational number");
  }
}

Instance parse_set_cover(const std::vector<TokenLine>& lines, const ParseOptions& opts) {
  const TokenLine& head = lines[0];
  bool nonuniform = head.tokens.size() == 6 && head.tokens[5] == "nonuniform";
  if (head.tokens.size() != 5 && !nonuniform)
    throw ParseError(head.number, "malformed header: expected `setcover n m k lambda [nonuniform]`");
  Instance inst;
  inst.kind = ProblemKind::set_cover;
  inst.nonuniform = nonuniform;
  inst.universe = int(parse_int(head.tokens[1], head.number, "universe size"));
  long m = parse_int(head.tokens[2], head.number, "set count");
  inst.k = int(parse_int(head.tokens[3], head.number, "k"));
  inst.lambda = parse_rat(head.tokens[4], head.number, "lambda");
  if (long(lines.size()) - 1 != m)
    throw ParseError(head.number, "header promises " + std::to_string(m) + " sets but the file has " +
                                      std::to_string(lines.size() - 1) + " set lines");
  int need = nonuniform ? 2 : 1;
  for (long s = 0; s < m; ++s) {
    const TokenLine& tl = lines[size_t(s) + 1];
    if (int(tl.tokens.size()) < need)
      throw ParseError(tl.number, nonuniform ? "set line needs two costs before its elements"
                                             : "set line needs a cost before its elements");
    if (nonuniform) {
      inst.set_first_cost.push_back(parse_rat(tl.tokens[0], tl.number, "first-stage cost"));
      inst.set_cost.push_back(parse_rat(tl.tokens[1], tl.number, "second-stage cost"));
    } else {
      inst.set_cost.push_back(parse_rat(tl.tokens[0], tl.number, "set cost"));
    }
    std::vector<int> elems;
    for (size_t i = size_t(need); i < tl.tokens.size(); ++i) {
      long e = parse_int(tl.tokens[i], tl.number, "element");
      if (e < 0 || e >= inst.universe)
        throw ParseError(tl.number, "element " + std::to_string(e) + " is outside the universe (n=" +
                                        std::to_string(inst.universe) + ")");
      elems.push_back(int(e));
    }
    inst.sets.push_back(std::move(elems));
  }
  if (opts.format && *opts.format != ProblemKind::set_cover)
    throw ParseError(head.number, "file is a set cover instance; the requested format `" +
                                      problem_name(*opts.format) + "` does not apply");
  return inst;
}

Instance parse_graph(const std::vector<TokenLine>& lines, const ParseOptions& opts) {
  const TokenLine& head = lines[0];
  if (head.tokens.size() != 3)
    throw ParseError(head.number, "malformed header: expected `graph n m`");
  long n = parse_int(head.tokens[1], head.number, "vertex count");
  long m = parse_int(head.tokens[2], head.number, "edge count");
  if (n < 0 || m < 0) throw ParseError(head.number, "graph sizes must be nonnegative");
  if (long(lines.size()) - 1 < m)
    throw ParseError(head.number, "header promises " + std::to_string(m) + " edges but the file ends early");

  auto parse_vertex = [&](const std::string& tok, int line, const std::string& what) {
    long v = parse_int(tok, line, what);
    if (v < 0 || v >= n)
      throw ParseError(line, what + " " + std::to_string(v) + " is not a vertex (n=" +
                                  std::to_string(n) + ")");
    return int(v);
  };

  std::vector<std::tuple<int, int, Rat>> edge_list;
  for (long e = 0; e < m; ++e) {
    const TokenLine& tl = lines[size_t(e) + 1];
    if (tl.tokens.size() != 3) throw ParseError(tl.number, "edge line needs `u v cost`");
    int u = parse_vertex(tl.tokens[0], tl.number, "edge endpoint");
    int v = parse_vertex(tl.tokens[1], tl.number, "edge endpoint");
    Rat cost = parse_rat(tl.tokens[2], tl.number, "edge cost");
    if (u == v) throw ParseError(tl.number, "edge is a self-loop");
    if (cost < 0) throw ParseError(tl.number, "edge cost is negative");
    edge_list.emplace_back(u, v, cost);
  }

  Instance inst;
  inst.graph = make_graph(int(n), edge_list);
  bool have_root = false, have_terminals = false, have_pairs = false;
  size_t i = size_t(m) + 1;
  while (i < lines.size()) {
    const TokenLine& tl = lines[i];
    const std::string& section = tl.tokens[0];
    if (section == "root") {
      if (have_root) throw ParseError(tl.number, "duplicate `root` section");
      if (tl.tokens.size() != 2) throw ParseError(tl.number, "`root` section needs one vertex");
      inst.root = parse_vertex(tl.tokens[1], tl.number, "root");
      have_root = true;
      ++i;
    } else if (section == "terminals") {
      if (have_terminals) throw ParseError(tl.number, "duplicate `terminals` section");
      if (tl.tokens.size() < 2) throw ParseError(tl.number, "`terminals` section is empty");
      for (size_t j = 1; j < tl.tokens.size(); ++j)
        inst.terminals.push_back(parse_vertex(tl.tokens[j], tl.number, "terminal"));
      have_terminals = true;
      ++i;
    } else if (section == "pairs") {
      if (have_pairs) throw ParseError(tl.number, "duplicate `pairs` section");
      if (tl.tokens.size() != 2) throw ParseError(tl.number, "`pairs` section needs a count");
      long p = parse_int(tl.tokens[1], tl.number, "pair count");
      if (long(lines.size()) - long(i) - 1 < p)
        throw ParseError(tl.number, "`pairs` promises " + std::to_string(p) +
                                        " lines but the file ends early");
      for (long j = 0; j < p; ++j) {
        const TokenLine& pl = lines[i + 1 + size_t(j)];
        if (pl.tokens.size() != 2) throw ParseError(pl.number, "pair line needs `s t`");
        int s = parse_vertex(pl.tokens[0], pl.number, "pair endpoint");
        int t = parse_vertex(pl.tokens[1], pl.number, "pair endpoint");
        inst.pairs.emplace_back(s, t);
      }
      have_pairs = true;
      i += 1 + size_t(p);
    } else {
      throw ParseError(tl.number, "unknown section `" + section + "`");
    }
  }

  if (have_pairs && (have_root || have_terminals))
    throw ParseError(0, "graph file mixes `pairs` with `root`/`terminals` sections");
  if (have_root && !have_terminals)
    throw ParseError(0, "graph file has a root but no `terminals` section");
  if (!have_pairs && !have_terminals) throw ParseError(0, "graph file declares no demands");

  if (opts.format) {
    switch (*opts.format) {
      case ProblemKind::steiner_tree:
        if (!have_terminals)
          throw ParseError(0, "format steiner-tree needs a `terminals` section");
        inst.kind = ProblemKind::steiner_tree;
        break;
      case ProblemKind::steiner_forest:
        if (!have_pairs) throw ParseError(0, "format steiner-forest needs a `pairs` section");
        inst.kind = ProblemKind::steiner_forest;
        break;
      case ProblemKind::min_cut:
        if (!have_root || !have_terminals)
          throw ParseError(0, "format mincut needs `root` and `terminals` sections");
        inst.kind = ProblemKind::min_cut;
        break;
      case ProblemKind::multicut:
        if (!have_pairs) throw ParseError(0, "format multicut needs a `pairs` section");
        inst.kind = ProblemKind::multicut;
        break;
      case ProblemKind::set_cover:
        throw ParseError(0, "file is a graph instance; the requested format `setcover` does not apply");
    }
  } else if (have_pairs) {
    inst.kind = ProblemKind::multicut;
  } else {
    inst.kind = have_root ? ProblemKind::min_cut : ProblemKind::steiner_tree;
  }
  return inst;
}

}  // namespace

ProblemKind problem_kind_from_name(const std::string& name) {
  for (ProblemKind kind : {ProblemKind::set_cover, ProblemKind::steiner_tree,
                           ProblemKind::steiner_forest, ProblemKind::min_cut, ProblemKind::multicut})
    if (name == problem_name(kind)) return kind;
  if (name == "min-cut") return ProblemKind::min_cut;
  throw ParseError(0, "unknown problem `" + name +
                          "`: expected setcover, steiner-tree, steiner-forest, mincut or multicut");
}

Instance parse_instance(std::istream& in, const ParseOptions& opts) {
  std::vector<TokenLine> lines = tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty instance file");
  Instance inst;
  if (lines[0].tokens[0] == "setcover") {
    inst = parse_set_cover(lines, opts);
  } else if (lines[0].tokens[0] == "graph") {
    inst = parse_graph(lines, opts);
    inst.k = 1;
    inst.lambda = 1;
  } else {
    throw ParseError(lines[0].number, "malformed header: expected `setcover` or `graph`");
  }
  if (opts.k) inst.k = *opts.k;
  if (opts.lambda) inst.lambda = *opts.lambda;
  try {
    validate_instance(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return inst;
}

Instance parse_instance_file(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open `" + path + "`");
  return parse_instance(in, opts);
}

void write_instance(std::ostream& out, const Instance& inst) {
  if (inst.kind == ProblemKind::set_cover) {
    out << "setcover " << inst.universe << ' ' << inst.sets.size() << ' ' << inst.k << ' '
        << rat_to_string(inst.lambda) << (inst.nonuniform ? " nonuniform" : "") << '\n';
    for (size_t s = 0; s < inst.sets.size(); ++s) {
      if (inst.nonuniform) out << rat_to_string(inst.set_first_cost[s]) << ' ';
      out << rat_to_string(inst.set_cost[s]);
      for (int e : inst.sets[s]) out << ' ' << e;
      out << '\n';
    }
    return;
  }
  out << "graph " << inst.graph.n << ' ' << inst.graph.edges.size() << '\n';
  for (const auto& e : inst.graph.edges)
    out << e.u << ' ' << e.v << ' ' << rat_to_string(e.cost) << '\n';
  if (inst.kind == ProblemKind::steiner_tree || inst.kind == ProblemKind::min_cut) {
    if (inst.root >= 0) out << "root " << inst.root << '\n';
    out << "terminals";
    for (int t : inst.terminals) out << ' ' << t;
    out << '\n';
  } else {
    out << "pairs " << inst.pairs.size() << '\n';
    for (const auto& [s, t] : inst.pairs) out << s << ' ' << t << '\n';
  }
}

std::string instance_to_string(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

}  // namespace rcover
