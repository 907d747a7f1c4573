#pragma once
// Seeded random instances for experiments and tests. Everything is driven by
// one mt19937_64, so a (config, seed) pair always yields the same instance.
#include <cstdint>

#include "rcover/instance.hpp"

namespace rcover {

struct GenConfig {
  ProblemKind kind = ProblemKind::set_cover;
  int n = 8;       // universe size (set cover) or vertex count (graphs)
  int sets = 6;    // set cover only
  int demands = 3; // terminals or pairs (graphs)
  long max_cost = 8;               // integer costs drawn uniformly from 1..max_cost
  Rat edge_probability = Rat(2, 5);     // G(n,p), re-rolled until connected
  Rat membership_probability = Rat(1, 4);  // per extra set, beyond the guaranteed one
  bool nonuniform = false;  // set cover: first-stage costs drawn in 1..second
  bool rooted = true;       // Steiner tree: emit a root vertex
  int k = 1;
  Rat lambda = 1;
};

// Rejects impossible combinations (more demands than vertices, nonuniform
// with lambda != 1, ...) with std::invalid_argument; the result always passes
// validate_instance.
Instance generate_instance(const GenConfig& cfg, std::uint64_t seed);

}  // namespace rcover
