#pragma once
// Instance files. Two self-identifying formats:
//   setcover n m k lambda [nonuniform]   then m lines `cost elem...`
//                                        (or `b c elem...` when nonuniform)
//   graph n m                            then m lines `u v cost`, followed by
//                                        `root r`, `terminals t...`, or
//                                        `pairs p` + p lines `s t`
// Costs are decimal rationals ("3", "0.25") or fractions ("1/3"). A graph
// file's sections pick the problem: pairs mean multicut, root + terminals
// mean min-cut, terminals alone mean an unrooted Steiner tree; the format
// override in ParseOptions reroutes pairs to Steiner forest and root +
// terminals to Steiner tree. Parse errors carry 1-based line numbers.
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "rcover/instance.hpp"

namespace rcover {

struct ParseError : std::runtime_error {
  int line;  // 1-based; 0 for whole-file validation errors
  ParseError(int line_, const std::string& what)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what : what),
        line(line_) {}
};

// Accepts the problem_name() spellings (plus "min-cut" for "mincut").
ProblemKind problem_kind_from_name(const std::string& name);

struct ParseOptions {
  std::optional<int> k;               // graph files default to 1
  std::optional<Rat> lambda;          // graph files default to 1
  std::optional<ProblemKind> format;  // resolves the section dispatch
};

// Parses and validates; throws ParseError.
Instance parse_instance(std::istream& in, const ParseOptions& opts = {});
Instance parse_instance_file(const std::string& path, const ParseOptions& opts = {});

// Inverse of parse_instance for the same options (graph files do not carry
// k/lambda; Steiner forests re-read as multicut without the format override).
void write_instance(std::ostream& out, const Instance& inst);
std::string instance_to_string(const Instance& inst);

}  // namespace rcover
