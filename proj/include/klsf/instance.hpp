#ifndef KLSF_INSTANCE_HPP
#define KLSF_INSTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "klsf/label_set.hpp"

namespace klsf {

// Edge-labelled undirected graph. Immutable after construction.
struct LabeledGraph {
  struct Edge {
    int u;
    int v;
    int label;
  };

  int n = 0;    // vertices 0..n-1
  int ell = 0;  // labels 0..ell-1
  std::vector<Edge> edges;
};

// A label set together with its cached objective value.
struct Solution {
  LabelSet labels;
  int components = 0;
};

// Labelled graph plus the label budget.
struct Instance {
  LabeledGraph graph;
  int k_bar = 0;
};

// Components of the subgraph on all n vertices induced by the selected labels.
// Union-find with path compression and union by size.
int count_components(const LabeledGraph& graph, const LabelSet& labels);

// Components under the full label universe; instance-wide lower bound.
int floor_components(const LabeledGraph& graph);

Solution make_solution(const Instance& instance, const LabelSet& labels);

// Fewer components first, then fewer labels.
inline bool lex_less(const Solution& a, const Solution& b) {
  if (a.components != b.components) return a.components < b.components;
  return a.labels.count() < b.labels.count();
}

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// File format:
//   line 1: n m ell k_bar
//   then m lines: u v label   (0-based)
// '#' starts a comment line; blank lines are ignored.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

// Canonical form: edges normalized to u < v and sorted.
std::string write_instance(const Instance& instance);

// Validates all structural invariants, throwing ParseError-style messages on line 0.
void validate_instance(const Instance& instance);

}  // namespace klsf

#endif
