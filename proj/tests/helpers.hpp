#ifndef KLSF_TEST_HELPERS_HPP
#define KLSF_TEST_HELPERS_HPP

#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "klsf/instance.hpp"

namespace klsf::testing {

inline Instance make_instance(int n, int ell, int k_bar,
                              std::vector<LabeledGraph::Edge> edges) {
  Instance instance;
  instance.graph.n = n;
  instance.graph.ell = ell;
  instance.graph.edges = std::move(edges);
  instance.k_bar = k_bar;
  return instance;
}

// Independent component counter: adjacency list + BFS, no union-find.
inline int bfs_components(const LabeledGraph& graph, const LabelSet& labels) {
  std::vector<std::vector<int>> adj(graph.n);
  for (const auto& e : graph.edges) {
    if (!labels.test(e.label)) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(graph.n, false);
  int components = 0;
  for (int s = 0; s < graph.n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
  }
  return components;
}

inline LabelSet random_label_set(int ell, std::mt19937_64& rng) {
  LabelSet s(ell);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < ell; ++i)
    if (coin(rng)) s.set(i);
  return s;
}

// Label 0 is greedy bait: it spans vertices 0..6 but strands 7 and 8 with a
// budget of 2, while labels 2 and 3 together span everything. Greedy ends at
// 2 components; the optimum {2, 3} has 1.
inline Instance deceptive_instance() {
  return make_instance(9, 4, 2,
                       {{0, 1, 0},
                        {0, 2, 0},
                        {0, 3, 0},
                        {0, 4, 0},
                        {0, 5, 0},
                        {0, 6, 0},
                        {7, 8, 1},
                        {0, 1, 2},
                        {1, 2, 2},
                        {2, 3, 2},
                        {3, 4, 2},
                        {0, 7, 2},
                        {4, 5, 3},
                        {5, 6, 3},
                        {6, 8, 3}});
}

// Path 0-1-2-3 spanned by {0,1} and independently by {2,3}.
inline Instance two_group_path_instance() {
  return make_instance(4, 4, 2,
                       {{0, 1, 0}, {1, 2, 0}, {2, 3, 1}, {0, 1, 2}, {1, 2, 2}, {2, 3, 3}});
}

// Blanks the elapsed_ms data column and the mean_elapsed_ms summary column so
// two bench outputs can be compared for determinism.
inline std::string strip_elapsed(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (line.rfind("# summary,", 0) == 0 && fields.size() >= 6 && fields[1] != "variant") {
      fields.back() = "";
    } else if (!line.empty() && line[0] != '#' && fields.size() >= 6 && fields[0] != "instance") {
      fields[5] = "";
    }
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace klsf::testing

#endif
