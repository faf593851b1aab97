#include "klsf/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace klsf {

namespace {

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;
  int components;

  explicit UnionFind(int n) : parent(n), size(n, 1), components(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    --components;
  }
};

}  // namespace

int count_components(const LabeledGraph& graph, const LabelSet& labels) {
  if (labels.width() != graph.ell)
    throw std::invalid_argument("label set width does not match instance");
  UnionFind uf(graph.n);
  for (const auto& e : graph.edges)
    if (labels.test(e.label)) uf.unite(e.u, e.v);
  return uf.components;
}

int floor_components(const LabeledGraph& graph) {
  return count_components(graph, LabelSet::full(graph.ell));
}

Solution make_solution(const Instance& instance, const LabelSet& labels) {
  return Solution{labels, count_components(instance.graph, labels)};
}

void validate_instance(const Instance& instance) {
  const auto& g = instance.graph;
  if (g.n < 1) throw ParseError(0, "vertex count must be at least 1");
  if (g.ell < 1) throw ParseError(0, "label count must be at least 1");
  if (instance.k_bar < 1 || instance.k_bar > g.ell)
    throw ParseError(0, "k_bar must be in [1, ell]");
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.u == e.v) throw ParseError(0, "self-loop");
    if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n)
      throw ParseError(0, "vertex id out of range");
    if (e.label < 0 || e.label >= g.ell) throw ParseError(0, "label id out of range");
    auto key = std::make_tuple(std::min(e.u, e.v), std::max(e.u, e.v), e.label);
    if (!seen.insert(key).second) throw ParseError(0, "duplicate (edge, label) pair");
  }
}

Instance parse_instance(std::istream& in) {
  Instance instance;
  int expected_edges = -1;
  int line_no = 0;
  std::string line;
  std::set<std::tuple<int, int, int>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (expected_edges < 0) {
      int n, m, ell, k_bar;
      if (!(ls >> n)) continue;  // blank or comment line before the header
      if (!(ls >> m >> ell >> k_bar))
        throw ParseError(line_no, "header must be 'n m ell k_bar'");
      if (n < 1) throw ParseError(line_no, "vertex count must be at least 1");
      if (m < 0) throw ParseError(line_no, "edge count must be non-negative");
      if (ell < 1) throw ParseError(line_no, "label count must be at least 1");
      if (k_bar < 1 || k_bar > ell) throw ParseError(line_no, "k_bar must be in [1, ell]");
      instance.graph.n = n;
      instance.graph.ell = ell;
      instance.k_bar = k_bar;
      instance.graph.edges.reserve(m);
      expected_edges = m;
      continue;
    }
    int u, v, label;
    if (!(ls >> u)) continue;
    if (!(ls >> v >> label)) throw ParseError(line_no, "edge line must be 'u v label'");
    if (static_cast<int>(instance.graph.edges.size()) >= expected_edges)
      throw ParseError(line_no, "more edge lines than declared in the header");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (u < 0 || u >= instance.graph.n || v < 0 || v >= instance.graph.n)
      throw ParseError(line_no, "vertex id out of range");
    if (label < 0 || label >= instance.graph.ell)
      throw ParseError(line_no, "label id out of range");
    auto key = std::make_tuple(std::min(u, v), std::max(u, v), label);
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate (edge, label) pair");
    instance.graph.edges.push_back({u, v, label});
  }

  if (expected_edges < 0) throw ParseError(line_no, "missing header line");
  if (static_cast<int>(instance.graph.edges.size()) != expected_edges)
    throw ParseError(line_no, "fewer edge lines than declared in the header");
  return instance;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return parse_instance(in);
}

std::string write_instance(const Instance& instance) {
  auto edges = instance.graph.edges;
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.u, a.v, a.label) < std::tie(b.u, b.v, b.label);
  });
  std::ostringstream out;
  out << instance.graph.n << ' ' << edges.size() << ' ' << instance.graph.ell << ' '
      << instance.k_bar << '\n';
  for (const auto& e : edges) out << e.u << ' ' << e.v << ' ' << e.label << '\n';
  return out.str();
}

}  // namespace klsf
