#include "klsf/construction.hpp"

namespace klsf {

Solution greedy_complete(const Instance& instance, const LabelSet& start,
                         const CandidateRestriction& allowed, Rng& rng) {
  const auto& g = instance.graph;
  if (!start.is_subset_of(allowed.allowed))
    throw std::invalid_argument("greedy_complete: start must be a subset of the allowed pool");
  if (start.count() > instance.k_bar)
    throw std::invalid_argument("greedy_complete: start exceeds the label budget");

  LabelSet current = start;
  int components = count_components(g, current);
  const int floor = floor_components(g);
  std::vector<int> ties;

  while (current.count() < instance.k_bar && components > floor) {
    int best = components;
    ties.clear();
    for (int label = 0; label < g.ell; ++label) {
      if (current.test(label) || !allowed.allowed.test(label)) continue;
      LabelSet candidate = current;
      candidate.set(label);
      int c = count_components(g, candidate);
      if (c < best) {
        best = c;
        ties.clear();
        ties.push_back(label);
      } else if (c == best && c < components) {
        ties.push_back(label);
      }
    }
    if (ties.empty()) break;  // no strict improvement left
    int pick = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng)];
    current.set(pick);
    components = best;
  }
  return Solution{current, components};
}

Solution co_space_construct(const Instance& instance, const Solution& incumbent, Rng& rng) {
  LabelSet empty(instance.graph.ell);
  CandidateRestriction full{LabelSet::full(instance.graph.ell)};

  LabelSet pool = incumbent.labels.complement();
  if (pool.none()) return greedy_complete(instance, empty, full, rng);

  Solution built = greedy_complete(instance, empty, CandidateRestriction{pool}, rng);
  if (built.components == instance.graph.n && floor_components(instance.graph) < instance.graph.n)
    return greedy_complete(instance, empty, full, rng);  // pool admits nothing useful
  return built;
}

}  // namespace klsf
