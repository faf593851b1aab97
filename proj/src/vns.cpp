#include "klsf/vns.hpp"

#include <algorithm>

namespace klsf {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::GreedyOnly: return "greedy";
    case Variant::BasicVNS: return "vns";
    case Variant::CoVNS: return "covns";
    case Variant::IntVNS: return "intvns";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string& name) {
  if (name == "greedy") return Variant::GreedyOnly;
  if (name == "vns") return Variant::BasicVNS;
  if (name == "covns") return Variant::CoVNS;
  if (name == "intvns") return Variant::IntVNS;
  return std::nullopt;
}

int effective_q_max(const Instance& instance, const SearchParams& params) {
  if (params.q_max > 0) return std::min(params.q_max, instance.graph.ell);
  int q = std::max(3, (instance.k_bar + 1) / 2 + 1);
  return std::min(instance.graph.ell, q);
}

int effective_move_budget(const Instance& instance, const SearchParams& params) {
  if (params.move_budget > 0) return params.move_budget;
  return 50 * instance.graph.ell;
}

LabelSet remove_random_labels(const LabelSet& labels, int q, Rng& rng) {
  auto present = labels.to_vector();
  int drop = std::min<int>(q, present.size());
  LabelSet result = labels;
  for (int i = 0; i < drop; ++i) {
    std::uniform_int_distribution<std::size_t> dist(i, present.size() - 1);
    std::swap(present[i], present[dist(rng)]);
    result.reset(present[i]);
  }
  return result;
}

Solution shake(const Instance& instance, const Solution& current, int q, Rng& rng) {
  if (q < 1) throw std::invalid_argument("shake: q must be positive");
  LabelSet reduced = remove_random_labels(current.labels, q, rng);
  CandidateRestriction full{LabelSet::full(instance.graph.ell)};
  return greedy_complete(instance, reduced, full, rng);
}

Solution local_descent(const Instance& instance, const Solution& start) {
  const auto& g = instance.graph;
  Solution current = start;
  bool improved = true;
  while (improved) {
    improved = false;
    auto present = current.labels.to_vector();
    auto absent = current.labels.complement().to_vector();
    for (int r : present) {
      LabelSet dropped = current.labels;
      dropped.reset(r);
      Solution candidate{dropped, count_components(g, dropped)};
      if (lex_less(candidate, current)) {
        current = candidate;
        improved = true;
        break;
      }
      for (int a : absent) {
        LabelSet swapped = dropped;
        swapped.set(a);
        Solution swap_candidate{swapped, count_components(g, swapped)};
        if (lex_less(swap_candidate, current)) {
          current = swap_candidate;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
  }
  return current;
}

namespace {

bool past_deadline(const Deadline& deadline) {
  return deadline && Clock::now() >= *deadline;
}

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

}  // namespace

SearchTrace basic_vns(const Instance& instance, const Solution& init, const SearchParams& params,
                      Rng& rng, Deadline deadline) {
  const auto start_time = Clock::now();
  const int floor = floor_components(instance.graph);
  const int q_max = effective_q_max(instance, params);
  const int move_budget = effective_move_budget(instance, params);
  const bool probabilistic = params.variant == Variant::IntVNS;

  SearchTrace trace;
  trace.seed = params.seed;
  trace.best = init;
  trace.points.push_back({0, trace.best.components, 0});

  CoolingState cooling = make_cooling_state(std::max(1, trace.best.labels.count()));
  int q = 1;
  int no_improve = 0;

  while (trace.best.components > floor && no_improve < params.max_no_improve &&
         !past_deadline(deadline)) {
    ++trace.iterations;
    Solution candidate = shake(instance, trace.best, q, rng);
    candidate = probabilistic ? prob_search(instance, candidate, cooling, rng, move_budget)
                              : local_descent(instance, candidate);
    if (lex_less(candidate, trace.best)) {
      trace.best = candidate;
      cooling = rebase(cooling, trace.best);
      q = 1;
      no_improve = 0;
    } else {
      ++no_improve;
      if (++q > q_max) q = 1;
    }
    trace.points.push_back({trace.iterations, trace.best.components, elapsed_ms(start_time)});
  }
  return trace;
}

SearchTrace co_vns(const Instance& instance, const SearchParams& params, Rng& rng) {
  const auto start_time = Clock::now();
  const int floor = floor_components(instance.graph);
  Deadline deadline;
  if (params.time_budget_ms > 0)
    deadline = start_time + std::chrono::milliseconds(params.time_budget_ms);

  LabelSet empty(instance.graph.ell);
  CandidateRestriction full{LabelSet::full(instance.graph.ell)};

  SearchTrace trace;
  trace.seed = params.seed;
  trace.best = greedy_complete(instance, empty, full, rng);
  trace.points.push_back({0, trace.best.components, elapsed_ms(start_time)});

  int no_improve = 0;
  int outer = 0;
  while (trace.best.components > floor && no_improve < params.max_no_improve &&
         !past_deadline(deadline)) {
    ++outer;
    Solution candidate = co_space_construct(instance, trace.best, rng);
    SearchTrace inner = basic_vns(instance, candidate, params, rng, deadline);
    trace.iterations += 1 + inner.iterations;
    if (lex_less(inner.best, trace.best)) {
      trace.best = inner.best;
      no_improve = 0;
    } else {
      ++no_improve;
    }
    trace.points.push_back({outer, trace.best.components, elapsed_ms(start_time)});
  }
  return trace;
}

SearchTrace solve(const Instance& instance, const SearchParams& params) {
  Rng rng(params.seed);
  switch (params.variant) {
    case Variant::GreedyOnly: {
      LabelSet empty(instance.graph.ell);
      CandidateRestriction full{LabelSet::full(instance.graph.ell)};
      SearchTrace trace;
      trace.seed = params.seed;
      trace.best = greedy_complete(instance, empty, full, rng);
      trace.iterations = 1;
      trace.points.push_back({0, trace.best.components, 0});
      return trace;
    }
    case Variant::BasicVNS: {
      LabelSet empty(instance.graph.ell);
      CandidateRestriction full{LabelSet::full(instance.graph.ell)};
      Solution init = greedy_complete(instance, empty, full, rng);
      Deadline deadline;
      if (params.time_budget_ms > 0)
        deadline = Clock::now() + std::chrono::milliseconds(params.time_budget_ms);
      return basic_vns(instance, init, params, rng, deadline);
    }
    case Variant::CoVNS:
    case Variant::IntVNS:
      return co_vns(instance, params, rng);
  }
  throw std::logic_error("unknown variant");
}

}  // namespace klsf
