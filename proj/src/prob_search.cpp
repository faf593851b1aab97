#include "klsf/prob_search.hpp"

#include <cmath>

namespace klsf {

CoolingState make_cooling_state(int best_label_count) {
  if (best_label_count < 1) best_label_count = 1;  // empty best: degenerate schedule
  CoolingState s;
  s.best_label_count = best_label_count;
  s.temperature = static_cast<double>(best_label_count);
  s.alpha = 1.0 / best_label_count;
  return s;
}

bool accept_move(int delta, double temperature, Rng& rng) {
  if (delta <= 0) return true;
  if (temperature <= kFrozenTemperature) return false;
  double p = std::exp(-static_cast<double>(delta) / temperature);
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

CoolingState rebase(const CoolingState& state, const Solution& new_best) {
  int count = new_best.labels.count();
  if (count < 1) count = 1;
  if (count == state.best_label_count) return state;
  return make_cooling_state(count);
}

namespace {

enum class MoveKind { Add, Drop, Swap };

}  // namespace

Solution prob_search(const Instance& instance, const Solution& start, CoolingState state,
                     Rng& rng, int move_budget) {
  const auto& g = instance.graph;
  Solution current = start;
  Solution best = start;

  for (int step = 0; step < move_budget; ++step) {
    auto present = current.labels.to_vector();
    auto absent = current.labels.complement().to_vector();

    MoveKind kinds[3];
    int n_kinds = 0;
    if (!absent.empty() && static_cast<int>(present.size()) < instance.k_bar)
      kinds[n_kinds++] = MoveKind::Add;
    if (!present.empty()) kinds[n_kinds++] = MoveKind::Drop;
    if (!present.empty() && !absent.empty()) kinds[n_kinds++] = MoveKind::Swap;
    if (n_kinds == 0) break;

    MoveKind kind = kinds[std::uniform_int_distribution<int>(0, n_kinds - 1)(rng)];
    LabelSet labels = current.labels;
    auto pick = [&rng](const std::vector<int>& pool) {
      return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    switch (kind) {
      case MoveKind::Add:
        labels.set(pick(absent));
        break;
      case MoveKind::Drop:
        labels.reset(pick(present));
        break;
      case MoveKind::Swap:
        labels.reset(pick(present));
        labels.set(pick(absent));
        break;
    }

    Solution candidate{labels, count_components(g, labels)};
    int delta = candidate.components - current.components;
    if (accept_move(delta, state.temperature, rng)) current = candidate;
    if (lex_less(current, best)) {
      best = current;
      state = rebase(state, best);
    }
    state = cool(state);
  }
  return best;
}

}  // namespace klsf
