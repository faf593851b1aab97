#ifndef KLSF_PROB_SEARCH_HPP
#define KLSF_PROB_SEARCH_HPP

#include "klsf/construction.hpp"

namespace klsf {

// Geometric cooling state, self-tuned by the best solution's label count:
// T0 = |Best_L|, alpha = 1 / |Best_L|.
struct CoolingState {
  double temperature = 1.0;
  double alpha = 1.0;
  int best_label_count = 1;
};

// Temperatures at or below this are treated as frozen.
inline constexpr double kFrozenTemperature = 1e-9;

CoolingState make_cooling_state(int best_label_count);

// Improving or equal moves pass unconditionally; a deterioration `delta`
// passes with Boltzmann probability exp(-delta / T).
bool accept_move(int delta, double temperature, Rng& rng);

inline CoolingState cool(CoolingState state) {
  state.temperature *= state.alpha;
  return state;
}

// Fresh schedule when the best solution's label count changed, otherwise
// the state is kept as is.
CoolingState rebase(const CoolingState& state, const Solution& new_best);

// Random add/drop/swap walk with Boltzmann acceptance, cooling once per
// candidate move. Returns the best feasible solution seen.
Solution prob_search(const Instance& instance, const Solution& start, CoolingState state,
                     Rng& rng, int move_budget);

}  // namespace klsf

#endif
