#ifndef KLSF_VNS_HPP
#define KLSF_VNS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "klsf/construction.hpp"
#include "klsf/prob_search.hpp"

namespace klsf {

enum class Variant { GreedyOnly, BasicVNS, CoVNS, IntVNS };

std::string variant_name(Variant v);
std::optional<Variant> parse_variant(const std::string& name);

struct SearchParams {
  int q_max = 0;            // 0 = auto: min(ell, max(3, ceil(k_bar/2) + 1))
  int max_no_improve = 50;  // consecutive non-improving outer iterations before stop
  std::int64_t time_budget_ms = 0;  // 0 = no time cap
  std::uint64_t seed = 0;
  Variant variant = Variant::IntVNS;
  int move_budget = 0;  // prob_search moves per call; 0 = auto: 50 * ell
};

int effective_q_max(const Instance& instance, const SearchParams& params);
int effective_move_budget(const Instance& instance, const SearchParams& params);

struct TracePoint {
  int iteration;
  int best_components;
  std::int64_t elapsed_ms;
};

struct SearchTrace {
  std::vector<TracePoint> points;
  Solution best;
  std::uint64_t seed = 0;
  int iterations = 0;
};

using Clock = std::chrono::steady_clock;

// No deadline when the optional is empty.
using Deadline = std::optional<Clock::time_point>;

// Drops min(q, |labels|) labels uniformly at random. Shake without the repair
// step; exposed so the pre-repair Hamming distance is testable.
LabelSet remove_random_labels(const LabelSet& labels, int q, Rng& rng);

// Random q-label deletion followed by greedy repair over the full universe.
Solution shake(const Instance& instance, const Solution& current, int q, Rng& rng);

// First-improvement descent over single-label drops and swaps, iterated to a
// local optimum under the (components, label count) order.
Solution local_descent(const Instance& instance, const Solution& start);

SearchTrace basic_vns(const Instance& instance, const Solution& init, const SearchParams& params,
                      Rng& rng, Deadline deadline);

SearchTrace co_vns(const Instance& instance, const SearchParams& params, Rng& rng);

// Runs the variant selected in params, seeding its own rng.
SearchTrace solve(const Instance& instance, const SearchParams& params);

}  // namespace klsf

#endif
