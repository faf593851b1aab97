#ifndef KLSF_CONSTRUCTION_HPP
#define KLSF_CONSTRUCTION_HPP

#include <random>

#include "klsf/instance.hpp"

namespace klsf {

using Rng = std::mt19937_64;

// Pool of labels a constructor may draw from.
struct CandidateRestriction {
  LabelSet allowed;
};

// MVCA-style greedy completion. Starting from `start`, repeatedly adds the
// allowed label giving the largest drop in component count (ties broken
// uniformly at random) until the budget is reached, the floor is hit, or no
// label strictly improves.
Solution greedy_complete(const Instance& instance, const LabelSet& start,
                         const CandidateRestriction& allowed, Rng& rng);

// Builds a solution from the labels absent from the incumbent. Falls back to
// the full universe when that pool is empty or admits no edge at all.
Solution co_space_construct(const Instance& instance, const Solution& incumbent, Rng& rng);

}  // namespace klsf

#endif
