#include "klsf/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace klsf {

namespace {

// C(n, r), saturating at cap + 1 to avoid overflow.
std::uint64_t binomial_capped(int n, int r, std::uint64_t cap) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    if (result > cap) return cap + 1;
    result = result * (n - r + i) / i;
  }
  return std::min(result, cap + 1);
}

LabelSet to_label_set(const std::vector<int>& combo, int ell) {
  LabelSet s(ell);
  for (int label : combo) s.set(label);
  return s;
}

// Advances `combo` to the next r-combination of {0..n-1} in lexicographic
// order; false when exhausted.
bool next_combination(std::vector<int>& combo, int n) {
  int r = static_cast<int>(combo.size());
  for (int i = r - 1; i >= 0; --i) {
    if (combo[i] < n - r + i) {
      ++combo[i];
      for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool prev_combination(std::vector<int>& combo, int n) {
  int r = static_cast<int>(combo.size());
  for (int i = r - 1; i >= 0; --i) {
    int lower = (i == 0) ? 0 : combo[i - 1] + 1;
    if (combo[i] > lower) {
      --combo[i];
      for (int j = i + 1; j < r; ++j) combo[j] = n - r + j;
      return true;
    }
  }
  return false;
}

}  // namespace

OracleResult exact_optimum(const Instance& instance, std::uint64_t safety_cap, EnumOrder order) {
  const auto& g = instance.graph;
  const int r = std::min(instance.k_bar, g.ell);
  const std::uint64_t total = binomial_capped(g.ell, r, safety_cap);
  if (total > safety_cap) throw OracleCapExceeded(total);

  std::vector<int> combo(r);
  if (order == EnumOrder::Forward) {
    std::iota(combo.begin(), combo.end(), 0);
  } else {
    for (int i = 0; i < r; ++i) combo[i] = g.ell - r + i;  // last combination
  }

  OracleResult result;
  result.optimum_components = g.n + 1;
  bool more = true;
  while (more) {
    LabelSet labels = to_label_set(combo, g.ell);
    int c = count_components(g, labels);
    ++result.subsets_examined;
    // Reverse order keeps the lexicographically smallest among equal optima.
    bool better = (order == EnumOrder::Forward) ? c < result.optimum_components
                                                : c <= result.optimum_components;
    if (better) {
      result.optimum_components = c;
      result.witness = labels;
    }
    more = (order == EnumOrder::Forward) ? next_combination(combo, g.ell)
                                         : prev_combination(combo, g.ell);
  }
  return result;
}

}  // namespace klsf
