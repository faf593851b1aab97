#ifndef KLSF_ORACLE_HPP
#define KLSF_ORACLE_HPP

#include <cstdint>

#include "klsf/instance.hpp"

namespace klsf {

struct OracleResult {
  int optimum_components = 0;
  LabelSet witness;
  std::uint64_t subsets_examined = 0;
};

class OracleCapExceeded : public std::runtime_error {
 public:
  explicit OracleCapExceeded(std::uint64_t needed)
      : std::runtime_error("instance too large for oracle: " + std::to_string(needed) +
                           " subsets exceed the cap") {}
};

inline constexpr std::uint64_t kDefaultOracleCap = 2'000'000;

enum class EnumOrder { Forward, Reverse };

// Exact minimum over all label subsets of size min(k_bar, ell); smaller
// subsets are dominated by monotonicity. Witness is the first optimum in
// lexicographic subset order.
OracleResult exact_optimum(const Instance& instance, std::uint64_t safety_cap = kDefaultOracleCap,
                           EnumOrder order = EnumOrder::Forward);

}  // namespace klsf

#endif
