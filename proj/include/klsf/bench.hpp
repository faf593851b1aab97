#ifndef KLSF_BENCH_HPP
#define KLSF_BENCH_HPP

#include <optional>
#include <string>

#include "klsf/oracle.hpp"
#include "klsf/vns.hpp"

namespace klsf {

struct BenchInstance {
  std::string id;
  Instance instance;
};

struct RunRecord {
  std::string instance_id;
  Variant variant = Variant::GreedyOnly;
  std::uint64_t seed = 0;
  int components = 0;
  int labels = 0;
  double elapsed_ms = 0.0;
  int iterations = 0;
  std::optional<int> optimum;  // empty when the oracle cap was exceeded
};

struct BenchOptions {
  std::uint64_t oracle_cap = kDefaultOracleCap;
  int jobs = 1;
};

inline constexpr const char* kCsvHeader =
    "instance,variant,seed,components,labels,elapsed_ms,iterations,optimum";

// One record per (instance, variant, seed) cell, in that deterministic order
// regardless of how many worker threads ran them.
std::vector<RunRecord> run_matrix_records(const std::vector<BenchInstance>& instances,
                                          const std::vector<Variant>& variants,
                                          const std::vector<std::uint64_t>& seeds,
                                          const SearchParams& params,
                                          const BenchOptions& options = {});

// Data rows plus a per-variant summary block (mean components, mean gap to
// oracle, optimum-hit rate, mean elapsed ms).
std::string render_csv(const std::vector<RunRecord>& records, const std::vector<Variant>& variants);

std::string run_matrix(const std::vector<BenchInstance>& instances,
                       const std::vector<Variant>& variants,
                       const std::vector<std::uint64_t>& seeds, const SearchParams& params,
                       const BenchOptions& options = {});

}  // namespace klsf

#endif
