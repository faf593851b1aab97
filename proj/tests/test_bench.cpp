#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "klsf/bench.hpp"
#include "klsf/generator.hpp"

using namespace klsf;
using namespace klsf::testing;

namespace {

std::vector<BenchInstance> tiny_bench_set() {
  std::vector<BenchInstance> out;
  int i = 0;
  for (int n : {8, 12}) {
    for (double density : {0.3, 0.7}) {
      GeneratorSpec spec;
      spec.n = n;
      spec.density = density;
      spec.ell = 6;
      spec.k_bar = 3;
      spec.label_model = LabelModel::ClusteredLabels;
      spec.seed = 100 + i;
      out.push_back({"g" + std::to_string(i), generate(spec)});
      ++i;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("single-cell matrix has one data row and a summary") {
  std::vector<BenchInstance> instances = {{"t", two_group_path_instance()}};
  std::string csv = run_matrix({instances}, {Variant::GreedyOnly}, {0}, SearchParams{});
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == kCsvHeader);
  int data_rows = 0, summary_rows = 0;
  while (std::getline(in, line)) {
    if (line.rfind("# summary", 0) == 0)
      ++summary_rows;
    else if (!line.empty())
      ++data_rows;
  }
  CHECK(data_rows == 1);
  CHECK(summary_rows == 2);  // column header + one variant
}

TEST_CASE("empty inputs are rejected") {
  CHECK_THROWS_AS(run_matrix({}, {Variant::GreedyOnly}, {0}, SearchParams{}),
                  std::invalid_argument);
}

TEST_CASE("rows are feasible and never beat the oracle") {
  auto instances = tiny_bench_set();
  auto records = run_matrix_records(instances, {Variant::GreedyOnly, Variant::BasicVNS},
                                    {0, 1, 2}, SearchParams{});
  CHECK(records.size() == instances.size() * 2 * 3);
  for (const auto& rec : records) {
    CHECK(rec.labels <= 3);
    REQUIRE(rec.optimum.has_value());
    CHECK(rec.components >= *rec.optimum);
  }
}

TEST_CASE("csv is byte-stable modulo elapsed time, also under parallel jobs") {
  auto instances = tiny_bench_set();
  std::vector<Variant> variants = {Variant::GreedyOnly, Variant::CoVNS};
  std::vector<std::uint64_t> seeds = {0, 1};
  SearchParams params;
  std::string a = run_matrix(instances, variants, seeds, params);
  std::string b = run_matrix(instances, variants, seeds, params);
  CHECK(strip_elapsed(a) == strip_elapsed(b));

  BenchOptions parallel;
  parallel.jobs = 4;
  std::string c = run_matrix(instances, variants, seeds, params, parallel);
  CHECK(strip_elapsed(a) == strip_elapsed(c));
}

TEST_CASE("summary means match a recomputation from the rows") {
  auto instances = tiny_bench_set();
  std::vector<Variant> variants = {Variant::GreedyOnly, Variant::BasicVNS};
  std::vector<std::uint64_t> seeds = {0, 1, 2};
  auto records = run_matrix_records(instances, variants, seeds, SearchParams{});
  std::string csv = render_csv(records, variants);

  for (Variant v : variants) {
    double comp_sum = 0, gap_sum = 0;
    int n = 0, hits = 0;
    for (const auto& rec : records) {
      if (rec.variant != v) continue;
      ++n;
      comp_sum += rec.components;
      gap_sum += rec.components - *rec.optimum;
      if (rec.components == *rec.optimum) ++hits;
    }
    std::ostringstream expect;
    expect.setf(std::ios::fixed);
    expect.precision(4);
    expect << "# summary," << variant_name(v) << ',' << comp_sum / n << ',' << gap_sum / n << ','
           << double(hits) / n;
    CHECK(csv.find(expect.str()) != std::string::npos);
  }
}

TEST_CASE("oracle cap overflow leaves the optimum column empty") {
  GeneratorSpec spec{6, 0.5, 12, 6, LabelModel::UniformPerEdge, 1};
  std::vector<BenchInstance> instances = {{"big", generate(spec)}};
  BenchOptions options;
  options.oracle_cap = 10;  // C(12,6) = 924 > 10
  auto records = run_matrix_records(instances, {Variant::GreedyOnly}, {0}, SearchParams{}, options);
  REQUIRE(records.size() == 1);
  CHECK_FALSE(records[0].optimum.has_value());
  std::string csv = render_csv(records, {Variant::GreedyOnly});
  CHECK(csv.find("# summary,greedy,") != std::string::npos);
}
