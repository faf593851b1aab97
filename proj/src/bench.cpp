#include "klsf/bench.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace klsf {

namespace {

struct Cell {
  std::size_t instance_idx;
  Variant variant;
  std::uint64_t seed;
};

std::string format_fixed(double value, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << value;
  return out.str();
}

}  // namespace

std::vector<RunRecord> run_matrix_records(const std::vector<BenchInstance>& instances,
                                          const std::vector<Variant>& variants,
                                          const std::vector<std::uint64_t>& seeds,
                                          const SearchParams& params,
                                          const BenchOptions& options) {
  if (instances.empty() || variants.empty() || seeds.empty())
    throw std::invalid_argument("run_matrix: instances, variants and seeds must be non-empty");

  std::vector<std::optional<int>> optima(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    try {
      optima[i] = exact_optimum(instances[i].instance, options.oracle_cap).optimum_components;
    } catch (const OracleCapExceeded&) {
      // optimum column stays empty
    }
  }

  std::vector<Cell> cells;
  cells.reserve(instances.size() * variants.size() * seeds.size());
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (Variant v : variants)
      for (std::uint64_t s : seeds) cells.push_back({i, v, s});

  std::vector<RunRecord> records(cells.size());
  auto run_cell = [&](std::size_t idx) {
    const Cell& cell = cells[idx];
    const BenchInstance& bi = instances[cell.instance_idx];
    SearchParams cell_params = params;
    cell_params.variant = cell.variant;
    cell_params.seed = cell.seed;
    auto t0 = Clock::now();
    SearchTrace trace = solve(bi.instance, cell_params);
    auto t1 = Clock::now();
    RunRecord& rec = records[idx];
    rec.instance_id = bi.id;
    rec.variant = cell.variant;
    rec.seed = cell.seed;
    rec.components = trace.best.components;
    rec.labels = trace.best.labels.count();
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.iterations = trace.iterations;
    rec.optimum = optima[cell.instance_idx];
  };

  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
          run_cell(i);
      });
    }
    for (auto& t : workers) t.join();
  }
  return records;
}

std::string render_csv(const std::vector<RunRecord>& records,
                       const std::vector<Variant>& variants) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& rec : records) {
    out << rec.instance_id << ',' << variant_name(rec.variant) << ',' << rec.seed << ','
        << rec.components << ',' << rec.labels << ',' << format_fixed(rec.elapsed_ms, 3) << ','
        << rec.iterations << ',';
    if (rec.optimum) out << *rec.optimum;
    out << '\n';
  }

  out << "# summary,variant,mean_components,mean_gap,opt_rate,mean_elapsed_ms\n";
  for (Variant v : variants) {
    long long n = 0, comp_sum = 0, gap_sum = 0, with_opt = 0, hits = 0;
    double elapsed_sum = 0.0;
    for (const auto& rec : records) {
      if (rec.variant != v) continue;
      ++n;
      comp_sum += rec.components;
      elapsed_sum += rec.elapsed_ms;
      if (rec.optimum) {
        ++with_opt;
        gap_sum += rec.components - *rec.optimum;
        if (rec.components == *rec.optimum) ++hits;
      }
    }
    if (n == 0) continue;
    out << "# summary," << variant_name(v) << ',' << format_fixed(double(comp_sum) / n, 4) << ',';
    if (with_opt > 0)
      out << format_fixed(double(gap_sum) / with_opt, 4) << ','
          << format_fixed(double(hits) / with_opt, 4);
    else
      out << ',';
    out << ',' << format_fixed(elapsed_sum / n, 3) << '\n';
  }
  return out.str();
}

std::string run_matrix(const std::vector<BenchInstance>& instances,
                       const std::vector<Variant>& variants,
                       const std::vector<std::uint64_t>& seeds, const SearchParams& params,
                       const BenchOptions& options) {
  return render_csv(run_matrix_records(instances, variants, seeds, params, options), variants);
}

}  // namespace klsf
