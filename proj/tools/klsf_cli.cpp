#include <filesystem>
#include <fnmatch.h>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "klsf/bench.hpp"
#include "klsf/generator.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<std::string> expand_glob(const std::string& pattern) {
  std::vector<std::string> matches;
  if (pattern.find_first_of("*?[") == std::string::npos) {
    matches.push_back(pattern);
    return matches;
  }
  fs::path p(pattern);
  fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
  std::string name_pattern = p.filename().string();
  if (!fs::is_directory(dir)) return matches;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    if (fnmatch(name_pattern.c_str(), name.c_str(), 0) == 0)
      matches.push_back(entry.path().string());
  }
  std::sort(matches.begin(), matches.end());
  return matches;
}

// Accepts "a..b", "a-b", a comma list, or a single value.
std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  auto dots = text.find("..");
  auto dash = text.find('-', 1);
  if (dots != std::string::npos || dash != std::string::npos) {
    std::size_t sep = dots != std::string::npos ? dots : dash;
    std::size_t sep_len = dots != std::string::npos ? 2 : 1;
    std::uint64_t lo = std::stoull(text.substr(0, sep));
    std::uint64_t hi = std::stoull(text.substr(sep + sep_len));
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) seeds.push_back(std::stoull(item));
  return seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-labelled spanning forest solver and benchmark harness"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  klsf::GeneratorSpec spec;
  std::string model = "uniform";
  std::string out_path;
  gen->add_option("--n", spec.n, "vertex count")->required();
  gen->add_option("--density", spec.density, "edge probability per vertex pair")->required();
  gen->add_option("--ell", spec.ell, "label count")->required();
  gen->add_option("--kbar", spec.k_bar, "label budget")->required();
  gen->add_option("--model", model, "label model: uniform|clustered")
      ->check(CLI::IsMember({"uniform", "clustered"}));
  gen->add_option("--seed", spec.seed, "rng seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "run one solver variant on an instance");
  std::string in_path, variant_name = "intvns";
  klsf::SearchParams params;
  solve_cmd->add_option("--in", in_path, "instance file")->required();
  solve_cmd->add_option("--variant", variant_name, "greedy|vns|covns|intvns")
      ->check(CLI::IsMember({"greedy", "vns", "covns", "intvns"}));
  solve_cmd->add_option("--seed", params.seed, "rng seed");
  solve_cmd->add_option("--qmax", params.q_max, "largest neighbourhood index (0 = auto)");
  solve_cmd->add_option("--no-improve", params.max_no_improve,
                        "non-improving iterations before stop");
  solve_cmd->add_option("--time-ms", params.time_budget_ms, "wall-clock budget (0 = none)");
  solve_cmd->add_option("--move-budget", params.move_budget,
                        "probabilistic search moves per call (0 = auto)");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "exact brute-force optimum");
  std::string oracle_in;
  std::uint64_t cap = klsf::kDefaultOracleCap;
  oracle_cmd->add_option("--in", oracle_in, "instance file")->required();
  oracle_cmd->add_option("--cap", cap, "max label subsets to enumerate");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run the (instance, variant, seed) matrix");
  std::string instances_glob, variants_list = "greedy,vns,covns,intvns", seeds_range = "0..9";
  std::string csv_path;
  int jobs = 1;
  std::uint64_t bench_cap = klsf::kDefaultOracleCap;
  bench_cmd->add_option("--instances", instances_glob, "instance file glob")->required();
  bench_cmd->add_option("--variants", variants_list, "comma-separated variant list");
  bench_cmd->add_option("--seeds", seeds_range, "seed range, e.g. 0..9 or 0,3,7");
  bench_cmd->add_option("--csv", csv_path, "output CSV file (default stdout)");
  bench_cmd->add_option("--jobs", jobs, "concurrent runs");
  bench_cmd->add_option("--cap", bench_cap, "oracle subset cap (optimum column)");
  bench_cmd->add_option("--qmax", params.q_max, "largest neighbourhood index (0 = auto)");
  bench_cmd->add_option("--no-improve", params.max_no_improve,
                        "non-improving iterations before stop");
  bench_cmd->add_option("--time-ms", params.time_budget_ms, "wall-clock budget per run");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      spec.label_model = model == "clustered" ? klsf::LabelModel::ClusteredLabels
                                              : klsf::LabelModel::UniformPerEdge;
      std::string text = klsf::write_instance(klsf::generate(spec));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
      }
      return 0;
    }

    if (*solve_cmd) {
      klsf::Instance instance = klsf::load_instance(in_path);
      params.variant = *klsf::parse_variant(variant_name);
      auto t0 = klsf::Clock::now();
      klsf::SearchTrace trace = klsf::solve(instance, params);
      auto t1 = klsf::Clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      std::cout << trace.best.components << ' ' << trace.best.labels.count() << ' ' << ms << '\n';
      return 0;
    }

    if (*oracle_cmd) {
      klsf::Instance instance = klsf::load_instance(oracle_in);
      klsf::OracleResult result;
      try {
        result = klsf::exact_optimum(instance, cap);
      } catch (const klsf::OracleCapExceeded& e) {
        std::cerr << e.what() << '\n';
        return 2;
      }
      std::cout << result.optimum_components << ' ';
      auto labels = result.witness.to_vector();
      for (std::size_t i = 0; i < labels.size(); ++i)
        std::cout << (i ? "," : "") << labels[i];
      if (labels.empty()) std::cout << '-';
      std::cout << '\n';
      return 0;
    }

    if (*bench_cmd) {
      std::vector<klsf::BenchInstance> instances;
      for (const auto& path : expand_glob(instances_glob)) {
        try {
          instances.push_back({fs::path(path).filename().string(), klsf::load_instance(path)});
        } catch (const std::exception& e) {
          std::cerr << path << ": " << e.what() << '\n';
          return 1;
        }
      }
      std::vector<klsf::Variant> variants;
      std::stringstream vs(variants_list);
      std::string item;
      while (std::getline(vs, item, ',')) {
        auto v = klsf::parse_variant(item);
        if (!v) throw std::runtime_error("unknown variant: " + item);
        variants.push_back(*v);
      }
      klsf::BenchOptions options{bench_cap, jobs};
      std::string csv =
          klsf::run_matrix(instances, variants, parse_seed_range(seeds_range), params, options);
      if (csv_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write " + csv_path);
        out << csv;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
