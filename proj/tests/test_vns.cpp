#include <doctest.h>

#include "helpers.hpp"
#include "klsf/generator.hpp"
#include "klsf/oracle.hpp"
#include "klsf/vns.hpp"

using namespace klsf;
using namespace klsf::testing;

TEST_CASE("remove_random_labels drops exactly min(q, |L|) labels") {
  std::mt19937_64 seeds(8);
  Rng rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    int ell = std::uniform_int_distribution<int>(1, 40)(seeds);
    LabelSet labels = random_label_set(ell, seeds);
    int q = std::uniform_int_distribution<int>(1, ell + 2)(seeds);
    LabelSet reduced = remove_random_labels(labels, q, rng);
    CHECK(reduced.is_subset_of(labels));
    CHECK(hamming_distance(reduced, labels) == std::min(q, labels.count()));
  }
}

TEST_CASE("shake saturates to a fresh greedy build") {
  Instance inst = two_group_path_instance();
  Rng rng(3);
  LabelSet one(4);
  one.set(1);
  Solution current = make_solution(inst, one);
  Solution shaken = shake(inst, current, 10, rng);
  CHECK(shaken.labels.count() <= inst.k_bar);
  CHECK(shaken.components == count_components(inst.graph, shaken.labels));
  CHECK_THROWS_AS(shake(inst, current, 0, rng), std::invalid_argument);
}

TEST_CASE("local_descent reaches a swap-local optimum") {
  Instance inst = deceptive_instance();
  // {1, 3} covers little; descent should at least not get worse.
  LabelSet bd(4);
  bd.set(1);
  bd.set(3);
  Solution start = make_solution(inst, bd);
  Solution out = local_descent(inst, start);
  CHECK_FALSE(lex_less(start, out));
  CHECK(out.components == count_components(inst.graph, out.labels));
  // Swapping label 1 for 2 yields the optimum {2, 3}; descent must find it.
  CHECK(out.components == 1);
}

TEST_CASE("basic_vns terminates immediately at the floor") {
  Instance edgeless = make_instance(6, 2, 1, {});
  SearchParams params;
  params.variant = Variant::BasicVNS;
  Rng rng(1);
  Solution init = make_solution(edgeless, LabelSet(2));
  SearchTrace trace = basic_vns(edgeless, init, params, rng, std::nullopt);
  CHECK(trace.iterations == 0);
  CHECK(trace.best.components == 6);
  CHECK(trace.best.labels == init.labels);
}

TEST_CASE("basic_vns finds a single spanning label") {
  Instance star = make_instance(5, 3, 1, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {0, 4, 0}, {1, 2, 1}});
  SearchParams params;
  params.variant = Variant::BasicVNS;
  Rng rng(1);
  LabelSet bad(3);
  bad.set(1);
  SearchTrace trace = basic_vns(star, make_solution(star, bad), params, rng, std::nullopt);
  CHECK(trace.best.components == 1);
}

TEST_CASE("basic_vns never loses to greedy and usually matches the oracle") {
  std::mt19937_64 seeds(1717);
  int optimal = 0;
  const int trials = 30;
  for (int trial = 0; trial < trials; ++trial) {
    GeneratorSpec spec;
    spec.n = std::uniform_int_distribution<int>(4, 15)(seeds);
    spec.ell = std::uniform_int_distribution<int>(2, 10)(seeds);
    spec.k_bar = std::uniform_int_distribution<int>(1, std::min(4, spec.ell))(seeds);
    spec.density = std::uniform_real_distribution<double>(0.2, 0.8)(seeds);
    spec.seed = seeds();
    Instance inst = generate(spec);

    SearchParams params;
    params.seed = trial;
    params.variant = Variant::GreedyOnly;
    int greedy = solve(inst, params).best.components;
    params.variant = Variant::BasicVNS;
    int vns = solve(inst, params).best.components;
    int opt = exact_optimum(inst).optimum_components;

    CHECK(vns <= greedy);
    CHECK(vns >= opt);
    if (vns == opt) ++optimal;
  }
  CHECK(optimal >= (trials * 9) / 10);
}

TEST_CASE("co_vns escapes the deceptive greedy basin") {
  Instance inst = deceptive_instance();
  CHECK(exact_optimum(inst).optimum_components == 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SearchParams params;
    params.seed = seed;
    params.variant = Variant::GreedyOnly;
    CHECK(solve(inst, params).best.components == 2);  // trapped
    params.variant = Variant::CoVNS;
    CHECK(solve(inst, params).best.components == 1);
  }
}

TEST_CASE("co_vns on an edgeless graph returns the empty greedy solution") {
  Instance edgeless = make_instance(4, 3, 2, {});
  SearchParams params;
  params.variant = Variant::CoVNS;
  Rng rng(0);
  SearchTrace trace = co_vns(edgeless, params, rng);
  CHECK(trace.best.components == 4);
  CHECK(trace.best.labels.none());
  CHECK(trace.points.size() == 1);  // floor met at once, no outer iteration
}

TEST_CASE("traces are deterministic and monotone for every variant") {
  GeneratorSpec spec{12, 0.35, 8, 3, LabelModel::ClusteredLabels, 4242};
  Instance inst = generate(spec);
  for (Variant v :
       {Variant::GreedyOnly, Variant::BasicVNS, Variant::CoVNS, Variant::IntVNS}) {
    SearchParams params;
    params.variant = v;
    params.seed = 31;
    SearchTrace a = solve(inst, params);
    SearchTrace b = solve(inst, params);
    CHECK(a.best.labels == b.best.labels);
    CHECK(a.best.components == b.best.components);
    CHECK(a.iterations == b.iterations);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i)
      CHECK(a.points[i].best_components == b.points[i].best_components);

    for (std::size_t i = 1; i < a.points.size(); ++i)
      CHECK(a.points[i].best_components <= a.points[i - 1].best_components);
    CHECK(a.best.labels.count() <= inst.k_bar);
    CHECK(a.best.components == count_components(inst.graph, a.best.labels));
  }
}

TEST_CASE("variant names round-trip") {
  for (Variant v :
       {Variant::GreedyOnly, Variant::BasicVNS, Variant::CoVNS, Variant::IntVNS})
    CHECK(parse_variant(variant_name(v)) == v);
  CHECK_FALSE(parse_variant("nope").has_value());
}

TEST_CASE("time budget stops a run") {
  GeneratorSpec spec{20, 0.15, 10, 4, LabelModel::ClusteredLabels, 9};
  Instance inst = generate(spec);
  SearchParams params;
  params.variant = Variant::IntVNS;
  params.seed = 1;
  params.time_budget_ms = 1;
  params.max_no_improve = 1'000'000;
  auto t0 = Clock::now();
  solve(inst, params);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  CHECK(ms < 5000);
}
