// Hot-path benchmarks: per-decision costs (hashing, ability updates, forest
// prediction) and batch costs (session simulation, table builds, forest fits,
// cross-validated evaluation).

#include <benchmark/benchmark.h>

#include <vector>

#include "tutorkit/causal.hpp"
#include "tutorkit/forest.hpp"
#include "tutorkit/hash.hpp"
#include "tutorkit/irt.hpp"
#include "tutorkit/mab.hpp"
#include "tutorkit/rng.hpp"
#include "tutorkit/service.hpp"
#include "tutorkit/sim.hpp"
#include "tutorkit/stats.hpp"

using namespace tutorkit;

namespace {

const sim::World& bench_world() {
  static sim::World world = [] {
    sim::SimConfig cfg;
    cfg.n_students = 200;
    cfg.n_concepts = 8;
    cfg.n_questions_per_concept = 10;
    cfg.n_actions_per_question = 3;
    cfg.scenario = sim::Scenario::homogeneous;
    return sim::generate_world(cfg, 17);
  }();
  return world;
}

const sim::ExperimentResult& bench_experiment() {
  static sim::ExperimentResult result = [] {
    std::vector<sim::PolicyMixEntry> mix;
    mix.push_back({"random", 1.0, sim::uniform_random_policy()});
    return sim::run_experiment(bench_world(), mix, 1500, 17);
  }();
  return result;
}

const FilteredDataset& bench_dataset() {
  static FilteredDataset ds = [] {
    Catalog cat = bench_world().catalog();
    return preprocess(bench_experiment().sessions, PreprocessConfig{5, 30, true}, &cat);
  }();
  return ds;
}

const mab::OutcomeTable& bench_table() {
  static mab::OutcomeTable table = [] {
    Catalog cat = bench_world().catalog();
    return mab::build_outcome_table(bench_dataset(), outcomes::item_map(cat), {});
  }();
  return table;
}

causal::TreatmentDataset synthetic_td(int n, std::uint64_t seed) {
  causal::TreatmentDataset td;
  td.question_id = "q";
  td.treat_action = "t";
  td.control_action = "c";
  td.outcome_name = "y";
  Rng rng(seed);
  td.samples.resize(n);
  for (auto& s : td.samples) {
    double x = rng.next_gaussian();
    s.x.set(context::Feature::stud_ability, x);
    s.x.set(context::Feature::quest_num, 1 + rng.next_below(10));
    s.w = rng.next_bernoulli(0.5) ? 1 : 0;
    s.y = 0.1 + 0.2 * s.w + 0.3 * x + 0.5 * s.w * x + rng.next_gaussian();
  }
  return td;
}

void BM_Fnv1a64(benchmark::State& state) {
  std::string id = "s01234567_practice_session";
  for (auto _ : state) benchmark::DoNotOptimize(fnv1a64(id));
}
BENCHMARK(BM_Fnv1a64);

void BM_AssignPolicy(benchmark::State& state) {
  service::AssignmentConfig cfg;
  cfg.entries = {{"a", 0.5}, {"b", 0.5}};
  std::string id = "s0712345";
  for (auto _ : state) benchmark::DoNotOptimize(service::assign_policy(id, cfg));
}
BENCHMARK(BM_AssignPolicy);

void BM_AbilityEstimate(benchmark::State& state) {
  Rng rng(5);
  std::vector<irt::Response> responses;
  for (int i = 0; i < 20; ++i)
    responses.push_back({IrtItem{1.0 + 0.2 * (i % 3), rng.next_gaussian(), 0.2},
                         rng.next_bernoulli(0.6)});
  for (auto _ : state) benchmark::DoNotOptimize(irt::estimate_ability(responses));
}
BENCHMARK(BM_AbilityEstimate);

void BM_WelchT(benchmark::State& state) {
  Rng rng(7);
  std::vector<double> a(200), b(200);
  for (auto& v : a) v = rng.next_gaussian();
  for (auto& v : b) v = 0.2 + rng.next_gaussian();
  for (auto _ : state)
    benchmark::DoNotOptimize(stats::welch_t_test(a, b, stats::Tail::two_sided));
}
BENCHMARK(BM_WelchT);

void BM_SimulateSession(benchmark::State& state) {
  const sim::World& world = bench_world();
  sim::PolicyFn policy = sim::uniform_random_policy();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto s = sim::simulate_session(world, world.students[0], world.concepts[0],
                                   policy, ++seed);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SimulateSession);

void BM_BuildOutcomeTable(benchmark::State& state) {
  Catalog cat = bench_world().catalog();
  outcomes::ItemMap items = outcomes::item_map(cat);
  for (auto _ : state) {
    auto table = mab::build_outcome_table(bench_dataset(), items, {});
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_BuildOutcomeTable);

void BM_TrainMabPolicy(benchmark::State& state) {
  const auto& table = bench_table();
  const auto& eligible = bench_dataset().eligible_questions;
  for (auto _ : state) {
    auto policy = mab::train_mab_policy(table, eligible, {}, 0.05);
    benchmark::DoNotOptimize(policy);
  }
}
BENCHMARK(BM_TrainMabPolicy);

void BM_OfflineEvaluate(benchmark::State& state) {
  const auto& table = bench_table();
  Catalog cat = bench_world().catalog();
  std::vector<mab::PolicyPlan> plans(1);
  plans[0].name = "mab";
  plans[0].use_welch_gate = true;
  for (auto _ : state) {
    auto report = mab::offline_evaluate(table, plans, {}, 2, 5, 3, &cat);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_OfflineEvaluate);

void BM_ForestFit(benchmark::State& state) {
  auto td = synthetic_td(static_cast<int>(state.range(0)), 11);
  causal::ForestConfig cfg;
  cfg.n_trees = 25;
  for (auto _ : state) {
    auto model = causal::fit_cate_forest(td, cfg, 13);
    benchmark::DoNotOptimize(model);
  }
}
BENCHMARK(BM_ForestFit)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_ForestPredict(benchmark::State& state) {
  auto td = synthetic_td(2000, 11);
  causal::ForestConfig cfg;
  cfg.n_trees = 50;
  auto model = causal::fit_cate_forest(td, cfg, 13);
  const auto& x = td.samples[0].x;
  for (auto _ : state) benchmark::DoNotOptimize(model.predict(x));
}
BENCHMARK(BM_ForestPredict);

void BM_GetAction(benchmark::State& state) {
  service::AssignmentConfig cfg;
  cfg.entries = {{"p", 1.0}};
  service::PolicyServer server(cfg);
  server.install_spec(service::spec_uniform_random(bench_world().catalog(), "p"));
  service::Query q;
  q.session_id = "s1234";
  q.concept_id = "c01";
  q.question_id = "q01_001";
  q.runtime_actions = {"q01_001_a0", "q01_001_a1", "q01_001_a2"};
  for (auto _ : state) benchmark::DoNotOptimize(server.get_action(q));
}
BENCHMARK(BM_GetAction);

}  // namespace

BENCHMARK_MAIN();
