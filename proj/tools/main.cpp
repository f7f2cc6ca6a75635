// tutorkit: operator CLI for the feedback-policy pipeline.
//
// Subcommands cover the full loop: simulate worlds into interaction logs,
// ingest and filter them, estimate per-question action effects, train and
// evaluate bandit policies, sweep the reward weight, scan for heterogeneous
// effects, compare contextual policies against single-arm baselines, and
// serve trained policy specs over a local socket.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <algorithm>
#include <array>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tutorkit/causal.hpp"
#include "tutorkit/context.hpp"
#include "tutorkit/forest.hpp"
#include "tutorkit/hash.hpp"
#include "tutorkit/ingest.hpp"
#include "tutorkit/mab.hpp"
#include "tutorkit/outcomes.hpp"
#include "tutorkit/rng.hpp"
#include "tutorkit/service.hpp"
#include "tutorkit/sim.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tutorkit;

namespace {

// Bad argument shapes exit 1; anything wrong with the data itself exits 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string config;
  std::string out = ".";
  int min_samples = 100;
  double w1 = 0.4;
};

struct DataOpts {
  std::string logs;
  std::string items;
  std::string actions;
  int min_questions = 5;
};

void add_data_opts(CLI::App* cmd, DataOpts& d, bool catalog_required) {
  cmd->add_option("--logs", d.logs, "interaction log, newline-delimited JSON")
      ->required();
  auto* items = cmd->add_option("--items", d.items, "question catalog file");
  auto* actions = cmd->add_option("--actions", d.actions, "action catalog file");
  if (catalog_required) {
    items->required();
    actions->required();
  }
  cmd->add_option("--min-questions", d.min_questions,
                  "distinct answered questions a session must reach");
}

struct LoadedData {
  Catalog catalog;
  bool has_catalog = false;
  FilteredDataset dataset;
  outcomes::ItemMap items;
};

LoadedData load_data(const DataOpts& d, const GlobalOpts& g) {
  if (d.items.empty() != d.actions.empty())
    throw UsageError("--items and --actions must be given together");
  LoadedData out;
  if (!d.items.empty()) {
    out.catalog = load_catalog(d.items, d.actions);
    out.has_catalog = true;
    out.items = outcomes::item_map(out.catalog);
  }
  PreprocessConfig cfg;
  cfg.min_questions_per_session = d.min_questions;
  cfg.min_samples_per_action = g.min_samples;
  out.dataset = preprocess(load_log_file(d.logs), cfg,
                           out.has_catalog ? &out.catalog : nullptr);
  return out;
}

mab::OutcomeTable make_table(const LoadedData& data, double w1) {
  outcomes::OutcomeConfig cfg;
  cfg.weights.w1 = w1;
  return mab::build_outcome_table(data.dataset, data.items, cfg);
}

fs::path ensure_out_dir(const GlobalOpts& g) {
  fs::path dir(g.out);
  fs::create_directories(dir);
  return dir;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    try {
      size_t used = 0;
      double v = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      grid.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad grid value '" + token + "'");
    }
  }
  if (grid.empty()) throw UsageError("empty grid");
  return grid;
}

sim::SimConfig parse_sim_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  json obj;
  try {
    obj = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("config '" + path + "': " + e.what());
  }
  sim::SimConfig cfg;
  static const std::set<std::string> known = {
      "n_students", "n_concepts", "n_questions_per_concept",
      "n_actions_per_question", "scenario", "base_second_attempt", "uplift_max",
      "uplift_step", "hte_base", "hte_slope", "hte_fraction", "sign_slope",
      "transfer_uplift", "tradeoff_fraction", "hint_propensity", "dropout_rate",
      "repeat_rate", "difficulty_shift", "confidence_report_rate",
      "teacher_assigned_rate", "weekend_rate", "success_threshold",
      "rt_median_s", "rt_shape", "assist_view_median_s", "assist_view_shape"};
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!known.count(key))
      throw std::runtime_error("config '" + path + "': unknown key '" + key + "'");
  }
  cfg.n_students = obj.value("n_students", cfg.n_students);
  cfg.n_concepts = obj.value("n_concepts", cfg.n_concepts);
  cfg.n_questions_per_concept =
      obj.value("n_questions_per_concept", cfg.n_questions_per_concept);
  cfg.n_actions_per_question =
      obj.value("n_actions_per_question", cfg.n_actions_per_question);
  if (obj.contains("scenario"))
    cfg.scenario = sim::scenario_from_string(obj["scenario"].get<std::string>());
  cfg.base_second_attempt = obj.value("base_second_attempt", cfg.base_second_attempt);
  cfg.uplift_max = obj.value("uplift_max", cfg.uplift_max);
  cfg.uplift_step = obj.value("uplift_step", cfg.uplift_step);
  cfg.hte_base = obj.value("hte_base", cfg.hte_base);
  cfg.hte_slope = obj.value("hte_slope", cfg.hte_slope);
  cfg.hte_fraction = obj.value("hte_fraction", cfg.hte_fraction);
  cfg.sign_slope = obj.value("sign_slope", cfg.sign_slope);
  cfg.transfer_uplift = obj.value("transfer_uplift", cfg.transfer_uplift);
  cfg.tradeoff_fraction = obj.value("tradeoff_fraction", cfg.tradeoff_fraction);
  cfg.hint_propensity = obj.value("hint_propensity", cfg.hint_propensity);
  cfg.dropout_rate = obj.value("dropout_rate", cfg.dropout_rate);
  cfg.repeat_rate = obj.value("repeat_rate", cfg.repeat_rate);
  cfg.difficulty_shift = obj.value("difficulty_shift", cfg.difficulty_shift);
  cfg.confidence_report_rate =
      obj.value("confidence_report_rate", cfg.confidence_report_rate);
  cfg.teacher_assigned_rate =
      obj.value("teacher_assigned_rate", cfg.teacher_assigned_rate);
  cfg.weekend_rate = obj.value("weekend_rate", cfg.weekend_rate);
  cfg.success_threshold = obj.value("success_threshold", cfg.success_threshold);
  cfg.rt_median_s = obj.value("rt_median_s", cfg.rt_median_s);
  cfg.rt_shape = obj.value("rt_shape", cfg.rt_shape);
  cfg.assist_view_median_s =
      obj.value("assist_view_median_s", cfg.assist_view_median_s);
  cfg.assist_view_shape = obj.value("assist_view_shape", cfg.assist_view_shape);
  return cfg;
}

// Mix entries name the policy id; a trailing @file loads a policy spec whose
// decisions drive that slice of traffic.
struct MixSpec {
  std::string name;
  double weight = 0.0;
  std::string file;
};

MixSpec parse_mix_entry(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw UsageError("mix entry '" + text + "' must be name=weight[@spec.json]");
  MixSpec m;
  m.name = text.substr(0, eq);
  std::string rest = text.substr(eq + 1);
  if (auto at = rest.find('@'); at != std::string::npos) {
    m.file = rest.substr(at + 1);
    rest = rest.substr(0, at);
  }
  try {
    size_t used = 0;
    m.weight = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(rest);
  } catch (const std::exception&) {
    throw UsageError("bad mix weight in '" + text + "'");
  }
  if (m.weight <= 0.0) throw UsageError("mix weight must be positive in '" + text + "'");
  return m;
}

// Replays a policy spec inside the simulator: fixed entries return their
// action, contextual entries threshold the model, everything else falls back
// to the decision-seeded uniform draw the service would also make.
sim::PolicyFn spec_policy_fn(service::PolicySpecFile spec) {
  auto shared = std::make_shared<const service::PolicySpecFile>(std::move(spec));
  sim::PolicyFn uniform = sim::uniform_random_policy();
  return [shared, uniform](const sim::DecisionQuery& q) -> ActionId {
    const service::PolicyEntry* entry = nullptr;
    if (auto ci = shared->concepts.find(q.question.concept_id);
        ci != shared->concepts.end())
      if (auto qi = ci->second.find(q.question.id); qi != ci->second.end())
        entry = &qi->second;
    if (!entry) return uniform(q);
    auto offered = [&](const ActionId& a) {
      return std::binary_search(q.actions.begin(), q.actions.end(), a);
    };
    switch (entry->kind) {
      case service::PolicyEntry::Kind::fixed:
        if (offered(entry->action_id)) return entry->action_id;
        return uniform(q);
      case service::PolicyEntry::Kind::contextual: {
        const ActionId& chosen = entry->model && entry->model->predict(q.x) > 0.0
                                     ? entry->treat_action
                                     : entry->control_action;
        if (offered(chosen)) return chosen;
        return uniform(q);
      }
      case service::PolicyEntry::Kind::random:
      default:
        return uniform(q);
    }
  };
}

sim::PolicyFn builtin_policy_fn(const std::string& name, const sim::World& world) {
  if (name == "random") return sim::uniform_random_policy();
  if (name == "no_assist")
    return sim::fixed_kind_policy(world, AssistKind::no_assistance);
  if (name == "hint") return sim::fixed_kind_policy(world, AssistKind::hint);
  if (name == "paragraph")
    return sim::fixed_kind_policy(world, AssistKind::paragraph);
  if (name == "vocabulary")
    return sim::fixed_kind_policy(world, AssistKind::vocabulary);
  throw UsageError("unknown builtin policy '" + name +
                   "' (use random, no_assist, hint, paragraph, vocabulary, or name=w@spec.json)");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

causal::TreatmentDataset subset_dataset(const causal::TreatmentDataset& td,
                                        const std::vector<int>& ids) {
  causal::TreatmentDataset out;
  out.question_id = td.question_id;
  out.treat_action = td.treat_action;
  out.control_action = td.control_action;
  out.outcome_name = td.outcome_name;
  out.samples.reserve(ids.size());
  for (int i : ids) out.samples.push_back(td.samples[i]);
  return out;
}

// Contrasts for scanning: each assisting arm of an eligible question against
// that question's no-assistance arm. Questions without one are skipped.
std::vector<causal::Contrast> control_contrasts(const FilteredDataset& dataset,
                                                const Catalog& catalog) {
  std::vector<causal::Contrast> contrasts;
  for (const auto& q : dataset.eligible_questions) {
    auto it = dataset.action_sets.find(q);
    if (it == dataset.action_sets.end()) continue;
    ActionId control;
    for (const auto& a : it->second) {
      const AssistanceAction* act = catalog.find_action(a);
      if (act && act->kind == AssistKind::no_assistance) {
        control = a;
        break;
      }
    }
    if (control.empty()) continue;
    for (const auto& a : it->second)
      if (a != control) contrasts.push_back({q, a, control});
  }
  return contrasts;
}

int cmd_simulate(const GlobalOpts& g, int n_sessions,
                 const std::vector<std::string>& mix_args) {
  sim::SimConfig cfg =
      g.config.empty() ? sim::SimConfig{} : parse_sim_config(g.config);
  sim::World world = sim::generate_world(cfg, g.seed);

  std::vector<MixSpec> specs;
  if (mix_args.empty())
    specs.push_back({"random", 1.0, ""});
  else
    for (const auto& arg : mix_args) specs.push_back(parse_mix_entry(arg));

  double total = 0.0;
  for (const auto& m : specs) total += m.weight;
  std::vector<sim::PolicyMixEntry> mix;
  for (const auto& m : specs) {
    sim::PolicyMixEntry entry;
    entry.policy_id = m.name;
    entry.weight = m.weight / total;
    entry.decide = m.file.empty()
                       ? builtin_policy_fn(m.name, world)
                       : spec_policy_fn(service::load_policy_spec(m.file));
    mix.push_back(std::move(entry));
  }

  sim::ExperimentResult result = sim::run_experiment(world, mix, n_sessions, g.seed);

  fs::path dir = ensure_out_dir(g);
  write_log_file((dir / "logs.jsonl").string(), result.sessions);
  write_catalog((dir / "items.jsonl").string(), (dir / "actions.jsonl").string(),
                world.catalog());
  {
    auto out = open_out(dir / "assignment.csv");
    out << "session_id,policy_id\n";
    for (const auto& [sid, pid] : result.assignment) out << sid << "," << pid << "\n";
  }

  std::size_t records = 0;
  for (const auto& s : result.sessions) records += s.records.size();
  std::map<std::string, int> per_policy;
  for (const auto& [sid, pid] : result.assignment) per_policy[pid]++;
  std::cout << "simulated " << result.sessions.size() << " sessions, " << records
            << " records into " << dir.string() << "\n";
  for (const auto& [pid, n] : per_policy)
    std::cout << "  " << pid << ": " << n << " sessions\n";
  return 0;
}

int cmd_ingest(const GlobalOpts& g, const DataOpts& d) {
  LoadedData data = load_data(d, g);
  const FilterReport& r = data.dataset.filter_report;

  json summary = {
      {"input_sessions", r.input_sessions},
      {"kept_sessions", r.kept_sessions},
      {"dropped_short_sessions", r.dropped_short_sessions},
      {"dropped_repeat_sessions", r.dropped_repeat_sessions},
      {"excluded_hint_exposures", r.excluded_hint_exposures},
      {"ineligible_questions", r.ineligible_questions},
      {"exposure_count", r.exposure_count},
      {"eligible_questions", data.dataset.eligible_questions.size()},
      {"distinct_count_includes_true_false", r.distinct_count_includes_true_false},
      {"min_samples_per_action", g.min_samples},
      {"min_questions_per_session", d.min_questions},
  };
  fs::path dir = ensure_out_dir(g);
  open_out(dir / "summary.json") << summary.dump(2) << "\n";

  std::cout << "kept " << r.kept_sessions << " of " << r.input_sessions
            << " sessions (" << r.dropped_short_sessions << " short, "
            << r.dropped_repeat_sessions << " repeats dropped); "
            << r.exposure_count << " exposures, "
            << data.dataset.eligible_questions.size() << " eligible questions\n";
  return 0;
}

int cmd_effects(const GlobalOpts& g, const DataOpts& d) {
  LoadedData data = load_data(d, g);
  mab::OutcomeTable table = make_table(data, g.w1);
  outcomes::RewardWeights weights{g.w1};
  auto summaries = mab::estimate_all_effects(table, weights);

  fs::path dir = ensure_out_dir(g);
  auto out = open_out(dir / "effects.csv");
  mab::write_effects_csv(out, summaries);
  std::cout << "wrote effect estimates for " << summaries.size() << " questions to "
            << (dir / "effects.csv").string() << "\n";
  return 0;
}

int cmd_train(const GlobalOpts& g, const DataOpts& d, double p_threshold,
              const std::string& policy_id) {
  LoadedData data = load_data(d, g);
  mab::OutcomeTable table = make_table(data, g.w1);
  outcomes::RewardWeights weights{g.w1};
  mab::MabPolicy policy = mab::train_mab_policy(
      table, data.dataset.eligible_questions, weights, p_threshold);
  policy.trained_at = static_cast<std::int64_t>(std::time(nullptr));

  service::PolicySpecFile spec = service::spec_from_mab(policy, data.catalog, policy_id);
  fs::path dir = ensure_out_dir(g);
  fs::path path = dir / "policy.json";
  service::save_policy_spec(spec, path.string());

  std::map<std::string, int> by_objective;
  for (const auto& [q, e] : policy.entries) by_objective[mab::to_string(e.objective)]++;
  std::cout << "trained policy '" << policy_id << "' over " << policy.entries.size()
            << " questions -> " << path.string() << "\n";
  for (const auto& [name, n] : by_objective)
    std::cout << "  objective " << name << ": " << n << " questions\n";
  return 0;
}

int cmd_evaluate(const GlobalOpts& g, const DataOpts& d, int repeats, int folds,
                 double p_threshold) {
  LoadedData data = load_data(d, g);
  mab::OutcomeTable table = make_table(data, g.w1);
  outcomes::RewardWeights weights{g.w1};

  std::vector<mab::PolicyPlan> plans(3);
  plans[0].name = "mab";
  plans[0].kind = mab::PolicyKind::trained;
  plans[0].objective = mab::Measure::reward;
  plans[0].use_welch_gate = true;
  plans[0].p_threshold = p_threshold;
  plans[1].name = "reward_only";
  plans[1].kind = mab::PolicyKind::trained;
  plans[1].objective = mab::Measure::reward;
  plans[2].name = "reattempt_only";
  plans[2].kind = mab::PolicyKind::trained;
  plans[2].objective = mab::Measure::reattempt_correct;

  mab::EvalReport report =
      mab::offline_evaluate(table, plans, weights, repeats, folds, g.seed,
                            data.has_catalog ? &data.catalog : nullptr);

  fs::path dir = ensure_out_dir(g);
  auto out = open_out(dir / "eval.csv");
  mab::write_eval_csv(out, report);

  std::cout << "evaluated " << report.policies.size() << " policies over "
            << repeats << "x" << folds << "-fold splits -> "
            << (dir / "eval.csv").string() << "\n";
  for (const auto& p : report.policies) {
    const auto& reward = p.by_measure[static_cast<int>(mab::Measure::reward)];
    std::cout << "  " << p.policy_name << ": reward " << fmt(reward.mean) << " +/- "
              << fmt(reward.halfwidth) << "\n";
  }
  return 0;
}

int cmd_pareto(const GlobalOpts& g, const DataOpts& d, const std::string& grid_text,
               int repeats, int folds) {
  LoadedData data = load_data(d, g);
  mab::OutcomeTable table = make_table(data, g.w1);
  std::vector<double> grid = parse_grid(grid_text);

  auto sweep = mab::pareto_sweep(table, grid, repeats, folds, g.seed,
                                 data.has_catalog ? &data.catalog : nullptr);
  fs::path dir = ensure_out_dir(g);
  auto out = open_out(dir / "pareto.csv");
  mab::write_pareto_csv(out, sweep);
  std::cout << "swept " << grid.size() << " weight points -> "
            << (dir / "pareto.csv").string() << "\n";
  return 0;
}

int cmd_hte_scan(const GlobalOpts& g, const DataOpts& d, int trees, int min_leaf,
                 double fdr_q, double alpha, const std::string& outcomes_text) {
  LoadedData data = load_data(d, g);

  causal::HteScanConfig cfg;
  cfg.forest.n_trees = trees;
  cfg.forest.min_leaf = min_leaf;
  cfg.outcome_cfg.weights.w1 = g.w1;
  cfg.fdr_q = fdr_q;
  cfg.alpha = alpha;
  cfg.seed = g.seed;
  if (!outcomes_text.empty()) {
    cfg.outcomes_to_test.clear();
    std::string token;
    std::stringstream ss(outcomes_text);
    while (std::getline(ss, token, ','))
      if (!token.empty()) cfg.outcomes_to_test.push_back(mab::measure_from_string(token));
    if (cfg.outcomes_to_test.empty()) throw UsageError("empty outcome list");
  }

  std::vector<causal::Contrast> contrasts = control_contrasts(data.dataset, data.catalog);
  causal::HteReport report =
      causal::hte_scan(data.dataset, contrasts, data.items, cfg);

  fs::path dir = ensure_out_dir(g);
  {
    auto out = open_out(dir / "hte_linear.csv");
    causal::write_linear_hte_csv(out, report);
  }
  {
    auto out = open_out(dir / "hte_forest.csv");
    causal::write_forest_hte_csv(out, report);
  }
  open_out(dir / "hte_report.json") << causal::report_to_json(report) << "\n";

  auto family_total = [](const std::vector<causal::DetectionCell>& cells) {
    int det = 0, tot = 0;
    for (const auto& c : cells) det += c.detected, tot += c.total;
    return std::pair<int, int>(det, tot);
  };
  int lin_det = 0, lin_tot = 0;
  for (const auto& row : report.linear) {
    auto [det, tot] = family_total(row);
    lin_det += det;
    lin_tot += tot;
  }
  auto [cal_det, cal_tot] = family_total(report.calibration);
  auto [rate_det, rate_tot] = family_total(report.autoc);
  auto [pol_det, pol_tot] = family_total(report.policy_comparison);
  std::cout << "scanned " << contrasts.size() << " contrasts -> " << dir.string()
            << "\n  linear interactions: " << lin_det << "/" << lin_tot
            << " detected\n  calibration: " << cal_det << "/" << cal_tot
            << "\n  autoc: " << rate_det << "/" << rate_tot
            << "\n  policy comparison: " << pol_det << "/" << pol_tot
            << "\n  failures: " << report.failures.size() << "\n";
  return 0;
}

int cmd_cb_compare(const GlobalOpts& g, const DataOpts& d, int trees, int min_leaf,
                   const std::string& outcome_name) {
  LoadedData data = load_data(d, g);
  mab::Measure outcome = mab::measure_from_string(outcome_name);
  outcomes::OutcomeConfig ocfg;
  ocfg.weights.w1 = g.w1;
  causal::ForestConfig fcfg;
  fcfg.n_trees = trees;
  fcfg.min_leaf = min_leaf;

  std::vector<causal::Contrast> contrasts = control_contrasts(data.dataset, data.catalog);
  causal::ContextCache cache = causal::build_context_cache(data.dataset, data.items);

  fs::path dir = ensure_out_dir(g);
  auto out = open_out(dir / "cb_compare.csv");
  out << "question_id,treat_action,control_action,n,n_train,n_holdout,"
         "baseline_arm,v_contextual,se_contextual,v_baseline,se_baseline,"
         "delta,p_value\n";

  int compared = 0, skipped = 0, better = 0;
  for (size_t ci = 0; ci < contrasts.size(); ++ci) {
    const auto& c = contrasts[ci];
    try {
      causal::TreatmentDataset td = causal::build_treatment_dataset(
          c.question_id, data.dataset, c.treat, c.control, outcome, data.items,
          ocfg, &cache);
      const int n = static_cast<int>(td.samples.size());
      if (n < 4) throw stats::DegenerateSampleError("too few samples");

      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      Rng rng(Rng::derive(g.seed, ci));
      for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(i + 1));
        std::swap(order[i], order[j]);
      }
      const int holdout_n = n / 2;
      std::vector<int> holdout_ids(order.begin(), order.begin() + holdout_n);
      std::vector<int> train_ids(order.begin() + holdout_n, order.end());
      causal::TreatmentDataset train_td = subset_dataset(td, train_ids);
      causal::TreatmentDataset holdout_td = subset_dataset(td, holdout_ids);

      causal::CateModel model =
          causal::fit_cate_forest(train_td, fcfg, Rng::derive(g.seed, ci * 2 + 1));
      causal::ContextualPolicy policy = causal::derive_contextual_policy(
          std::move(model), c.question_id, c.treat, c.control);

      // Baseline arm: what a bandit would deploy, chosen on the train half so
      // the holdout comparison stays out-of-sample.
      double sum_t = 0.0, sum_c = 0.0;
      int n_t = 0, n_c = 0;
      for (const auto& s : train_td.samples)
        (s.w == 1 ? (sum_t += s.y, ++n_t) : (sum_c += s.y, ++n_c));
      if (n_t == 0 || n_c == 0)
        throw stats::DegenerateSampleError("training half lost an arm");
      const int baseline_arm = sum_t / n_t > sum_c / n_c ? 1 : 0;

      causal::PolicyValue pv_ctx = causal::estimate_policy_value(policy, holdout_td);
      causal::PolicyValue pv_base =
          causal::estimate_constant_policy_value(baseline_arm, holdout_td);
      causal::TestResult cmp = causal::compare_policy_values(pv_ctx, pv_base);

      out << c.question_id << "," << c.treat << "," << c.control << "," << n << ","
          << train_ids.size() << "," << holdout_ids.size() << ","
          << (baseline_arm == 1 ? c.treat : c.control) << "," << fmt(pv_ctx.v_hat)
          << "," << fmt(pv_ctx.se) << "," << fmt(pv_base.v_hat) << ","
          << fmt(pv_base.se) << "," << fmt(pv_ctx.v_hat - pv_base.v_hat) << ","
          << fmt(cmp.p_value) << "\n";
      ++compared;
      if (cmp.p_value < 0.05) ++better;
    } catch (const std::exception& e) {
      std::cerr << "skip " << c.question_id << " " << c.treat << " vs " << c.control
                << ": " << e.what() << "\n";
      ++skipped;
    }
  }
  std::cout << "compared " << compared << " contrasts (" << skipped
            << " skipped); contextual beat the single arm at p<0.05 in " << better
            << " -> " << (dir / "cb_compare.csv").string() << "\n";
  return 0;
}

int cmd_serve(const std::vector<std::string>& spec_paths,
              const std::vector<std::string>& assign_args, int port) {
  std::vector<service::PolicySpecFile> specs;
  specs.reserve(spec_paths.size());
  std::set<std::string> loaded_ids;
  for (const auto& path : spec_paths) {
    specs.push_back(service::load_policy_spec(path));
    loaded_ids.insert(specs.back().policy_id);
  }

  service::AssignmentConfig cfg;
  if (assign_args.empty()) {
    const double w = 1.0 / static_cast<double>(specs.size());
    for (const auto& s : specs) cfg.entries.emplace_back(s.policy_id, w);
  } else {
    double total = 0.0;
    for (const auto& arg : assign_args) {
      auto eq = arg.find('=');
      if (eq == std::string::npos || eq == 0)
        throw UsageError("assignment entry '" + arg + "' must be policy_id=weight");
      std::string id = arg.substr(0, eq);
      if (!loaded_ids.count(id))
        throw UsageError("assignment references '" + id + "' but no such spec was loaded");
      double w = 0.0;
      try {
        size_t used = 0;
        w = std::stod(arg.substr(eq + 1), &used);
        if (used != arg.size() - eq - 1) throw std::invalid_argument(arg);
      } catch (const std::exception&) {
        throw UsageError("bad assignment weight in '" + arg + "'");
      }
      if (w <= 0.0) throw UsageError("assignment weight must be positive in '" + arg + "'");
      cfg.entries.emplace_back(id, w);
      total += w;
    }
    for (auto& [id, w] : cfg.entries) w /= total;
  }

  service::PolicyServer server(cfg);
  for (auto& s : specs) server.install_spec(std::move(s));
  server.start(port);
  std::cout << "listening on " << server.port() << std::endl;

  // Runs until stdin closes (or the process is signalled).
  std::string line;
  while (std::getline(std::cin, line)) {
  }
  server.stop();
  std::cout << "served " << server.decision_log().size() << " decisions\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feedback-policy pipeline: simulate, train, evaluate, and serve"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "tutorkit 0.1.0");

  GlobalOpts g;
  app.add_option("--seed", g.seed, "master random seed");
  app.add_option("--config", g.config, "world config file (JSON)");
  app.add_option("--out", g.out, "output directory")->capture_default_str();
  app.add_option("--min-samples", g.min_samples,
                 "per-action sample floor for question eligibility")
      ->capture_default_str();
  app.add_option("--weights", g.w1, "reward weight w1 on reattempt correctness")
      ->capture_default_str();

  int rc = 0;

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "generate interaction logs from a synthetic world");
  auto sim_sessions = std::make_shared<int>(2000);
  auto sim_mix = std::make_shared<std::vector<std::string>>();
  sim_cmd->add_option("--sessions", *sim_sessions, "number of practice sessions")
      ->capture_default_str();
  sim_cmd->add_option("--mix", *sim_mix,
                      "policy mix entries name=weight[@spec.json] (default random=1)");
  sim_cmd->callback([&rc, &g, sim_sessions, sim_mix] {
    rc = cmd_simulate(g, *sim_sessions, *sim_mix);
  });

  // ingest
  auto* ingest_cmd = app.add_subcommand("ingest", "validate and filter logs into a dataset summary");
  auto ingest_data = std::make_shared<DataOpts>();
  add_data_opts(ingest_cmd, *ingest_data, false);
  ingest_cmd->callback([&rc, &g, ingest_data] { rc = cmd_ingest(g, *ingest_data); });

  // effects
  auto* effects_cmd = app.add_subcommand("effects", "per-question action effect estimates (CSV)");
  auto effects_data = std::make_shared<DataOpts>();
  add_data_opts(effects_cmd, *effects_data, true);
  effects_cmd->callback([&rc, &g, effects_data] { rc = cmd_effects(g, *effects_data); });

  // train
  auto* train_cmd = app.add_subcommand("train", "train a bandit policy and write its spec file");
  auto train_data = std::make_shared<DataOpts>();
  auto train_p = std::make_shared<double>(0.05);
  auto train_id = std::make_shared<std::string>("mab");
  add_data_opts(train_cmd, *train_data, true);
  train_cmd->add_option("--p-threshold", *train_p, "objective-selection significance gate")
      ->capture_default_str();
  train_cmd->add_option("--policy-id", *train_id, "policy id written into the spec")
      ->capture_default_str();
  train_cmd->callback([&rc, &g, train_data, train_p, train_id] {
    rc = cmd_train(g, *train_data, *train_p, *train_id);
  });

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "repeated cross-validated offline policy evaluation (CSV)");
  auto eval_data = std::make_shared<DataOpts>();
  auto eval_repeats = std::make_shared<int>(20);
  auto eval_folds = std::make_shared<int>(5);
  auto eval_p = std::make_shared<double>(0.05);
  add_data_opts(eval_cmd, *eval_data, true);
  eval_cmd->add_option("--repeats", *eval_repeats, "cross-validation repeats")
      ->capture_default_str();
  eval_cmd->add_option("--folds", *eval_folds, "folds per repeat")->capture_default_str();
  eval_cmd->add_option("--p-threshold", *eval_p, "objective-selection significance gate")
      ->capture_default_str();
  eval_cmd->callback([&rc, &g, eval_data, eval_repeats, eval_folds, eval_p] {
    rc = cmd_evaluate(g, *eval_data, *eval_repeats, *eval_folds, *eval_p);
  });

  // pareto
  auto* pareto_cmd = app.add_subcommand("pareto", "sweep the reward weight and evaluate each point (CSV)");
  auto pareto_data = std::make_shared<DataOpts>();
  auto pareto_grid =
      std::make_shared<std::string>("0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1");
  auto pareto_repeats = std::make_shared<int>(20);
  auto pareto_folds = std::make_shared<int>(5);
  add_data_opts(pareto_cmd, *pareto_data, true);
  pareto_cmd->add_option("--grid", *pareto_grid, "comma-separated w1 grid")
      ->capture_default_str();
  pareto_cmd->add_option("--repeats", *pareto_repeats, "cross-validation repeats")
      ->capture_default_str();
  pareto_cmd->add_option("--folds", *pareto_folds, "folds per repeat")
      ->capture_default_str();
  pareto_cmd->callback([&rc, &g, pareto_data, pareto_grid, pareto_repeats, pareto_folds] {
    rc = cmd_pareto(g, *pareto_data, *pareto_grid, *pareto_repeats, *pareto_folds);
  });

  // hte-scan
  auto* hte_cmd = app.add_subcommand("hte-scan", "heterogeneous-effect detection scan (CSVs + JSON)");
  auto hte_data = std::make_shared<DataOpts>();
  auto hte_trees = std::make_shared<int>(200);
  auto hte_min_leaf = std::make_shared<int>(10);
  auto hte_fdr = std::make_shared<double>(0.2);
  auto hte_alpha = std::make_shared<double>(0.05);
  auto hte_outcomes = std::make_shared<std::string>();
  add_data_opts(hte_cmd, *hte_data, true);
  hte_cmd->add_option("--trees", *hte_trees, "forest size")->capture_default_str();
  hte_cmd->add_option("--min-leaf", *hte_min_leaf, "per-arm minimum leaf size")
      ->capture_default_str();
  hte_cmd->add_option("--fdr-q", *hte_fdr, "Benjamini-Hochberg level per family")
      ->capture_default_str();
  hte_cmd->add_option("--alpha", *hte_alpha, "raw p-value ceiling for a detection")
      ->capture_default_str();
  hte_cmd->add_option("--outcomes", *hte_outcomes,
                      "comma-separated outcome measures (default reward,reattempt_correct,student_ability,session_success)");
  hte_cmd->callback([&rc, &g, hte_data, hte_trees, hte_min_leaf, hte_fdr, hte_alpha,
                     hte_outcomes] {
    rc = cmd_hte_scan(g, *hte_data, *hte_trees, *hte_min_leaf, *hte_fdr, *hte_alpha,
                      *hte_outcomes);
  });

  // cb-compare
  auto* cb_cmd = app.add_subcommand("cb-compare", "contextual policy value vs best single arm (CSV)");
  auto cb_data = std::make_shared<DataOpts>();
  auto cb_trees = std::make_shared<int>(200);
  auto cb_min_leaf = std::make_shared<int>(10);
  auto cb_outcome = std::make_shared<std::string>("reattempt_correct");
  add_data_opts(cb_cmd, *cb_data, true);
  cb_cmd->add_option("--trees", *cb_trees, "forest size")->capture_default_str();
  cb_cmd->add_option("--min-leaf", *cb_min_leaf, "per-arm minimum leaf size")
      ->capture_default_str();
  cb_cmd->add_option("--outcome", *cb_outcome, "outcome measure to value")
      ->capture_default_str();
  cb_cmd->callback([&rc, &g, cb_data, cb_trees, cb_min_leaf, cb_outcome] {
    rc = cmd_cb_compare(g, *cb_data, *cb_trees, *cb_min_leaf, *cb_outcome);
  });

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "serve policy decisions over a local socket");
  auto serve_specs = std::make_shared<std::vector<std::string>>();
  auto serve_assign = std::make_shared<std::vector<std::string>>();
  auto serve_port = std::make_shared<int>(0);
  serve_cmd->add_option("--spec", *serve_specs, "policy spec file(s)")->required();
  serve_cmd->add_option("--assign", *serve_assign,
                        "assignment entries policy_id=weight (default equal split)");
  serve_cmd->add_option("--port", *serve_port, "TCP port (0 picks one)")
      ->capture_default_str();
  serve_cmd->callback([&rc, serve_specs, serve_assign, serve_port] {
    rc = cmd_serve(*serve_specs, *serve_assign, *serve_port);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
