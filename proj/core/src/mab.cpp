#include "tutorkit/mab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "tutorkit/hash.hpp"
#include "tutorkit/rng.hpp"

namespace tutorkit::mab {

namespace {

constexpr int kNumBase = 7;  // measures 1..7; reward (index 0) is derived

// Sufficient statistics for one (question, action) arm within a split.
struct ArmStats {
  std::array<double, kNumBase> sum{};
  std::array<int, kNumBase> cnt{};
  double sum_rr = 0.0, sum_tt = 0.0, sum_rt = 0.0;  // reward variance terms
  int n = 0;

  void add(const OutcomeTable::Row& r) {
    ++n;
    sum[0] += r.reattempt;
    ++cnt[0];
    sum[1] += r.ability;
    ++cnt[1];
    sum[2] += r.success;
    ++cnt[2];
    if (r.future_rate) { sum[3] += *r.future_rate; ++cnt[3]; }
    if (r.next_correct) { sum[4] += *r.next_correct; ++cnt[4]; }
    if (r.future_rt) { sum[5] += *r.future_rt; ++cnt[5]; }
    if (r.confidence) { sum[6] += *r.confidence; ++cnt[6]; }
    sum_rr += r.reattempt * r.reattempt;
    sum_tt += r.ability * r.ability;
    sum_rt += r.reattempt * r.ability;
  }

  void subtract_into(const ArmStats& part, ArmStats& out) const {
    for (int i = 0; i < kNumBase; ++i) {
      out.sum[i] = sum[i] - part.sum[i];
      out.cnt[i] = cnt[i] - part.cnt[i];
    }
    out.sum_rr = sum_rr - part.sum_rr;
    out.sum_tt = sum_tt - part.sum_tt;
    out.sum_rt = sum_rt - part.sum_rt;
    out.n = n - part.n;
  }

  double reward_sum(double w1) const { return w1 * sum[0] + (1.0 - w1) * sum[1]; }
  double reward_mean(double w1) const { return reward_sum(w1) / n; }
  double reward_variance(double w1) const {
    const double sq = w1 * w1 * sum_rr + (1.0 - w1) * (1.0 - w1) * sum_tt +
                      2.0 * w1 * (1.0 - w1) * sum_rt;
    const double m = reward_mean(w1);
    return std::max(0.0, (sq - n * m * m) / (n - 1.0));
  }
  // Mean of a measure, or nullopt when unsupported here.
  std::optional<double> measure_mean(Measure m, double w1) const {
    if (m == Measure::reward) {
      if (n == 0) return std::nullopt;
      return reward_mean(w1);
    }
    const int b = static_cast<int>(m) - 1;
    if (cnt[b] == 0) return std::nullopt;
    return sum[b] / cnt[b];
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

const char* to_string(Measure m) {
  switch (m) {
    case Measure::reward: return "reward";
    case Measure::reattempt_correct: return "reattempt_correct";
    case Measure::student_ability: return "student_ability";
    case Measure::session_success: return "session_success";
    case Measure::future_correct_rate: return "future_correct_rate";
    case Measure::next_question_correct: return "next_question_correct";
    case Measure::future_response_time: return "future_response_time";
    case Measure::confidence: return "confidence";
  }
  return "unknown";
}

Measure measure_from_string(const std::string& s) {
  for (int i = 0; i < kNumMeasures; ++i) {
    if (s == to_string(static_cast<Measure>(i))) return static_cast<Measure>(i);
  }
  throw std::invalid_argument("unknown measure '" + s + "'");
}

const char* to_string(Objective o) {
  switch (o) {
    case Objective::combined_reward: return "combined_reward";
    case Objective::reattempt_correct: return "reattempt_correct";
    case Objective::fallback_random: return "fallback_random";
  }
  return "unknown";
}

Objective objective_from_string(const std::string& s) {
  if (s == "combined_reward") return Objective::combined_reward;
  if (s == "reattempt_correct") return Objective::reattempt_correct;
  if (s == "fallback_random") return Objective::fallback_random;
  throw std::invalid_argument("unknown objective '" + s + "'");
}

int OutcomeTable::question_index(const QuestionId& q) const {
  auto it = std::lower_bound(questions.begin(), questions.end(), q);
  if (it == questions.end() || *it != q) throw UnknownQuestionError(q);
  return static_cast<int>(it - questions.begin());
}

std::optional<double> OutcomeTable::measure_value(const Row& r, Measure m, double w1) {
  switch (m) {
    case Measure::reward: return w1 * r.reattempt + (1.0 - w1) * r.ability;
    case Measure::reattempt_correct: return r.reattempt;
    case Measure::student_ability: return r.ability;
    case Measure::session_success: return r.success;
    case Measure::future_correct_rate: return r.future_rate;
    case Measure::next_question_correct: return r.next_correct;
    case Measure::future_response_time: return r.future_rt;
    case Measure::confidence: return r.confidence;
  }
  return std::nullopt;
}

OutcomeTable build_outcome_table(const FilteredDataset& dataset,
                                 const outcomes::ItemMap& items,
                                 const outcomes::OutcomeConfig& cfg) {
  OutcomeTable table;
  table.session_count = static_cast<int>(dataset.sessions.size());
  table.questions.reserve(dataset.exposure_index.size());
  std::vector<std::optional<double>> ability_cache(dataset.sessions.size());

  for (const auto& [qid, refs] : dataset.exposure_index) {
    const int q = static_cast<int>(table.questions.size());
    table.questions.push_back(qid);
    auto as_it = dataset.action_sets.find(qid);
    if (as_it == dataset.action_sets.end()) {
      throw std::runtime_error("no action set for question '" + qid + "'");
    }
    table.action_sets.push_back(as_it->second);
    const auto& actions = table.action_sets.back();
    const int begin = static_cast<int>(table.rows.size());

    for (const auto& ref : refs) {
      const PracticeSession& s = dataset.sessions[ref.session_index];
      auto& cached = ability_cache[ref.session_index];
      if (!cached) cached = outcomes::session_ability(s, items);
      const auto out = outcomes::compute_outcomes(s, ref.record_index, *cached, cfg);

      const ActionId& aid = *s.records[ref.record_index].shown_action_id;
      const auto a_it = std::lower_bound(actions.begin(), actions.end(), aid);
      if (a_it == actions.end() || *a_it != aid) {
        throw std::runtime_error("exposure action '" + aid +
                                 "' missing from the action set of question '" + qid + "'");
      }
      OutcomeTable::Row row;
      row.question = q;
      row.action = static_cast<int>(a_it - actions.begin());
      row.session_index = ref.session_index;
      row.record_index = ref.record_index;
      row.reattempt = out.reattempt_correct;
      row.ability = out.student_ability;
      row.success = out.session_success;
      row.future_rate = out.future_correct_rate;
      row.next_correct = out.next_question_correct;
      row.future_rt = out.future_response_time_s;
      if (out.confidence) row.confidence = static_cast<double>(*out.confidence);
      table.rows.push_back(row);
    }
    table.row_ranges.emplace_back(begin, static_cast<int>(table.rows.size()));
    table.eligible.push_back(dataset.eligible_questions.count(qid) > 0);
  }
  return table;
}

QuestionEffectSummary estimate_action_effects(const OutcomeTable& table,
                                              const QuestionId& question,
                                              const outcomes::RewardWeights& weights) {
  const int q = table.question_index(question);
  const auto& actions = table.action_sets[q];
  const auto [begin, end] = table.row_ranges[q];

  QuestionEffectSummary out;
  out.question_id = question;
  out.estimates.resize(actions.size());
  std::vector<std::array<std::vector<double>, kNumMeasures>> samples(actions.size());
  for (size_t a = 0; a < actions.size(); ++a) out.estimates[a].action_id = actions[a];

  for (int i = begin; i < end; ++i) {
    const auto& row = table.rows[i];
    ++out.estimates[row.action].n;
    for (int m = 0; m < kNumMeasures; ++m) {
      const auto v =
          OutcomeTable::measure_value(row, static_cast<Measure>(m), weights.w1);
      if (v) samples[row.action][m].push_back(*v);
    }
  }

  for (size_t a = 0; a < actions.size(); ++a) {
    for (int m = 0; m < kNumMeasures; ++m) {
      const auto& xs = samples[a][m];
      auto& stat = out.estimates[a].by_measure[m];
      stat.n = static_cast<int>(xs.size());
      if (xs.empty()) continue;
      const auto ci = stats::mean_ci(xs);
      stat.mean = ci.mean;
      stat.halfwidth = xs.size() > 1 ? ci.half_width : 0.0;
    }
  }

  for (int m = 0; m < kNumMeasures; ++m) {
    double lo = 0.0, hi = 0.0;
    bool any = false;
    double pooled_num = 0.0, pooled_den = 0.0;
    for (size_t a = 0; a < actions.size(); ++a) {
      const auto& xs = samples[a][m];
      if (xs.empty()) continue;
      const double mean = out.estimates[a].by_measure[m].mean;
      if (!any) {
        lo = hi = mean;
        any = true;
      } else {
        lo = std::min(lo, mean);
        hi = std::max(hi, mean);
      }
      if (xs.size() > 1) {
        pooled_num += (xs.size() - 1) * stats::sample_variance(xs);
        pooled_den += static_cast<double>(xs.size() - 1);
      }
    }
    out.effect_gap[m] = any ? hi - lo : 0.0;
    out.pooled_variance[m] = pooled_den > 0.0 ? pooled_num / pooled_den : 0.0;
  }
  return out;
}

std::vector<QuestionEffectSummary> estimate_all_effects(
    const OutcomeTable& table, const outcomes::RewardWeights& weights) {
  std::vector<QuestionEffectSummary> out;
  out.reserve(table.questions.size());
  for (const auto& q : table.questions) {
    out.push_back(estimate_action_effects(table, q, weights));
  }
  return out;
}

stats::AnovaResult anova_screen(const OutcomeTable& table, const QuestionId& question,
                                Measure measure, const outcomes::RewardWeights& weights) {
  const int q = table.question_index(question);
  const auto [begin, end] = table.row_ranges[q];
  std::vector<std::vector<double>> groups(table.action_sets[q].size());
  for (int i = begin; i < end; ++i) {
    const auto& row = table.rows[i];
    const auto v = OutcomeTable::measure_value(row, measure, weights.w1);
    if (v) groups[row.action].push_back(*v);
  }
  std::erase_if(groups, [](const auto& g) { return g.size() < 2; });
  if (groups.size() < 2) {
    throw stats::DegenerateSampleError("need two actions with two samples each");
  }
  return stats::one_way_anova(groups);
}

namespace {

// Argmax of a measure over arms with data; ties resolve to the smallest
// action index, i.e. the lexicographically smallest id in the sorted set.
int argmax_arm(const std::vector<ArmStats>& arms, Measure m, double w1) {
  int best = -1;
  double best_mean = 0.0;
  for (int a = 0; a < static_cast<int>(arms.size()); ++a) {
    const auto mean = arms[a].measure_mean(m, w1);
    if (!mean) continue;
    if (best < 0 || *mean > best_mean) {
      best = a;
      best_mean = *mean;
    }
  }
  return best;
}

// The objective-selection rule over per-arm reward statistics.
std::pair<int, Objective> gate_choice(const std::vector<ArmStats>& arms, double w1,
                                      double p_threshold) {
  const int a_r = argmax_arm(arms, Measure::reward, w1);
  const int a_c = argmax_arm(arms, Measure::reattempt_correct, w1);
  if (a_r < 0) return {-1, Objective::fallback_random};
  if (a_c < 0 || a_r == a_c) return {a_r, Objective::combined_reward};
  double p;
  try {
    p = stats::welch_t_from_summary(
            arms[a_r].reward_mean(w1), arms[a_r].reward_variance(w1), arms[a_r].n,
            arms[a_c].reward_mean(w1), arms[a_c].reward_variance(w1), arms[a_c].n,
            stats::Tail::greater)
            .p;
  } catch (const stats::DegenerateSampleError&) {
    p = arms[a_r].reward_mean(w1) > arms[a_c].reward_mean(w1) ? 0.0 : 1.0;
  }
  if (p < p_threshold) return {a_r, Objective::combined_reward};
  return {a_c, Objective::reattempt_correct};
}

std::vector<ArmStats> full_arm_stats(const OutcomeTable& table, int q) {
  std::vector<ArmStats> arms(table.action_sets[q].size());
  const auto [begin, end] = table.row_ranges[q];
  for (int i = begin; i < end; ++i) arms[table.rows[i].action].add(table.rows[i]);
  return arms;
}

}  // namespace

std::pair<ActionId, Objective> train_question_policy(
    const OutcomeTable& table, const QuestionId& question,
    const outcomes::RewardWeights& weights, double p_threshold) {
  const int q = table.question_index(question);
  const auto arms = full_arm_stats(table, q);
  const auto [a, objective] = gate_choice(arms, weights.w1, p_threshold);
  if (a < 0) return {ActionId{}, Objective::fallback_random};
  return {table.action_sets[q][a], objective};
}

MabPolicy train_mab_policy(const OutcomeTable& table,
                           const std::set<QuestionId>& eligible_questions,
                           const outcomes::RewardWeights& weights, double p_threshold) {
  MabPolicy policy;
  policy.weights = weights;
  policy.p_threshold = p_threshold;
  policy.config_hash =
      fnv1a64("mab;w1=" + fmt(weights.w1) + ";p=" + fmt(p_threshold));
  for (const auto& q : table.questions) {
    MabPolicy::Entry entry;
    if (eligible_questions.count(q)) {
      auto [action, objective] = train_question_policy(table, q, weights, p_threshold);
      entry.action_id = std::move(action);
      entry.objective = objective;
    }
    policy.entries[q] = std::move(entry);
  }
  return policy;
}

namespace {

struct FoldAccumulator {
  std::array<double, kNumBase> sum{};
  std::array<int, kNumBase> cnt{};
  int matched = 0;

  void add(const OutcomeTable::Row& r) {
    ++matched;
    sum[0] += r.reattempt;
    ++cnt[0];
    sum[1] += r.ability;
    ++cnt[1];
    sum[2] += r.success;
    ++cnt[2];
    if (r.future_rate) { sum[3] += *r.future_rate; ++cnt[3]; }
    if (r.next_correct) { sum[4] += *r.next_correct; ++cnt[4]; }
    if (r.future_rt) { sum[5] += *r.future_rt; ++cnt[5]; }
    if (r.confidence) { sum[6] += *r.confidence; ++cnt[6]; }
  }
};

}  // namespace

EvalReport offline_evaluate(const OutcomeTable& table, std::vector<PolicyPlan> plans,
                            const outcomes::RewardWeights& weights, int repeats,
                            int folds, std::uint64_t seed, const Catalog* catalog) {
  if (folds < 2) throw std::invalid_argument("cross validation needs folds >= 2");
  if (repeats < 1) throw std::invalid_argument("cross validation needs repeats >= 1");
  if (table.session_count < folds) {
    throw std::invalid_argument("fewer sessions than folds");
  }

  auto has_plan = [&](const std::string& name) {
    return std::any_of(plans.begin(), plans.end(),
                       [&](const auto& p) { return p.name == name; });
  };
  if (!has_plan("random")) {
    PolicyPlan p;
    p.name = "random";
    p.kind = PolicyKind::random;
    plans.insert(plans.begin(), p);
  }
  if (!has_plan("no_assist")) {
    PolicyPlan p;
    p.name = "no_assist";
    p.kind = PolicyKind::fixed_kind;
    p.fixed_kind_value = AssistKind::no_assistance;
    plans.insert(plans.begin() + 1, p);
  }

  const int n_q = static_cast<int>(table.questions.size());
  const int n_plans = static_cast<int>(plans.size());

  // Arm index layout: arms of question q start at arm_offset[q].
  std::vector<int> arm_offset(n_q + 1, 0);
  for (int q = 0; q < n_q; ++q) {
    arm_offset[q + 1] = arm_offset[q] + static_cast<int>(table.action_sets[q].size());
  }
  const int total_arms = arm_offset[n_q];

  // Fixed-kind plans resolve to one action index per question up front.
  std::vector<std::vector<int>> fixed_choice(n_plans, std::vector<int>(n_q, -1));
  for (int p = 0; p < n_plans; ++p) {
    if (plans[p].kind != PolicyKind::fixed_kind || !catalog) continue;
    for (int q = 0; q < n_q; ++q) {
      const auto& actions = table.action_sets[q];
      for (int a = 0; a < static_cast<int>(actions.size()); ++a) {
        const AssistanceAction* act = catalog->find_action(actions[a]);
        if (act && act->kind == plans[p].fixed_kind_value) {
          fixed_choice[p][q] = a;
          break;  // sorted ids: first match is the lexicographic choice
        }
      }
    }
  }

  // Fold-level means per plan and measure, across all repeats.
  std::vector<std::array<std::vector<double>, kNumMeasures>> fold_means(n_plans);
  std::vector<std::array<long long, kNumMeasures>> measure_counts(n_plans);
  for (auto& mc : measure_counts) mc.fill(0);
  std::vector<long long> matched_total(n_plans, 0);

  std::vector<int> fold_of(table.session_count);
  std::vector<int> order(table.session_count);
  std::vector<ArmStats> fold_stats(static_cast<size_t>(total_arms) * folds);
  std::vector<ArmStats> totals(total_arms);
  // choice[p][q * folds + f]: action index, or -1 for match-everything.
  std::vector<std::vector<int>> choice(n_plans,
                                       std::vector<int>(static_cast<size_t>(n_q) * folds));
  std::vector<FoldAccumulator> acc(static_cast<size_t>(n_plans) * folds);

  for (int rep = 0; rep < repeats; ++rep) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(rep)));
    for (int i = 0; i < table.session_count; ++i) order[i] = i;
    for (int i = table.session_count - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(order[i], order[j]);
    }
    for (int i = 0; i < table.session_count; ++i) fold_of[order[i]] = i % folds;

    std::fill(fold_stats.begin(), fold_stats.end(), ArmStats{});
    std::fill(totals.begin(), totals.end(), ArmStats{});
    for (const auto& row : table.rows) {
      const int arm = arm_offset[row.question] + row.action;
      fold_stats[static_cast<size_t>(arm) * folds + fold_of[row.session_index]].add(row);
      totals[arm].add(row);
    }

    // Train every plan on each fold's complement.
    for (int p = 0; p < n_plans; ++p) {
      auto& plan = plans[p];
      auto& plan_choice = choice[p];
      if (plan.kind == PolicyKind::random) {
        std::fill(plan_choice.begin(), plan_choice.end(), -1);
        continue;
      }
      if (plan.kind == PolicyKind::fixed_kind) {
        for (int q = 0; q < n_q; ++q) {
          for (int f = 0; f < folds; ++f) {
            plan_choice[static_cast<size_t>(q) * folds + f] =
                fixed_choice[p][q] >= 0 ? fixed_choice[p][q] : -2;  // -2: never match
          }
        }
        continue;
      }
      const double w1 = plan.w1_override.value_or(weights.w1);
      std::vector<ArmStats> train;
      for (int q = 0; q < n_q; ++q) {
        const int n_a = static_cast<int>(table.action_sets[q].size());
        for (int f = 0; f < folds; ++f) {
          auto& slot = plan_choice[static_cast<size_t>(q) * folds + f];
          if (!table.eligible[q]) {
            slot = -1;  // serve-time fallback samples uniformly: match all
            continue;
          }
          train.assign(n_a, ArmStats{});
          for (int a = 0; a < n_a; ++a) {
            const int arm = arm_offset[q] + a;
            totals[arm].subtract_into(fold_stats[static_cast<size_t>(arm) * folds + f],
                                      train[a]);
          }
          int chosen;
          if (plan.use_welch_gate) {
            chosen = gate_choice(train, w1, plan.p_threshold).first;
          } else {
            chosen = argmax_arm(train, plan.objective, w1);
          }
          slot = chosen >= 0 ? chosen : -1;
        }
      }
    }

    // Score held-out exposures.
    std::fill(acc.begin(), acc.end(), FoldAccumulator{});
    for (const auto& row : table.rows) {
      const int f = fold_of[row.session_index];
      for (int p = 0; p < n_plans; ++p) {
        const int c = choice[p][static_cast<size_t>(row.question) * folds + f];
        if (c == -1 || c == row.action) {
          acc[static_cast<size_t>(p) * folds + f].add(row);
        }
      }
    }

    for (int p = 0; p < n_plans; ++p) {
      const double w1 = plans[p].w1_override.value_or(weights.w1);
      for (int f = 0; f < folds; ++f) {
        const auto& a = acc[static_cast<size_t>(p) * folds + f];
        matched_total[p] += a.matched;
        for (int m = 0; m < kNumMeasures; ++m) {
          if (m == static_cast<int>(Measure::reward)) {
            if (a.cnt[0] > 0) {
              fold_means[p][m].push_back(w1 * a.sum[0] / a.cnt[0] +
                                         (1.0 - w1) * a.sum[1] / a.cnt[1]);
              measure_counts[p][m] += a.cnt[0];
            }
          } else {
            const int b = m - 1;
            if (a.cnt[b] > 0) {
              fold_means[p][m].push_back(a.sum[b] / a.cnt[b]);
              measure_counts[p][m] += a.cnt[b];
            }
          }
        }
      }
    }
  }

  EvalReport report;
  report.repeats = repeats;
  report.folds = folds;
  report.seed = seed;
  report.w1 = weights.w1;
  report.policies.resize(n_plans);
  for (int p = 0; p < n_plans; ++p) {
    auto& pe = report.policies[p];
    pe.policy_name = plans[p].name;
    pe.matched_per_repeat = static_cast<double>(matched_total[p]) / repeats;
    for (int m = 0; m < kNumMeasures; ++m) {
      const auto& xs = fold_means[p][m];
      auto& stat = pe.by_measure[m];
      if (xs.empty()) continue;
      const auto ci = stats::mean_ci(xs);
      stat.mean = ci.mean;
      stat.halfwidth = xs.size() > 1 ? ci.half_width : 0.0;
      stat.n = static_cast<int>(measure_counts[p][m] / repeats);
    }
  }
  return report;
}

std::vector<std::pair<double, EvalReport>> pareto_sweep(
    const OutcomeTable& table, const std::vector<double>& w1_grid, int repeats,
    int folds, std::uint64_t seed, const Catalog* catalog) {
  std::vector<double> grid = w1_grid;
  std::sort(grid.begin(), grid.end());
  std::vector<std::pair<double, EvalReport>> out;
  for (double w1 : grid) {
    if (w1 < 0.0 || w1 > 1.0) throw std::invalid_argument("w1 outside [0,1]");
    PolicyPlan plan;
    plan.name = "reward_argmax";
    plan.kind = PolicyKind::trained;
    plan.objective = Measure::reward;
    outcomes::RewardWeights weights{w1};
    // Same seed for every grid point: identical folds keep sweep points
    // comparable.
    out.emplace_back(w1, offline_evaluate(table, {plan}, weights, repeats, folds,
                                          seed, catalog));
  }
  return out;
}

double tune_p_threshold(const OutcomeTable& table,
                        const outcomes::RewardWeights& weights,
                        const std::vector<double>& grid, Measure measure,
                        int repeats, int folds, std::uint64_t seed,
                        const Catalog* catalog) {
  if (grid.empty()) throw std::invalid_argument("p-threshold grid is empty");
  std::vector<double> sorted = grid;
  std::sort(sorted.begin(), sorted.end());

  std::vector<PolicyPlan> plans;
  for (double p : sorted) {
    PolicyPlan plan;
    plan.name = "p_" + fmt(p);
    plan.kind = PolicyKind::trained;
    plan.use_welch_gate = true;
    plan.p_threshold = p;
    plans.push_back(plan);
  }
  const EvalReport report = offline_evaluate(table, plans, weights, repeats, folds,
                                             seed, catalog);

  double best_p = sorted.front();
  double best_value = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (const auto& pe : report.policies) {
      if (pe.policy_name != plans[i].name) continue;
      const auto& stat = pe.by_measure[static_cast<int>(measure)];
      if (!stat.missing() && stat.mean > best_value) {
        best_value = stat.mean;
        best_p = sorted[i];
      }
    }
  }
  return best_p;
}

namespace {

void write_measure_header(std::ostream& out) {
  for (int m = 0; m < kNumMeasures; ++m) {
    const char* name = to_string(static_cast<Measure>(m));
    out << ',' << name << "_mean," << name << "_halfwidth," << name << "_n";
  }
}

void write_measure_cells(std::ostream& out, const std::array<MeasureStat, kNumMeasures>& stats) {
  for (int m = 0; m < kNumMeasures; ++m) {
    const auto& s = stats[m];
    if (s.missing()) {
      out << ",,," << 0;
    } else {
      out << ',' << fmt(s.mean) << ',' << fmt(s.halfwidth) << ',' << s.n;
    }
  }
}

}  // namespace

void write_effects_csv(std::ostream& out,
                       const std::vector<QuestionEffectSummary>& summaries) {
  out << "question_id,action_id,n";
  write_measure_header(out);
  out << '\n';
  for (const auto& summary : summaries) {
    for (const auto& est : summary.estimates) {
      out << summary.question_id << ',' << est.action_id << ',' << est.n;
      write_measure_cells(out, est.by_measure);
      out << '\n';
    }
  }
}

void write_eval_csv(std::ostream& out, const EvalReport& report) {
  out << "policy,matched_per_repeat";
  write_measure_header(out);
  out << '\n';
  for (const auto& pe : report.policies) {
    out << pe.policy_name << ',' << fmt(pe.matched_per_repeat);
    write_measure_cells(out, pe.by_measure);
    out << '\n';
  }
}

void write_pareto_csv(std::ostream& out,
                      const std::vector<std::pair<double, EvalReport>>& sweep) {
  out << "w1,policy,matched_per_repeat";
  write_measure_header(out);
  out << '\n';
  for (const auto& [w1, report] : sweep) {
    for (const auto& pe : report.policies) {
      out << fmt(w1) << ',' << pe.policy_name << ',' << fmt(pe.matched_per_repeat);
      write_measure_cells(out, pe.by_measure);
      out << '\n';
    }
  }
}

}  // namespace tutorkit::mab
