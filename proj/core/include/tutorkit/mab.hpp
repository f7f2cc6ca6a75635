#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tutorkit/domain.hpp"
#include "tutorkit/ingest.hpp"
#include "tutorkit/outcomes.hpp"
#include "tutorkit/stats.hpp"

namespace tutorkit::mab {

enum class Measure : int {
  reward = 0,
  reattempt_correct,
  student_ability,
  session_success,
  future_correct_rate,
  next_question_correct,
  future_response_time,
  confidence,
};
constexpr int kNumMeasures = 8;
const char* to_string(Measure m);
Measure measure_from_string(const std::string& s);

class UnknownQuestionError : public std::runtime_error {
 public:
  explicit UnknownQuestionError(const QuestionId& q)
      : std::runtime_error("question '" + q + "' not in dataset") {}
};

// Flat per-exposure outcome rows, grouped by question. Built once per
// dataset; reward is derived from reattempt and ability on demand so weight
// sweeps reuse the same table.
struct OutcomeTable {
  struct Row {
    int question = 0;  // into `questions`
    int action = 0;    // into `action_sets[question]`
    int session_index = 0;
    int record_index = 0;
    double reattempt = 0.0;
    double ability = 0.0;
    double success = 0.0;
    std::optional<double> future_rate;
    std::optional<double> next_correct;
    std::optional<double> future_rt;
    std::optional<double> confidence;
  };

  std::vector<QuestionId> questions;               // sorted
  std::vector<std::vector<ActionId>> action_sets;  // aligned, each sorted
  std::vector<bool> eligible;                      // passed the min-samples rule
  std::vector<Row> rows;                           // grouped by question
  std::vector<std::pair<int, int>> row_ranges;     // [begin, end) per question
  int session_count = 0;  // folds partition dataset sessions by index

  int question_index(const QuestionId& q) const;  // throws UnknownQuestionError

  static std::optional<double> measure_value(const Row& r, Measure m, double w1);
};

OutcomeTable build_outcome_table(const FilteredDataset& dataset,
                                 const outcomes::ItemMap& items,
                                 const outcomes::OutcomeConfig& cfg);

struct MeasureStat {
  double mean = 0.0;
  double halfwidth = 0.0;
  int n = 0;
  bool missing() const { return n == 0; }
};

struct EffectEstimate {
  ActionId action_id;
  int n = 0;  // exposures
  std::array<MeasureStat, kNumMeasures> by_measure;
};

struct QuestionEffectSummary {
  QuestionId question_id;
  std::vector<EffectEstimate> estimates;  // sorted by action id
  // Spread of per-action means and pooled within-action variance, per measure.
  std::array<double, kNumMeasures> effect_gap{};
  std::array<double, kNumMeasures> pooled_variance{};
};

QuestionEffectSummary estimate_action_effects(const OutcomeTable& table,
                                              const QuestionId& question,
                                              const outcomes::RewardWeights& weights);
std::vector<QuestionEffectSummary> estimate_all_effects(
    const OutcomeTable& table, const outcomes::RewardWeights& weights);

stats::AnovaResult anova_screen(const OutcomeTable& table, const QuestionId& question,
                                Measure measure, const outcomes::RewardWeights& weights);

enum class Objective { combined_reward, reattempt_correct, fallback_random };
const char* to_string(Objective o);
Objective objective_from_string(const std::string& s);

struct MabPolicy {
  struct Entry {
    ActionId action_id;  // empty for fallback_random
    Objective objective = Objective::fallback_random;
  };
  std::map<QuestionId, Entry> entries;
  outcomes::RewardWeights weights;
  double p_threshold = 0.05;
  std::uint64_t config_hash = 0;
  std::int64_t trained_at = 0;  // epoch seconds; caller-supplied
};

// The objective-selection rule: pick the combined-reward argmax when it beats
// the reattempt argmax on reward with one-sided Welch p below the threshold,
// otherwise defer to the reattempt argmax.
std::pair<ActionId, Objective> train_question_policy(
    const OutcomeTable& table, const QuestionId& question,
    const outcomes::RewardWeights& weights, double p_threshold);

MabPolicy train_mab_policy(const OutcomeTable& table,
                           const std::set<QuestionId>& eligible_questions,
                           const outcomes::RewardWeights& weights, double p_threshold);

enum class PolicyKind { random, fixed_kind, trained };

// One policy to evaluate. Trained plans refit inside every cross-validation
// split; `objective` picks the argmax measure, and `use_welch_gate` switches
// to the objective-selection rule (reward vs reattempt argmax).
struct PolicyPlan {
  std::string name;
  PolicyKind kind = PolicyKind::trained;
  AssistKind fixed_kind_value = AssistKind::no_assistance;
  Measure objective = Measure::reward;
  bool use_welch_gate = false;
  double p_threshold = 0.05;
  std::optional<double> w1_override;  // defaults to the evaluation-wide weights
};

struct PolicyEval {
  std::string policy_name;
  std::array<MeasureStat, kNumMeasures> by_measure;  // over fold-level means
  double matched_per_repeat = 0.0;  // exposures scored per repeat, averaged
};

struct EvalReport {
  int repeats = 0;
  int folds = 0;
  std::uint64_t seed = 0;
  double w1 = 0.4;
  // Held-out scoring keeps exposures whose logged action equals the policy's
  // choice; logging is uniform, which makes that subset unbiased.
  std::string scoring = "direct-match-on-logged-action";
  std::vector<PolicyEval> policies;
};

// Repeated k-fold evaluation at the session level. The `random` and
// `no_assist` baselines are always included; pass a catalog when fixed-kind
// baselines need action kinds (without one they score no questions).
EvalReport offline_evaluate(const OutcomeTable& table,
                            std::vector<PolicyPlan> plans,
                            const outcomes::RewardWeights& weights,
                            int repeats, int folds, std::uint64_t seed,
                            const Catalog* catalog = nullptr);

std::vector<std::pair<double, EvalReport>> pareto_sweep(
    const OutcomeTable& table, const std::vector<double>& w1_grid, int repeats,
    int folds, std::uint64_t seed, const Catalog* catalog = nullptr);

double tune_p_threshold(const OutcomeTable& table,
                        const outcomes::RewardWeights& weights,
                        const std::vector<double>& grid, Measure measure,
                        int repeats, int folds, std::uint64_t seed,
                        const Catalog* catalog = nullptr);

// CSV layouts pinned by golden tests: question_id, action_id, n, then
// measure/mean/halfwidth triples.
void write_effects_csv(std::ostream& out,
                       const std::vector<QuestionEffectSummary>& summaries);
void write_eval_csv(std::ostream& out, const EvalReport& report);
void write_pareto_csv(std::ostream& out,
                      const std::vector<std::pair<double, EvalReport>>& sweep);

}  // namespace tutorkit::mab
