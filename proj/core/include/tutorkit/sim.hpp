#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tutorkit/causal.hpp"
#include "tutorkit/context.hpp"
#include "tutorkit/domain.hpp"
#include "tutorkit/ingest.hpp"
#include "tutorkit/mab.hpp"

namespace tutorkit::sim {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class EmptyConceptError : public std::runtime_error {
 public:
  explicit EmptyConceptError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownActionError : public std::runtime_error {
 public:
  explicit UnknownActionError(const std::string& what) : std::runtime_error(what) {}
};

enum class Scenario { null_effect, homogeneous, heterogeneous_linear, sign_changing };
const char* to_string(Scenario s);
Scenario scenario_from_string(const std::string& s);

struct SimConfig {
  int n_students = 500;
  int n_concepts = 8;
  int n_questions_per_concept = 15;
  int n_actions_per_question = 5;  // includes the no-assistance arm
  Scenario scenario = Scenario::null_effect;

  // Second attempts succeed at base + uplift(action, x), clamped [0.01, 0.99].
  double base_second_attempt = 0.3;
  // homogeneous: assisting actions get a permutation of the ladder
  // {uplift_max - j * uplift_step}; no-assistance stays at zero.
  double uplift_max = 0.15;
  double uplift_step = 0.05;
  // heterogeneous_linear: uplift = hte_base + hte_slope * stud_ability on a
  // carrier fraction of questions; the rest stay null.
  double hte_base = 0.1;
  double hte_slope = 0.5;
  double hte_fraction = 1.0;
  // sign_changing: uplift = sign_slope * stud_ability, zero intercept.
  double sign_slope = 0.4;

  // A tradeoff question's weakest assisting action additionally lifts later
  // first attempts (decaying, half-life 3 questions).
  double transfer_uplift = 0.0;
  double tradeoff_fraction = 0.0;

  double hint_propensity = 0.1;
  double dropout_rate = 0.1;      // sessions abandoned after 1-4 questions
  double repeat_rate = 0.1;       // sessions revisiting a practiced concept_key
  double difficulty_shift = -0.35;  // mean of item difficulty b
  double confidence_report_rate = 0.5;
  double teacher_assigned_rate = 0.3;
  double weekend_rate = 0.25;
  int success_threshold = 10;
  double rt_median_s = 12.0;
  double rt_shape = 0.5;
  double assist_view_median_s = 8.0;
  double assist_view_shape = 0.6;
};

struct ActionEffectSpec {
  ActionId action_id;
  double base_uplift = 0.0;
  // Linear terms over decision-time context; missing features contribute 0.
  std::array<double, context::kNumFeatures> slope{};
  double transfer_uplift = 0.0;

  double uplift(const context::ContextVector& x) const {
    double u = base_uplift;
    for (int f = 0; f < context::kNumFeatures; ++f)
      if (x.present[f]) u += slope[f] * x.value[f];
    return u;
  }
};

struct StudentProfile {
  StudentId student_id;
  double true_theta = 0.0;
  double base_second_attempt_rate = 0.3;
  double rt_log_median = 0.0;
  double rt_shape = 0.5;
  double hint_propensity = 0.1;
};

struct World {
  SimConfig config;
  std::uint64_t seed = 0;
  std::vector<ConceptId> concepts;
  std::vector<Question> questions;  // grouped by concept_key, generation order
  std::vector<AssistanceAction> actions;
  std::map<ConceptId, std::vector<int>> concept_questions;  // indices
  std::map<ActionId, ActionEffectSpec> effects;
  std::vector<StudentProfile> students;

  Catalog catalog() const;
  const Question& question(const QuestionId& id) const;
};

// Deterministic in (config, seed). Items: a ~ LogNormal(0, 0.25),
// b ~ N(difficulty_shift, 1), c = 0.2 on choice types; abilities ~ N(0, 1).
World generate_world(const SimConfig& config, std::uint64_t seed);

// What a policy sees when an incorrect first attempt needs an action.
struct DecisionQuery {
  const SessionId& session_id;
  const Question& question;
  const std::vector<ActionId>& actions;  // sorted
  const context::ContextVector& x;
};
using PolicyFn = std::function<ActionId(const DecisionQuery&)>;

// Uniform over the sorted action set, seeded by (session, question) so a
// replay through the serving layer reproduces the same draw.
PolicyFn uniform_random_policy();
// Always the action of this kind when offered, else the no-assistance arm.
PolicyFn fixed_kind_policy(const World& world, AssistKind kind);
// Trained bandit entries; fallback_random entries and unknown questions fall
// back to the uniform rule.
PolicyFn mab_policy_fn(mab::MabPolicy policy);
// Per-question contextual rules with a fallback for uncovered questions.
PolicyFn contextual_policy_fn(std::map<QuestionId, causal::ContextualPolicy> rules,
                              PolicyFn fallback);

struct SessionSetup {
  SessionId session_id;
  std::int64_t start_ts = 0;
  int attempt_index = 1;
  bool teacher_assigned = false;
  bool started_on_weekend = false;
  std::uint64_t seed = 0;
  int abandon_after = 0;  // 0 runs to completion
};

// Per-decision ground truth kept out of the emitted logs.
struct SessionTrace {
  struct Decision {
    int record_index = 0;
    context::ContextVector x;
    ActionId action;
    double p_second = 0.0;
  };
  std::vector<Decision> decisions;
};

// One practice session: adaptive question selection at the running ability
// estimate, 3PL first attempts, policy-chosen assistance on misses, second
// attempts at base + uplift, stop at success_threshold corrects, pool
// exhaustion, or abandonment.
PracticeSession simulate_session(const World& world, const StudentProfile& student,
                                 const ConceptId& concept_key, const PolicyFn& policy,
                                 std::span<const PracticeSession* const> history,
                                 const SessionSetup& setup,
                                 SessionTrace* trace = nullptr);
// History-free convenience form.
PracticeSession simulate_session(const World& world, const StudentProfile& student,
                                 const ConceptId& concept_key, const PolicyFn& policy,
                                 std::uint64_t seed);

// Analytic effect of showing this action versus no assistance, at context x;
// clamp-adjusted. Only the reattempt outcome has a closed form.
double true_cate(const World& world, const ActionId& action,
                 const context::ContextVector& x,
                 mab::Measure outcome = mab::Measure::reattempt_correct);

struct PolicyMixEntry {
  std::string policy_id;
  double weight = 0.0;
  PolicyFn decide;
};

struct ExperimentResult {
  std::vector<PracticeSession> sessions;  // generation order
  std::map<SessionId, std::string> assignment;
};

// n_sessions sessions with hash-bucketed per-session policy assignment;
// students pick fresh concepts except for a repeat_rate share of revisits.
// Deterministic in (world, mix, n_sessions, seed).
ExperimentResult run_experiment(const World& world,
                                const std::vector<PolicyMixEntry>& mix,
                                int n_sessions, std::uint64_t seed);

}  // namespace tutorkit::sim
