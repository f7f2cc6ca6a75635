#include "tutorkit/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "tutorkit/hash.hpp"
#include "tutorkit/irt.hpp"
#include "tutorkit/rng.hpp"

namespace tutorkit::sim {

namespace {

constexpr double kProbFloor = 0.01;
constexpr double kProbCeil = 0.99;
constexpr double kTransferHalfLife = 3.0;

double clamp_prob(double p) { return std::clamp(p, kProbFloor, kProbCeil); }

bool is_choice_type(QuestionType t) {
  return t == QuestionType::multiple_choice || t == QuestionType::select_all ||
         t == QuestionType::true_false;
}

std::string pad_id(const char* prefix, int value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%0*d", prefix, width, value);
  return buf;
}

outcomes::ItemMap world_items(const World& world) {
  outcomes::ItemMap items;
  items.reserve(world.questions.size());
  for (const auto& q : world.questions) items.emplace(q.id, q.item);
  return items;
}

}  // namespace

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::null_effect: return "null";
    case Scenario::homogeneous: return "homogeneous";
    case Scenario::heterogeneous_linear: return "heterogeneous_linear";
    case Scenario::sign_changing: return "sign_changing";
  }
  return "null";
}

Scenario scenario_from_string(const std::string& s) {
  if (s == "null") return Scenario::null_effect;
  if (s == "homogeneous") return Scenario::homogeneous;
  if (s == "heterogeneous_linear") return Scenario::heterogeneous_linear;
  if (s == "sign_changing") return Scenario::sign_changing;
  throw ConfigError("unknown scenario '" + s + "'");
}

Catalog World::catalog() const {
  Catalog c;
  c.questions = questions;
  c.actions = actions;
  c.rebuild_index();
  return c;
}

const Question& World::question(const QuestionId& id) const {
  auto it = std::find_if(questions.begin(), questions.end(),
                         [&](const Question& q) { return q.id == id; });
  if (it == questions.end()) throw ConfigError("unknown question '" + id + "'");
  return *it;
}

World generate_world(const SimConfig& config, std::uint64_t seed) {
  if (config.n_students <= 0 || config.n_concepts <= 0 ||
      config.n_questions_per_concept <= 0 || config.n_actions_per_question < 1)
    throw ConfigError("world counts must be positive");
  if (config.hte_fraction < 0 || config.hte_fraction > 1 ||
      config.tradeoff_fraction < 0 || config.tradeoff_fraction > 1)
    throw ConfigError("fractions must lie in [0, 1]");

  World world;
  world.config = config;
  world.seed = seed;
  Rng rng(Rng::derive(seed, 0x776f726c64ULL));

  // Choice-heavy mix keeps simulated first-attempt correctness near its
  // calibration window; one slot in eight is true-false.
  static constexpr QuestionType kTypeCycle[8] = {
      QuestionType::multiple_choice, QuestionType::fill_blank,
      QuestionType::select_all,      QuestionType::multiple_choice,
      QuestionType::short_answer,    QuestionType::multiple_choice,
      QuestionType::select_all,      QuestionType::true_false,
  };

  for (int ci = 0; ci < config.n_concepts; ++ci) {
    ConceptId concept_key = pad_id("c", ci + 1, 2);
    world.concepts.push_back(concept_key);
    auto& indices = world.concept_questions[concept_key];

    for (int qi = 0; qi < config.n_questions_per_concept; ++qi) {
      Question q;
      q.id = pad_id("q", ci + 1, 2) + "_" + pad_id("", qi + 1, 3);
      q.concept_id = concept_key;
      q.qtype = kTypeCycle[qi % 8];
      q.item.a = rng.next_lognormal(0.0, 0.25);
      q.item.b = rng.next_gaussian() + config.difficulty_shift;
      q.item.c = is_choice_type(q.qtype) ? 0.2 : 0.0;

      if (q.qtype != QuestionType::true_false) {
        const int k = config.n_actions_per_question;
        std::vector<AssistKind> pool = {AssistKind::hint, AssistKind::paragraph,
                                        AssistKind::vocabulary};
        if (q.qtype == QuestionType::multiple_choice ||
            q.qtype == QuestionType::select_all)
          pool.push_back(AssistKind::remove_distractor);
        else
          pool.push_back(AssistKind::first_letter);

        std::vector<ActionEffectSpec> specs(k);
        for (int j = 0; j < k; ++j) {
          AssistanceAction a;
          a.id = q.id + "_a" + std::to_string(j);
          a.question_id = q.id;
          a.kind = j == 0 ? AssistKind::no_assistance : pool[(j - 1) % pool.size()];
          a.content = j == 0 ? "" : std::string(to_string(a.kind)) + " for " + q.id;
          q.action_ids.push_back(a.id);
          world.actions.push_back(a);
          specs[j].action_id = a.id;
        }

        switch (config.scenario) {
          case Scenario::null_effect:
            break;
          case Scenario::homogeneous: {
            std::vector<double> ladder;
            for (int j = 0; j + 1 < k; ++j)
              ladder.push_back(std::max(0.0, config.uplift_max - j * config.uplift_step));
            for (int j = static_cast<int>(ladder.size()) - 1; j > 0; --j) {
              int m = static_cast<int>(rng.next_below(j + 1));
              std::swap(ladder[j], ladder[m]);
            }
            for (size_t j = 0; j < ladder.size(); ++j)
              specs[j + 1].base_uplift = ladder[j];
            break;
          }
          case Scenario::heterogeneous_linear: {
            if (rng.next_double() < config.hte_fraction) {
              for (int j = 1; j < k; ++j) {
                specs[j].base_uplift = config.hte_base;
                specs[j].slope[static_cast<int>(context::Feature::stud_ability)] =
                    config.hte_slope;
              }
            }
            break;
          }
          case Scenario::sign_changing:
            for (int j = 1; j < k; ++j)
              specs[j].slope[static_cast<int>(context::Feature::stud_ability)] =
                  config.sign_slope;
            break;
        }

        if (config.tradeoff_fraction > 0 && config.transfer_uplift > 0 && k > 1 &&
            rng.next_double() < config.tradeoff_fraction) {
          // The weakest assisting arm carries the delayed benefit, so the
          // immediate-reattempt ranking and the ability ranking disagree.
          int weakest = 1;
          for (int j = 2; j < k; ++j)
            if (specs[j].base_uplift < specs[weakest].base_uplift) weakest = j;
          specs[weakest].transfer_uplift = config.transfer_uplift;
        }

        for (auto& spec : specs) world.effects.emplace(spec.action_id, spec);
      }

      indices.push_back(static_cast<int>(world.questions.size()));
      world.questions.push_back(std::move(q));
    }
  }

  for (int si = 0; si < config.n_students; ++si) {
    StudentProfile s;
    s.student_id = pad_id("u", si + 1, 4);
    s.true_theta = rng.next_gaussian();
    s.base_second_attempt_rate = config.base_second_attempt;
    s.rt_log_median = std::log(config.rt_median_s);
    s.rt_shape = config.rt_shape;
    s.hint_propensity = config.hint_propensity;
    world.students.push_back(std::move(s));
  }
  return world;
}

PolicyFn uniform_random_policy() {
  return [](const DecisionQuery& q) -> ActionId {
    Rng rng(decision_seed(q.session_id, q.question.id));
    return q.actions[rng.next_below(q.actions.size())];
  };
}

PolicyFn fixed_kind_policy(const World& world, AssistKind kind) {
  auto choice = std::make_shared<std::unordered_map<QuestionId, ActionId>>();
  for (const auto& q : world.questions) {
    ActionId picked, fallback;
    for (const auto& a : world.actions) {
      if (a.question_id != q.id) continue;
      if (a.kind == kind && picked.empty()) picked = a.id;
      if (a.kind == AssistKind::no_assistance && fallback.empty()) fallback = a.id;
    }
    if (!picked.empty())
      (*choice)[q.id] = picked;
    else if (!fallback.empty())
      (*choice)[q.id] = fallback;
  }
  return [choice](const DecisionQuery& q) -> ActionId {
    auto it = choice->find(q.question.id);
    if (it != choice->end()) return it->second;
    Rng rng(decision_seed(q.session_id, q.question.id));
    return q.actions[rng.next_below(q.actions.size())];
  };
}

PolicyFn mab_policy_fn(mab::MabPolicy policy) {
  auto owned = std::make_shared<mab::MabPolicy>(std::move(policy));
  return [owned](const DecisionQuery& q) -> ActionId {
    auto it = owned->entries.find(q.question.id);
    if (it != owned->entries.end() &&
        it->second.objective != mab::Objective::fallback_random &&
        !it->second.action_id.empty() &&
        std::find(q.actions.begin(), q.actions.end(), it->second.action_id) !=
            q.actions.end()) {
      return it->second.action_id;
    }
    Rng rng(decision_seed(q.session_id, q.question.id));
    return q.actions[rng.next_below(q.actions.size())];
  };
}

PolicyFn contextual_policy_fn(std::map<QuestionId, causal::ContextualPolicy> rules,
                              PolicyFn fallback) {
  auto owned = std::make_shared<std::map<QuestionId, causal::ContextualPolicy>>(
      std::move(rules));
  return [owned, fallback = std::move(fallback)](const DecisionQuery& q) -> ActionId {
    auto it = owned->find(q.question.id);
    if (it != owned->end()) return it->second.decide(q.x);
    return fallback(q);
  };
}

PracticeSession simulate_session(const World& world, const StudentProfile& student,
                                 const ConceptId& concept_key, const PolicyFn& policy,
                                 std::span<const PracticeSession* const> history,
                                 const SessionSetup& setup, SessionTrace* trace) {
  auto pool_it = world.concept_questions.find(concept_key);
  if (pool_it == world.concept_questions.end() || pool_it->second.empty())
    throw EmptyConceptError("concept_key '" + concept_key + "' has no questions");

  std::vector<Question> pool;
  pool.reserve(pool_it->second.size());
  for (int idx : pool_it->second) pool.push_back(world.questions[idx]);

  std::unordered_map<ActionId, const AssistanceAction*> action_index;
  for (const auto& a : world.actions) action_index.emplace(a.id, &a);

  outcomes::ItemMap items = world_items(world);
  Rng rng(setup.seed);

  PracticeSession session;
  session.session_id = setup.session_id;
  session.student_id = student.student_id;
  session.concept_id = concept_key;
  session.teacher_assigned = setup.teacher_assigned;
  session.started_on_weekend = setup.started_on_weekend;
  session.attempt_index_for_concept = setup.attempt_index;

  std::unordered_set<QuestionId> answered;
  std::vector<irt::Response> responses;  // first attempts drive the estimate
  std::vector<std::pair<int, double>> transfers;  // (position shown, uplift)
  std::int64_t ts = setup.start_ts;
  int corrects = 0;

  while (true) {
    double theta_hat = irt::estimate_ability(responses).theta;
    auto next = irt::select_next_question(theta_hat, pool, answered);
    if (!next) break;
    const Question& q = *std::find_if(pool.begin(), pool.end(),
                                      [&](const Question& c) { return c.id == *next; });
    const int position = static_cast<int>(session.records.size()) + 1;

    double bump = 0.0;
    for (const auto& [shown_at, uplift] : transfers)
      bump += uplift * std::pow(0.5, (position - shown_at) / kTransferHalfLife);

    double p_first = irt::p_correct(student.true_theta, q.item);
    if (bump != 0.0) p_first = clamp_prob(p_first + bump);

    InteractionRecord rec;
    rec.session_id = session.session_id;
    rec.student_id = student.student_id;
    rec.question_id = q.id;
    rec.position = position;
    rec.hint_requested_before_first =
        !q.action_ids.empty() && rng.next_bernoulli(student.hint_propensity);
    rec.first_correct = rng.next_bernoulli(p_first);
    rec.first_response_time_s =
        rng.next_lognormal(student.rt_log_median, student.rt_shape);
    rec.timestamp = ts;
    ts += std::llround(rec.first_response_time_s) + 5;

    session.records.push_back(std::move(rec));
    InteractionRecord& stored = session.records.back();

    if (stored.first_correct) {
      corrects += 1;
    } else if (!q.action_ids.empty()) {
      // Decision point: the policy sees exactly what offline feature
      // construction will later recover from the logs.
      context::ContextVector x = context::compute_context(
          history, session, position - 1, items);
      std::vector<ActionId> sorted_actions = q.action_ids;
      std::sort(sorted_actions.begin(), sorted_actions.end());
      ActionId chosen = policy(DecisionQuery{session.session_id, q, sorted_actions, x});
      if (std::find(sorted_actions.begin(), sorted_actions.end(), chosen) ==
          sorted_actions.end())
        throw UnknownActionError("policy chose '" + chosen + "' outside the action set");

      auto spec_it = world.effects.find(chosen);
      if (spec_it == world.effects.end())
        throw UnknownActionError("no effect spec for action '" + chosen + "'");
      double p_second =
          clamp_prob(student.base_second_attempt_rate + spec_it->second.uplift(x));

      stored.shown_action_id = chosen;
      stored.second_correct = rng.next_bernoulli(p_second);
      stored.second_response_time_s =
          rng.next_lognormal(student.rt_log_median, student.rt_shape);
      const AssistanceAction* act = action_index.at(chosen);
      double view = 0.0;
      if (act->kind != AssistKind::no_assistance) {
        view = rng.next_lognormal(std::log(world.config.assist_view_median_s),
                                  world.config.assist_view_shape);
        stored.assist_view_time_s = view;
      }
      ts += std::llround(*stored.second_response_time_s + view);

      if (*stored.second_correct) corrects += 1;
      if (spec_it->second.transfer_uplift > 0)
        transfers.emplace_back(position, spec_it->second.transfer_uplift);
      if (trace)
        trace->decisions.push_back({position - 1, x, chosen, p_second});
    }

    responses.push_back({q.item, stored.first_correct});
    answered.insert(q.id);

    if (corrects >= world.config.success_threshold) break;
    if (setup.abandon_after > 0 &&
        static_cast<int>(session.records.size()) >= setup.abandon_after)
      break;
  }

  if (rng.next_bernoulli(world.config.confidence_report_rate))
    session.confidence_end = 1 + static_cast<int>(rng.next_below(3));
  return session;
}

PracticeSession simulate_session(const World& world, const StudentProfile& student,
                                 const ConceptId& concept_key, const PolicyFn& policy,
                                 std::uint64_t seed) {
  SessionSetup setup;
  setup.session_id = "s_" + std::to_string(seed);
  setup.start_ts = 1700000000;
  setup.seed = seed;
  return simulate_session(world, student, concept_key, policy, {}, setup, nullptr);
}

double true_cate(const World& world, const ActionId& action,
                 const context::ContextVector& x, mab::Measure outcome) {
  if (outcome != mab::Measure::reattempt_correct)
    throw ConfigError("true_cate has a closed form only for the reattempt outcome");
  auto it = world.effects.find(action);
  if (it == world.effects.end())
    throw UnknownActionError("no effect spec for action '" + action + "'");
  const double base = world.config.base_second_attempt;
  return clamp_prob(base + it->second.uplift(x)) - clamp_prob(base);
}

ExperimentResult run_experiment(const World& world,
                                const std::vector<PolicyMixEntry>& mix,
                                int n_sessions, std::uint64_t seed) {
  if (mix.empty()) throw ConfigError("policy mix is empty");
  double total = 0.0;
  std::vector<double> weights;
  for (const auto& entry : mix) {
    if (entry.weight <= 0) throw ConfigError("mix weights must be positive");
    if (!entry.decide) throw ConfigError("mix entry '" + entry.policy_id + "' has no rule");
    weights.push_back(entry.weight);
    total += entry.weight;
  }
  if (std::abs(total - 1.0) > 1e-6) throw ConfigError("mix weights must sum to 1");
  if (n_sessions < 0) throw ConfigError("n_sessions must be non-negative");
  if (world.students.empty() || world.concepts.empty())
    throw ConfigError("world has no students or concepts");

  ExperimentResult result;
  result.sessions.reserve(n_sessions);

  Rng setup_rng(Rng::derive(seed, 0x73657475ULL));
  std::vector<std::vector<int>> history_of(world.students.size());
  std::vector<std::unordered_map<ConceptId, int>> attempts(world.students.size());

  for (int i = 0; i < n_sessions; ++i) {
    const int si = static_cast<int>(setup_rng.next_below(world.students.size()));
    auto& counts = attempts[si];

    std::vector<ConceptId> practiced, fresh;
    for (const auto& c : world.concepts)
      (counts.count(c) ? practiced : fresh).push_back(c);
    const bool revisit = setup_rng.next_bernoulli(world.config.repeat_rate);
    const std::vector<ConceptId>& from =
        (revisit && !practiced.empty()) ? practiced
        : (!fresh.empty() ? fresh : world.concepts);
    const ConceptId concept_key = from[setup_rng.next_below(from.size())];

    SessionSetup setup;
    setup.session_id = pad_id("s", i, 6);
    setup.start_ts = 1700000000 + static_cast<std::int64_t>(i) * 3600;
    setup.attempt_index = ++counts[concept_key];
    setup.teacher_assigned = setup_rng.next_bernoulli(world.config.teacher_assigned_rate);
    setup.started_on_weekend = setup_rng.next_bernoulli(world.config.weekend_rate);
    setup.seed = Rng::derive(seed, 0x1000000ULL + static_cast<std::uint64_t>(i));
    if (setup_rng.next_bernoulli(world.config.dropout_rate))
      setup.abandon_after = 1 + static_cast<int>(setup_rng.next_below(4));

    const std::size_t mix_index =
        weighted_bucket_index(session_bucket(setup.session_id), weights);
    result.assignment[setup.session_id] = mix[mix_index].policy_id;

    std::vector<const PracticeSession*> history;
    history.reserve(history_of[si].size());
    for (int h : history_of[si]) history.push_back(&result.sessions[h]);

    result.sessions.push_back(simulate_session(world, world.students[si], concept_key,
                                               mix[mix_index].decide, history, setup,
                                               nullptr));
    history_of[si].push_back(i);
  }
  return result;
}

}  // namespace tutorkit::sim
