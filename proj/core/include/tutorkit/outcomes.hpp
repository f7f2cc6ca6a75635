#pragma once

#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "tutorkit/domain.hpp"
#include "tutorkit/ingest.hpp"

namespace tutorkit::outcomes {

struct RewardWeights {
  double w1 = 0.4;  // weight on reattempt correctness; 1 - w1 goes to ability
};

struct OutcomeConfig {
  RewardWeights weights;
  // Whether a corrected reattempt counts toward the ten-correct completion.
  bool count_reattempts_toward_success = true;
  int success_threshold = 10;
  double response_time_cap_s = 60.0;
};

// Per-exposure learning outcomes. Future-window measures are missing when the
// focal question closes the session; confidence is missing unless reported.
struct OutcomeVector {
  double reattempt_correct = 0.0;  // {0,1}
  double student_ability = 0.0;    // end-of-session estimate from first attempts
  double session_success = 0.0;    // {0,1}
  std::optional<double> future_correct_rate;
  std::optional<double> next_question_correct;
  std::optional<double> future_response_time_s;
  std::optional<int> confidence;
  double reward = 0.0;
};

class FocalNotAssistedError : public std::runtime_error {
 public:
  explicit FocalNotAssistedError(const std::string& what) : std::runtime_error(what) {}
};

using ItemMap = std::unordered_map<QuestionId, IrtItem>;

ItemMap item_map(const Catalog& catalog);

double combined_reward(double reattempt, double ability, const RewardWeights& w);

// Ability over all first attempts in the session; independent of the focal
// exposure, so callers iterating one session's exposures should compute it
// once and use the precomputed overload below.
double session_ability(const PracticeSession& session, const ItemMap& items);

OutcomeVector compute_outcomes(const PracticeSession& session, int focal_index,
                               const ItemMap& items, const OutcomeConfig& cfg);
OutcomeVector compute_outcomes(const PracticeSession& session, int focal_index,
                               double precomputed_ability, const OutcomeConfig& cfg);

}  // namespace tutorkit::outcomes
