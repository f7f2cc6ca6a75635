#include "tutorkit/outcomes.hpp"

#include <algorithm>
#include <vector>

#include "tutorkit/irt.hpp"

namespace tutorkit::outcomes {

ItemMap item_map(const Catalog& catalog) {
  ItemMap out;
  for (const auto& q : catalog.questions) out[q.id] = q.item;
  return out;
}

double combined_reward(double reattempt, double ability, const RewardWeights& w) {
  return w.w1 * reattempt + (1.0 - w.w1) * ability;
}

double session_ability(const PracticeSession& session, const ItemMap& items) {
  std::vector<irt::Response> responses;
  responses.reserve(session.records.size());
  for (const auto& r : session.records) {
    auto it = items.find(r.question_id);
    if (it == items.end()) {
      throw std::runtime_error("no item parameters for question '" + r.question_id + "'");
    }
    responses.push_back({it->second, r.first_correct});
  }
  return irt::estimate_ability(responses).theta;
}

OutcomeVector compute_outcomes(const PracticeSession& session, int focal_index,
                               const ItemMap& items, const OutcomeConfig& cfg) {
  return compute_outcomes(session, focal_index, session_ability(session, items), cfg);
}

OutcomeVector compute_outcomes(const PracticeSession& session, int focal_index,
                               double precomputed_ability, const OutcomeConfig& cfg) {
  if (focal_index < 0 || focal_index >= static_cast<int>(session.records.size())) {
    throw std::out_of_range("focal index outside session");
  }
  const InteractionRecord& focal = session.records[focal_index];
  if (!focal.shown_action_id) {
    throw FocalNotAssistedError("record " + std::to_string(focal.position) +
                                " of session '" + session.session_id +
                                "' has no assistance exposure");
  }

  OutcomeVector out;
  out.reattempt_correct = focal.second_correct.value_or(false) ? 1.0 : 0.0;
  out.student_ability = precomputed_ability;

  int correct_count = 0;
  for (const auto& r : session.records) {
    const bool corrected = cfg.count_reattempts_toward_success &&
                           r.second_correct.value_or(false);
    if (r.first_correct || corrected) ++correct_count;
  }
  out.session_success = correct_count >= cfg.success_threshold ? 1.0 : 0.0;

  const int n = static_cast<int>(session.records.size());
  int future_n = 0, future_correct = 0;
  double future_rt_sum = 0.0;
  for (int i = focal_index + 1; i < n; ++i) {
    const auto& r = session.records[i];
    ++future_n;
    future_correct += r.first_correct ? 1 : 0;
    future_rt_sum += std::min(r.first_response_time_s, cfg.response_time_cap_s);
  }
  if (future_n > 0) {
    out.future_correct_rate = static_cast<double>(future_correct) / future_n;
    out.future_response_time_s = future_rt_sum / future_n;
    out.next_question_correct = session.records[focal_index + 1].first_correct ? 1.0 : 0.0;
  }
  out.confidence = session.confidence_end;
  out.reward = combined_reward(out.reattempt_correct, out.student_ability, cfg.weights);
  return out;
}

}  // namespace tutorkit::outcomes
