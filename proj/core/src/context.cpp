#include "tutorkit/context.hpp"

#include <algorithm>

#include "tutorkit/irt.hpp"
#include "tutorkit/stats.hpp"

namespace tutorkit::context {

const std::array<const char*, kNumFeatures> kFeatureNames = {
    "stud_ability",    "resp_time",        "prev_resp_cor",  "quest_num",
    "cor_rate",        "assigned",         "confidence",     "weekend",
    "num_sess_total",  "num_quest_total",  "num_assist_total",
    "avg_quest_num",   "avg_sess_succ",    "avg_1st_cor",    "avg_2nd_cor",
    "avg_1st_assists", "avg_2nd_assists",  "med_1st_resp_time",
    "med_2nd_resp_time", "med_assist_time"};

namespace {

bool session_succeeded(const PracticeSession& s) {
  int correct = 0;
  for (const auto& r : s.records) {
    if (r.first_correct || r.second_correct.value_or(false)) ++correct;
  }
  return correct >= 10;
}

}  // namespace

ContextVector compute_context(std::span<const PracticeSession* const> history,
                              const PracticeSession& session, int focal_index,
                              const outcomes::ItemMap& items) {
  if (focal_index < 0 || focal_index >= static_cast<int>(session.records.size())) {
    throw std::out_of_range("focal index outside session");
  }
  ContextVector x;
  const InteractionRecord& focal = session.records[focal_index];

  // Within-session block. The focal first attempt has happened (the decision
  // point is right after an incorrect first response), so its response time
  // and position are known; correctness aggregates stop before it.
  x.set(Feature::resp_time, focal.first_response_time_s);
  x.set(Feature::quest_num, static_cast<double>(focal.position));
  {
    // Entering ability is defined even before the first response: it is the
    // prior mean, exactly what question selection uses at that point.
    std::vector<irt::Response> responses;
    responses.reserve(focal_index);
    int correct = 0;
    for (int i = 0; i < focal_index; ++i) {
      const auto& r = session.records[i];
      auto it = items.find(r.question_id);
      if (it == items.end()) {
        throw std::runtime_error("no item parameters for question '" + r.question_id + "'");
      }
      responses.push_back({it->second, r.first_correct});
      correct += r.first_correct ? 1 : 0;
    }
    x.set(Feature::stud_ability, irt::estimate_ability(responses).theta);
    if (focal_index > 0) {
      x.set(Feature::cor_rate, static_cast<double>(correct) / focal_index);
      x.set(Feature::prev_resp_cor,
            session.records[focal_index - 1].first_correct ? 1.0 : 0.0);
    }
  }
  x.set(Feature::assigned, session.teacher_assigned ? 1.0 : 0.0);
  x.set(Feature::weekend, session.started_on_weekend ? 1.0 : 0.0);

  // Latest confidence report from an earlier session; the current session's
  // report arrives only at its end and must not leak in.
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    if ((*it)->confidence_end) {
      x.set(Feature::confidence, static_cast<double>(*(*it)->confidence_end));
      break;
    }
  }

  if (history.empty()) return x;

  int total_quest = 0, total_assist = 0, total_hint_requests = 0;
  int first_correct = 0, second_n = 0, second_correct = 0, succ = 0;
  std::vector<double> rt1, rt2, rta;
  for (const PracticeSession* past : history) {
    total_quest += static_cast<int>(past->records.size());
    succ += session_succeeded(*past) ? 1 : 0;
    for (const auto& r : past->records) {
      first_correct += r.first_correct ? 1 : 0;
      rt1.push_back(r.first_response_time_s);
      if (r.hint_requested_before_first) ++total_hint_requests;
      if (r.shown_action_id) ++total_assist;
      if (r.second_correct) {
        ++second_n;
        second_correct += *r.second_correct ? 1 : 0;
      }
      if (r.second_response_time_s) rt2.push_back(*r.second_response_time_s);
      if (r.assist_view_time_s) rta.push_back(*r.assist_view_time_s);
    }
  }
  const double n_sess = static_cast<double>(history.size());
  x.set(Feature::num_sess_total, n_sess);
  x.set(Feature::num_quest_total, static_cast<double>(total_quest));
  x.set(Feature::num_assist_total, static_cast<double>(total_assist));
  x.set(Feature::avg_quest_num, total_quest / n_sess);
  x.set(Feature::avg_sess_succ, succ / n_sess);
  x.set(Feature::avg_1st_assists, total_hint_requests / n_sess);
  x.set(Feature::avg_2nd_assists, total_assist / n_sess);
  if (total_quest > 0) {
    x.set(Feature::avg_1st_cor, static_cast<double>(first_correct) / total_quest);
    x.set(Feature::med_1st_resp_time, stats::median(std::move(rt1)));
  }
  if (second_n > 0) {
    x.set(Feature::avg_2nd_cor, static_cast<double>(second_correct) / second_n);
  }
  if (!rt2.empty()) x.set(Feature::med_2nd_resp_time, stats::median(std::move(rt2)));
  if (!rta.empty()) x.set(Feature::med_assist_time, stats::median(std::move(rta)));
  return x;
}

HistoryIndex::HistoryIndex(std::span<const PracticeSession> all_sessions) {
  for (const auto& s : all_sessions) by_student_[s.student_id].push_back(&s);
  for (auto& [student, list] : by_student_) {
    std::sort(list.begin(), list.end(), [](const PracticeSession* a, const PracticeSession* b) {
      const std::int64_t ta = a->records.empty() ? 0 : a->records.front().timestamp;
      const std::int64_t tb = b->records.empty() ? 0 : b->records.front().timestamp;
      if (ta != tb) return ta < tb;
      return a->session_id < b->session_id;
    });
  }
}

std::span<const PracticeSession* const> HistoryIndex::before(
    const PracticeSession& s) const {
  auto it = by_student_.find(s.student_id);
  if (it == by_student_.end()) return {};
  const auto& list = it->second;
  const std::int64_t ts = s.records.empty() ? 0 : s.records.front().timestamp;
  // First session at or after this one's start (same tie-break as the sort).
  size_t end = 0;
  while (end < list.size()) {
    const PracticeSession* cand = list[end];
    const std::int64_t tc = cand->records.empty() ? 0 : cand->records.front().timestamp;
    if (tc > ts || (tc == ts && cand->session_id >= s.session_id)) break;
    ++end;
  }
  return {list.data(), end};
}

}  // namespace tutorkit::context
