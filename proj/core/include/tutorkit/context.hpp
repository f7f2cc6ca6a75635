#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "tutorkit/domain.hpp"
#include "tutorkit/outcomes.hpp"

namespace tutorkit::context {

// Student covariates available when an assistance decision is made. Order is
// load-bearing: models and serialized policies index features by position.
enum class Feature : int {
  stud_ability = 0,   // ability estimate entering the focal question (always present)
  resp_time,          // focal first-attempt response time
  prev_resp_cor,      // previous question answered correctly on first try
  quest_num,          // 1-based position of the focal question
  cor_rate,           // first-attempt correct rate earlier in this session
  assigned,           // teacher-assigned session
  confidence,         // latest self-report from an earlier session
  weekend,
  num_sess_total,     // prior sessions overall
  num_quest_total,
  num_assist_total,
  avg_quest_num,      // questions answered per prior session
  avg_sess_succ,
  avg_1st_cor,
  avg_2nd_cor,
  avg_1st_assists,    // hint requests per prior session
  avg_2nd_assists,    // assistance exposures per prior session
  med_1st_resp_time,
  med_2nd_resp_time,
  med_assist_time,
};

constexpr int kNumFeatures = 20;
extern const std::array<const char*, kNumFeatures> kFeatureNames;

// Missing features carry value 0 with presence 0; models receive both the
// value and the mask so "missing" stays distinguishable from a true zero.
struct ContextVector {
  std::array<double, kNumFeatures> value{};
  std::array<std::uint8_t, kNumFeatures> present{};

  double get(Feature f) const { return value[static_cast<int>(f)]; }
  bool has(Feature f) const { return present[static_cast<int>(f)] != 0; }
  void set(Feature f, double v) {
    value[static_cast<int>(f)] = v;
    present[static_cast<int>(f)] = 1;
  }
};

// Context for the assistance decision at session.records[focal_index].
// Within-session inputs stop at the focal first attempt; everything else
// aggregates the student's strictly earlier sessions. Computing on a session
// truncated at the focal record gives an identical vector, so offline
// feature construction matches what a live policy would have seen.
ContextVector compute_context(std::span<const PracticeSession* const> history,
                              const PracticeSession& session, int focal_index,
                              const outcomes::ItemMap& items);

// Chronological per-student session lookup (ordered by first-record
// timestamp, ties by session_id).
class HistoryIndex {
 public:
  HistoryIndex() = default;
  explicit HistoryIndex(std::span<const PracticeSession> all_sessions);

  // Sessions of the same student strictly before this one.
  std::span<const PracticeSession* const> before(const PracticeSession& s) const;

 private:
  std::unordered_map<StudentId, std::vector<const PracticeSession*>> by_student_;
};

}  // namespace tutorkit::context
