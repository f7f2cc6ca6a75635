#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tutorkit/domain.hpp"

namespace tutorkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Question and action catalog, loaded from items/actions files. Optional for
// ingestion (the observed actions then stand in for A_q) but required for
// anything that needs action kinds or IRT parameters.
struct Catalog {
  std::vector<Question> questions;
  std::vector<AssistanceAction> actions;

  const Question* find_question(const QuestionId& id) const;
  const AssistanceAction* find_action(const ActionId& id) const;
  void rebuild_index();

 private:
  std::unordered_map<std::string, size_t> question_index_;
  std::unordered_map<std::string, size_t> action_index_;
};

struct PreprocessConfig {
  int min_questions_per_session = 5;
  int min_samples_per_action = 100;
  bool first_attempt_only = true;
};

struct ExposureRef {
  int session_index = 0;  // into FilteredDataset::sessions
  int record_index = 0;
};

struct FilterReport {
  int input_sessions = 0;
  int kept_sessions = 0;
  int dropped_short_sessions = 0;   // fewer distinct questions than the minimum
  int dropped_repeat_sessions = 0;  // later attempt at an already-practiced concept
  int excluded_hint_exposures = 0;  // assistance preceded by a hint request
  int ineligible_questions = 0;     // some action short of min samples
  int exposure_count = 0;
  // Filter (i) counts distinct answered questions of every type, true-false
  // included; recorded here so reports state the convention.
  bool distinct_count_includes_true_false = true;
};

struct FilteredDataset {
  std::vector<PracticeSession> sessions;  // survivors of the session filters
  // Every validated input session, survivors included. Context features look
  // back over a student's full history, which the filters must not distort.
  std::vector<PracticeSession> history_sessions;
  std::map<QuestionId, std::vector<ExposureRef>> exposure_index;
  std::map<QuestionId, std::vector<ActionId>> action_sets;  // A_q per question
  std::set<QuestionId> eligible_questions;
  FilterReport filter_report;
  PreprocessConfig config;
};

// Newline-delimited JSON interaction records, grouped into validated
// sessions (ordered by position). Throws ParseError on malformed lines and
// propagates ValidationError.
std::vector<PracticeSession> parse_log_stream(std::istream& input);
std::vector<PracticeSession> load_log_file(const std::string& path);

// Inverse of parse_log_stream; emits one record object per line with the
// exact ingestion key set.
void write_log_stream(std::ostream& out, const std::vector<PracticeSession>& sessions);
void write_log_file(const std::string& path, const std::vector<PracticeSession>& sessions);

FilteredDataset preprocess(std::vector<PracticeSession> sessions,
                           const PreprocessConfig& cfg,
                           const Catalog* catalog = nullptr);

Catalog load_catalog(const std::string& items_path, const std::string& actions_path);
void write_catalog(const std::string& items_path, const std::string& actions_path,
                   const Catalog& catalog);

}  // namespace tutorkit
