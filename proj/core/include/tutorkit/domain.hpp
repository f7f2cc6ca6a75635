#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tutorkit {

// Identifiers are opaque strings so platform IDs and synthetic IDs share one
// code path.
using ActionId = std::string;
using QuestionId = std::string;
using SessionId = std::string;
using StudentId = std::string;
using ConceptId = std::string;

enum class QuestionType {
  multiple_choice,
  select_all,
  fill_blank,
  short_answer,
  true_false,
};

enum class AssistKind {
  hint,
  paragraph,
  vocabulary,
  remove_distractor,
  first_letter,
  no_assistance,
};

const char* to_string(QuestionType t);
const char* to_string(AssistKind k);
QuestionType question_type_from_string(const std::string& s);
AssistKind assist_kind_from_string(const std::string& s);

// Three-parameter logistic item: discrimination a > 0, difficulty b,
// guessing floor 0 <= c < 1.
struct IrtItem {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
};

struct Question {
  QuestionId id;
  ConceptId concept_id;
  QuestionType qtype = QuestionType::multiple_choice;
  IrtItem item;
  std::vector<ActionId> action_ids;  // the candidate assistance set A_q
};

struct AssistanceAction {
  ActionId id;
  QuestionId question_id;
  AssistKind kind = AssistKind::hint;
  std::string content;  // may be empty for no_assistance
};

// One answered practice question: first attempt, optional assistance
// exposure and reattempt.
struct InteractionRecord {
  SessionId session_id;
  StudentId student_id;
  QuestionId question_id;
  int position = 1;  // 1-based index within the session
  bool hint_requested_before_first = false;
  bool first_correct = false;
  double first_response_time_s = 0.0;
  std::optional<ActionId> shown_action_id;  // absent when first_correct or true_false
  std::optional<bool> second_correct;
  std::optional<double> second_response_time_s;
  std::optional<double> assist_view_time_s;
  std::int64_t timestamp = 0;  // UTC epoch seconds
};

struct PracticeSession {
  SessionId session_id;
  StudentId student_id;
  ConceptId concept_id;
  std::vector<InteractionRecord> records;
  std::optional<int> confidence_end;  // {1,2,3}, self-reported at session end
  bool teacher_assigned = false;
  bool started_on_weekend = false;
  int attempt_index_for_concept = 1;  // 1 = first attempt at this concept
};

enum class ValidationCode {
  duplicate_question,
  order_violation,
  orphan_second_attempt,
  assistance_on_correct,
  inconsistent_session_field,
  bad_field_value,
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationCode code, std::string session_id, int position,
                  const std::string& detail)
      : std::runtime_error("session '" + session_id + "' record " +
                           std::to_string(position) + ": " + detail),
        code_(code),
        session_id_(std::move(session_id)),
        position_(position) {}

  ValidationCode code() const { return code_; }
  const std::string& session_id() const { return session_id_; }
  int position() const { return position_; }

 private:
  ValidationCode code_;
  std::string session_id_;
  int position_;
};

// Checks every session-level invariant and throws ValidationError naming the
// first violation and its record position. Returns the session unchanged.
const PracticeSession& validate_session(const PracticeSession& session);

// Question/action catalog invariants (action kinds legal for the question
// type, true-false questions carry no actions, no duplicate ids).
void validate_question(const Question& q);
void validate_action(const AssistanceAction& a, const Question& owner);

}  // namespace tutorkit
