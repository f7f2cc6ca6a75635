#include "tutorkit/domain.hpp"

#include <unordered_set>

namespace tutorkit {

const char* to_string(QuestionType t) {
  switch (t) {
    case QuestionType::multiple_choice: return "multiple_choice";
    case QuestionType::select_all: return "select_all";
    case QuestionType::fill_blank: return "fill_blank";
    case QuestionType::short_answer: return "short_answer";
    case QuestionType::true_false: return "true_false";
  }
  return "unknown";
}

const char* to_string(AssistKind k) {
  switch (k) {
    case AssistKind::hint: return "hint";
    case AssistKind::paragraph: return "paragraph";
    case AssistKind::vocabulary: return "vocabulary";
    case AssistKind::remove_distractor: return "remove_distractor";
    case AssistKind::first_letter: return "first_letter";
    case AssistKind::no_assistance: return "no_assistance";
  }
  return "unknown";
}

QuestionType question_type_from_string(const std::string& s) {
  if (s == "multiple_choice") return QuestionType::multiple_choice;
  if (s == "select_all") return QuestionType::select_all;
  if (s == "fill_blank") return QuestionType::fill_blank;
  if (s == "short_answer") return QuestionType::short_answer;
  if (s == "true_false") return QuestionType::true_false;
  throw std::invalid_argument("unknown question type '" + s + "'");
}

AssistKind assist_kind_from_string(const std::string& s) {
  if (s == "hint") return AssistKind::hint;
  if (s == "paragraph") return AssistKind::paragraph;
  if (s == "vocabulary") return AssistKind::vocabulary;
  if (s == "remove_distractor") return AssistKind::remove_distractor;
  if (s == "first_letter") return AssistKind::first_letter;
  if (s == "no_assistance") return AssistKind::no_assistance;
  throw std::invalid_argument("unknown assistance kind '" + s + "'");
}

const PracticeSession& validate_session(const PracticeSession& session) {
  if (session.session_id.empty() || session.student_id.empty()) {
    throw ValidationError(ValidationCode::bad_field_value, session.session_id, 0,
                          "missing session or student id");
  }
  if (session.confidence_end &&
      (*session.confidence_end < 1 || *session.confidence_end > 3)) {
    throw ValidationError(ValidationCode::bad_field_value, session.session_id, 0,
                          "confidence_end outside {1,2,3}");
  }
  if (session.attempt_index_for_concept < 1) {
    throw ValidationError(ValidationCode::bad_field_value, session.session_id, 0,
                          "attempt_index must be >= 1");
  }

  std::unordered_set<std::string> seen_questions;
  std::int64_t prev_ts = 0;
  int expected_position = 1;
  for (const auto& r : session.records) {
    if (r.session_id != session.session_id || r.student_id != session.student_id) {
      throw ValidationError(ValidationCode::inconsistent_session_field,
                            session.session_id, r.position,
                            "record ids disagree with session header");
    }
    if (r.position != expected_position) {
      throw ValidationError(ValidationCode::order_violation, session.session_id,
                            r.position,
                            "positions must run 1.." +
                                std::to_string(session.records.size()) +
                                " without gaps");
    }
    if (expected_position > 1 && r.timestamp < prev_ts) {
      throw ValidationError(ValidationCode::order_violation, session.session_id,
                            r.position, "timestamps decrease");
    }
    if (!seen_questions.insert(r.question_id).second) {
      throw ValidationError(ValidationCode::duplicate_question,
                            session.session_id, r.position,
                            "question '" + r.question_id + "' repeats");
    }
    if (r.first_correct && r.shown_action_id) {
      throw ValidationError(ValidationCode::assistance_on_correct,
                            session.session_id, r.position,
                            "assistance shown after a correct first attempt");
    }
    if (!r.shown_action_id) {
      if (r.second_correct || r.second_response_time_s || r.assist_view_time_s) {
        throw ValidationError(ValidationCode::orphan_second_attempt,
                              session.session_id, r.position,
                              "second-attempt fields without a shown action");
      }
    } else {
      if (!r.second_correct || !r.second_response_time_s) {
        throw ValidationError(ValidationCode::orphan_second_attempt,
                              session.session_id, r.position,
                              "shown action without recorded second attempt");
      }
    }
    if (r.first_response_time_s < 0.0 ||
        (r.second_response_time_s && *r.second_response_time_s < 0.0) ||
        (r.assist_view_time_s && *r.assist_view_time_s < 0.0)) {
      throw ValidationError(ValidationCode::bad_field_value, session.session_id,
                            r.position, "negative duration");
    }
    prev_ts = r.timestamp;
    ++expected_position;
  }
  return session;
}

void validate_question(const Question& q) {
  if (q.id.empty()) throw std::invalid_argument("question id empty");
  if (!(q.item.a > 0.0)) {
    throw std::invalid_argument("question '" + q.id + "': discrimination must be positive");
  }
  if (q.item.c < 0.0 || q.item.c >= 1.0) {
    throw std::invalid_argument("question '" + q.id + "': guessing floor outside [0,1)");
  }
  std::unordered_set<std::string> ids;
  for (const auto& a : q.action_ids) {
    if (!ids.insert(a).second) {
      throw std::invalid_argument("question '" + q.id + "': duplicate action '" + a + "'");
    }
  }
  if (q.qtype == QuestionType::true_false && !q.action_ids.empty()) {
    throw std::invalid_argument("question '" + q.id + "': true_false questions take no assistance");
  }
}

void validate_action(const AssistanceAction& a, const Question& owner) {
  if (a.id.empty()) throw std::invalid_argument("action id empty");
  if (a.question_id != owner.id) {
    throw std::invalid_argument("action '" + a.id + "' does not belong to question '" +
                                owner.id + "'");
  }
  if (a.kind == AssistKind::remove_distractor &&
      owner.qtype != QuestionType::multiple_choice &&
      owner.qtype != QuestionType::select_all) {
    throw std::invalid_argument("action '" + a.id + "': remove_distractor needs choices");
  }
  if (a.kind == AssistKind::first_letter &&
      owner.qtype != QuestionType::fill_blank &&
      owner.qtype != QuestionType::short_answer) {
    throw std::invalid_argument("action '" + a.id + "': first_letter needs a typed answer");
  }
}

}  // namespace tutorkit
