#include "tutorkit/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tutorkit {

using nlohmann::json;

const Question* Catalog::find_question(const QuestionId& id) const {
  auto it = question_index_.find(id);
  return it == question_index_.end() ? nullptr : &questions[it->second];
}

const AssistanceAction* Catalog::find_action(const ActionId& id) const {
  auto it = action_index_.find(id);
  return it == action_index_.end() ? nullptr : &actions[it->second];
}

void Catalog::rebuild_index() {
  question_index_.clear();
  action_index_.clear();
  for (size_t i = 0; i < questions.size(); ++i) question_index_[questions[i].id] = i;
  for (size_t i = 0; i < actions.size(); ++i) action_index_[actions[i].id] = i;
}

namespace {

const char* const kLogKeys[] = {
    "session_id",  "student_id",     "concept_id", "question_id",
    "position",    "hint_requested", "first_correct", "first_rt_s",
    "shown_action_id", "second_correct", "second_rt_s", "assist_view_s",
    "ts",          "attempt_index",  "assigned",   "weekend",
    "confidence_end"};

json require_field(const json& obj, const char* key, int line) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(line, std::string("missing field \"") + key + "\"");
  return *it;
}

template <typename T>
T field_as(const json& obj, const char* key, int line) {
  const json v = require_field(obj, key, line);
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ParseError(line, std::string("field \"") + key + "\" has the wrong type");
  }
}

template <typename T>
std::optional<T> nullable_as(const json& obj, const char* key, int line) {
  const json v = require_field(obj, key, line);
  if (v.is_null()) return std::nullopt;
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ParseError(line, std::string("field \"") + key + "\" has the wrong type");
  }
}

struct ParsedLine {
  InteractionRecord record;
  ConceptId concept_id;
  int attempt_index = 1;
  bool assigned = false;
  bool weekend = false;
  std::optional<int> confidence_end;
};

ParsedLine parse_line(const std::string& text, int line) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(line, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ParseError(line, "record is not an object");
  for (const char* key : kLogKeys) require_field(obj, key, line);

  ParsedLine out;
  auto& r = out.record;
  r.session_id = field_as<std::string>(obj, "session_id", line);
  r.student_id = field_as<std::string>(obj, "student_id", line);
  r.question_id = field_as<std::string>(obj, "question_id", line);
  r.position = field_as<int>(obj, "position", line);
  r.hint_requested_before_first = field_as<bool>(obj, "hint_requested", line);
  r.first_correct = field_as<bool>(obj, "first_correct", line);
  r.first_response_time_s = field_as<double>(obj, "first_rt_s", line);
  r.shown_action_id = nullable_as<std::string>(obj, "shown_action_id", line);
  r.second_correct = nullable_as<bool>(obj, "second_correct", line);
  r.second_response_time_s = nullable_as<double>(obj, "second_rt_s", line);
  r.assist_view_time_s = nullable_as<double>(obj, "assist_view_s", line);
  r.timestamp = field_as<std::int64_t>(obj, "ts", line);
  out.concept_id = field_as<std::string>(obj, "concept_id", line);
  out.attempt_index = field_as<int>(obj, "attempt_index", line);
  out.assigned = field_as<bool>(obj, "assigned", line);
  out.weekend = field_as<bool>(obj, "weekend", line);
  out.confidence_end = nullable_as<int>(obj, "confidence_end", line);
  return out;
}

json record_to_json(const PracticeSession& s, const InteractionRecord& r) {
  json obj;
  obj["session_id"] = r.session_id;
  obj["student_id"] = r.student_id;
  obj["concept_id"] = s.concept_id;
  obj["question_id"] = r.question_id;
  obj["position"] = r.position;
  obj["hint_requested"] = r.hint_requested_before_first;
  obj["first_correct"] = r.first_correct;
  obj["first_rt_s"] = r.first_response_time_s;
  obj["shown_action_id"] = r.shown_action_id ? json(*r.shown_action_id) : json(nullptr);
  obj["second_correct"] = r.second_correct ? json(*r.second_correct) : json(nullptr);
  obj["second_rt_s"] = r.second_response_time_s ? json(*r.second_response_time_s) : json(nullptr);
  obj["assist_view_s"] = r.assist_view_time_s ? json(*r.assist_view_time_s) : json(nullptr);
  obj["ts"] = r.timestamp;
  obj["attempt_index"] = s.attempt_index_for_concept;
  obj["assigned"] = s.teacher_assigned;
  obj["weekend"] = s.started_on_weekend;
  obj["confidence_end"] = s.confidence_end ? json(*s.confidence_end) : json(nullptr);
  return obj;
}

}  // namespace

std::vector<PracticeSession> parse_log_stream(std::istream& input) {
  std::vector<PracticeSession> sessions;
  std::unordered_map<std::string, size_t> session_index;

  std::string text;
  int line = 0;
  while (std::getline(input, text)) {
    ++line;
    if (text.empty()) continue;
    ParsedLine parsed = parse_line(text, line);
    const auto& sid = parsed.record.session_id;
    auto [it, inserted] = session_index.emplace(sid, sessions.size());
    if (inserted) {
      PracticeSession s;
      s.session_id = sid;
      s.student_id = parsed.record.student_id;
      s.concept_id = parsed.concept_id;
      s.attempt_index_for_concept = parsed.attempt_index;
      s.teacher_assigned = parsed.assigned;
      s.started_on_weekend = parsed.weekend;
      s.confidence_end = parsed.confidence_end;
      sessions.push_back(std::move(s));
    }
    PracticeSession& s = sessions[it->second];
    if (s.student_id != parsed.record.student_id || s.concept_id != parsed.concept_id ||
        s.attempt_index_for_concept != parsed.attempt_index ||
        s.teacher_assigned != parsed.assigned ||
        s.started_on_weekend != parsed.weekend ||
        s.confidence_end != parsed.confidence_end) {
      throw ValidationError(ValidationCode::inconsistent_session_field, sid,
                            parsed.record.position,
                            "session-level fields disagree across lines");
    }
    s.records.push_back(std::move(parsed.record));
  }

  for (auto& s : sessions) {
    std::stable_sort(s.records.begin(), s.records.end(),
                     [](const auto& a, const auto& b) { return a.position < b.position; });
    validate_session(s);
  }
  return sessions;
}

std::vector<PracticeSession> load_log_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open log file '" + path + "'");
  return parse_log_stream(in);
}

void write_log_stream(std::ostream& out, const std::vector<PracticeSession>& sessions) {
  for (const auto& s : sessions) {
    for (const auto& r : s.records) out << record_to_json(s, r).dump() << '\n';
  }
}

void write_log_file(const std::string& path, const std::vector<PracticeSession>& sessions) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_log_stream(out, sessions);
}

FilteredDataset preprocess(std::vector<PracticeSession> sessions,
                           const PreprocessConfig& cfg, const Catalog* catalog) {
  if (cfg.min_questions_per_session < 1 || cfg.min_samples_per_action < 1) {
    throw std::invalid_argument("preprocess minimums must be >= 1");
  }
  FilteredDataset out;
  out.config = cfg;
  out.filter_report.input_sessions = static_cast<int>(sessions.size());
  out.history_sessions = sessions;

  for (auto& s : sessions) {
    if (static_cast<int>(s.records.size()) < cfg.min_questions_per_session) {
      ++out.filter_report.dropped_short_sessions;
      continue;
    }
    if (cfg.first_attempt_only && s.attempt_index_for_concept > 1) {
      ++out.filter_report.dropped_repeat_sessions;
      continue;
    }
    out.sessions.push_back(std::move(s));
  }
  out.filter_report.kept_sessions = static_cast<int>(out.sessions.size());

  for (int si = 0; si < static_cast<int>(out.sessions.size()); ++si) {
    const auto& s = out.sessions[si];
    for (int ri = 0; ri < static_cast<int>(s.records.size()); ++ri) {
      const auto& r = s.records[ri];
      if (!r.shown_action_id) continue;
      if (r.hint_requested_before_first) {
        ++out.filter_report.excluded_hint_exposures;
        continue;
      }
      out.exposure_index[r.question_id].push_back({si, ri});
      ++out.filter_report.exposure_count;
    }
  }

  // A_q: catalog sets when available, otherwise the actions observed in logs.
  for (const auto& [qid, refs] : out.exposure_index) {
    std::vector<ActionId> aq;
    if (catalog) {
      if (const Question* q = catalog->find_question(qid)) aq = q->action_ids;
    }
    if (aq.empty()) {
      std::set<ActionId> seen;
      for (const auto& ref : refs) {
        seen.insert(*out.sessions[ref.session_index].records[ref.record_index].shown_action_id);
      }
      aq.assign(seen.begin(), seen.end());
    }
    std::sort(aq.begin(), aq.end());
    out.action_sets[qid] = std::move(aq);
  }

  for (const auto& [qid, aq] : out.action_sets) {
    std::map<ActionId, int> counts;
    for (const auto& ref : out.exposure_index[qid]) {
      ++counts[*out.sessions[ref.session_index].records[ref.record_index].shown_action_id];
    }
    bool eligible = !aq.empty();
    for (const auto& a : aq) {
      auto it = counts.find(a);
      if (it == counts.end() || it->second < cfg.min_samples_per_action) {
        eligible = false;
        break;
      }
    }
    if (eligible) {
      out.eligible_questions.insert(qid);
    } else {
      ++out.filter_report.ineligible_questions;
    }
  }
  return out;
}

Catalog load_catalog(const std::string& items_path, const std::string& actions_path) {
  Catalog cat;
  std::ifstream items(items_path);
  if (!items) throw std::runtime_error("cannot open items file '" + items_path + "'");
  std::string text;
  int line = 0;
  while (std::getline(items, text)) {
    ++line;
    if (text.empty()) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(line, std::string("invalid JSON in items file: ") + e.what());
    }
    Question q;
    q.id = field_as<std::string>(obj, "question_id", line);
    q.concept_id = field_as<std::string>(obj, "concept_id", line);
    q.qtype = question_type_from_string(field_as<std::string>(obj, "qtype", line));
    q.item.a = field_as<double>(obj, "a", line);
    q.item.b = field_as<double>(obj, "b", line);
    q.item.c = field_as<double>(obj, "c", line);
    cat.questions.push_back(std::move(q));
  }

  std::ifstream actions(actions_path);
  if (!actions) throw std::runtime_error("cannot open actions file '" + actions_path + "'");
  line = 0;
  while (std::getline(actions, text)) {
    ++line;
    if (text.empty()) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(line, std::string("invalid JSON in actions file: ") + e.what());
    }
    AssistanceAction a;
    a.id = field_as<std::string>(obj, "action_id", line);
    a.question_id = field_as<std::string>(obj, "question_id", line);
    a.kind = assist_kind_from_string(field_as<std::string>(obj, "kind", line));
    if (obj.contains("content") && obj["content"].is_string()) {
      a.content = obj["content"].get<std::string>();
    }
    cat.actions.push_back(std::move(a));
  }

  cat.rebuild_index();
  std::unordered_map<std::string, size_t> qpos;
  for (size_t i = 0; i < cat.questions.size(); ++i) qpos[cat.questions[i].id] = i;
  for (auto& q : cat.questions) q.action_ids.clear();
  for (const auto& a : cat.actions) {
    auto it = qpos.find(a.question_id);
    if (it != qpos.end()) cat.questions[it->second].action_ids.push_back(a.id);
  }
  for (auto& q : cat.questions) {
    std::sort(q.action_ids.begin(), q.action_ids.end());
    validate_question(q);
  }
  for (const auto& a : cat.actions) {
    const Question* owner = cat.find_question(a.question_id);
    if (!owner) {
      throw std::runtime_error("action '" + a.id + "' references unknown question '" +
                               a.question_id + "'");
    }
    validate_action(a, *owner);
  }
  return cat;
}

void write_catalog(const std::string& items_path, const std::string& actions_path,
                   const Catalog& catalog) {
  std::ofstream items(items_path);
  if (!items) throw std::runtime_error("cannot open '" + items_path + "' for writing");
  for (const auto& q : catalog.questions) {
    json obj;
    obj["question_id"] = q.id;
    obj["concept_id"] = q.concept_id;
    obj["qtype"] = to_string(q.qtype);
    obj["a"] = q.item.a;
    obj["b"] = q.item.b;
    obj["c"] = q.item.c;
    items << obj.dump() << '\n';
  }
  std::ofstream actions(actions_path);
  if (!actions) throw std::runtime_error("cannot open '" + actions_path + "' for writing");
  for (const auto& a : catalog.actions) {
    json obj;
    obj["action_id"] = a.id;
    obj["question_id"] = a.question_id;
    obj["kind"] = to_string(a.kind);
    if (!a.content.empty()) obj["content"] = a.content;
    actions << obj.dump() << '\n';
  }
}

}  // namespace tutorkit
