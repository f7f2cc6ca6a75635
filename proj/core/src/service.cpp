#include "tutorkit/service.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <json.hpp>

#include "tutorkit/hash.hpp"
#include "tutorkit/rng.hpp"

namespace tutorkit::service {

namespace {

using json = nlohmann::json;

const char* kind_name(PolicyEntry::Kind k) {
  switch (k) {
    case PolicyEntry::Kind::random: return "random";
    case PolicyEntry::Kind::fixed: return "fixed";
    case PolicyEntry::Kind::contextual: return "contextual";
  }
  return "random";
}

PolicyEntry::Kind kind_from_name(const std::string& s) {
  if (s == "random") return PolicyEntry::Kind::random;
  if (s == "fixed") return PolicyEntry::Kind::fixed;
  if (s == "contextual") return PolicyEntry::Kind::contextual;
  throw ParseError(0, "unknown policy entry kind '" + s + "'");
}

void validate_assignment(const AssignmentConfig& cfg) {
  if (cfg.entries.empty())
    throw std::invalid_argument("assignment config has no policies");
  double total = 0.0;
  for (const auto& [id, w] : cfg.entries) {
    if (id.empty()) throw std::invalid_argument("assignment entry without policy id");
    if (w <= 0.0) throw std::invalid_argument("assignment weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-6)
    throw std::invalid_argument("assignment weights must sum to 1");
}

ActionId draw_uniform(const SessionId& session, const QuestionId& question,
                      const std::vector<ActionId>& sorted_actions) {
  Rng rng(decision_seed(session, question));
  return sorted_actions[rng.next_below(sorted_actions.size())];
}

context::ContextVector context_from_json(const json& j) {
  context::ContextVector x;
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (int f = 0; f < context::kNumFeatures; ++f) {
      if (it.key() == context::kFeatureNames[f]) {
        x.value[f] = it.value().get<double>();
        x.present[f] = 1;
        known = true;
        break;
      }
    }
    if (!known) throw ParseError(0, "unknown context feature '" + it.key() + "'");
  }
  return x;
}

}  // namespace

std::string spec_to_json(const PolicySpecFile& spec) {
  json j;
  j["spec_version"] = spec.spec_version;
  j["policy_id"] = spec.policy_id;
  j["algorithm"] = spec.algorithm;
  j["implementation_version"] = spec.implementation_version;
  json concepts = json::object();
  for (const auto& [concept_key, questions] : spec.concepts) {
    json qmap = json::object();
    for (const auto& [qid, entry] : questions) {
      json e;
      e["kind"] = kind_name(entry.kind);
      switch (entry.kind) {
        case PolicyEntry::Kind::fixed:
          e["action_id"] = entry.action_id;
          break;
        case PolicyEntry::Kind::random:
          e["actions"] = entry.actions;
          break;
        case PolicyEntry::Kind::contextual:
          e["treat"] = entry.treat_action;
          e["control"] = entry.control_action;
          e["model"] = json::parse(causal::model_to_json(*entry.model));
          break;
      }
      qmap[qid] = std::move(e);
    }
    concepts[concept_key] = std::move(qmap);
  }
  j["concepts"] = std::move(concepts);
  return j.dump(2);
}

PolicySpecFile spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("invalid spec JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw ParseError(0, "spec root must be an object");
    const int version = j.at("spec_version").get<int>();
    if (version > kSpecVersion)
      throw VersionMismatchError("spec_version " + std::to_string(version) +
                                 " is newer than supported " +
                                 std::to_string(kSpecVersion));
    PolicySpecFile spec;
    spec.spec_version = version;
    spec.policy_id = j.at("policy_id").get<std::string>();
    spec.algorithm = j.value("algorithm", std::string());
    spec.implementation_version = j.value("implementation_version", std::string());
    if (spec.policy_id.empty()) throw ParseError(0, "policy_id is empty");

    for (auto cit = j.at("concepts").begin(); cit != j.at("concepts").end(); ++cit) {
      auto& qmap = spec.concepts[cit.key()];
      for (auto qit = cit.value().begin(); qit != cit.value().end(); ++qit) {
        const json& e = qit.value();
        PolicyEntry entry;
        entry.kind = kind_from_name(e.at("kind").get<std::string>());
        switch (entry.kind) {
          case PolicyEntry::Kind::fixed:
            entry.action_id = e.at("action_id").get<std::string>();
            if (entry.action_id.empty())
              throw ParseError(0, "fixed entry without action for '" + qit.key() + "'");
            break;
          case PolicyEntry::Kind::random:
            entry.actions = e.value("actions", std::vector<ActionId>{});
            std::sort(entry.actions.begin(), entry.actions.end());
            break;
          case PolicyEntry::Kind::contextual: {
            entry.treat_action = e.at("treat").get<std::string>();
            entry.control_action = e.at("control").get<std::string>();
            if (entry.treat_action.empty() || entry.control_action.empty() ||
                entry.treat_action == entry.control_action)
              throw ParseError(0, "contextual entry arms invalid for '" + qit.key() + "'");
            entry.model = std::make_shared<causal::CateModel>(
                causal::model_from_json(e.at("model").dump()));
            break;
          }
        }
        qmap[qit.key()] = std::move(entry);
      }
    }
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("spec structure: ") + e.what());
  }
}

PolicySpecFile load_policy_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return spec_from_json(buf.str());
}

void save_policy_spec(const PolicySpecFile& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << spec_to_json(spec) << '\n';
}

PolicySpecFile spec_from_mab(const mab::MabPolicy& policy, const Catalog& catalog,
                             std::string policy_id) {
  PolicySpecFile spec;
  spec.policy_id = std::move(policy_id);
  spec.algorithm = "mab";
  for (const auto& [qid, entry] : policy.entries) {
    const Question* q = catalog.find_question(qid);
    if (!q) throw std::invalid_argument("policy question '" + qid + "' not in catalog");
    PolicyEntry out;
    if (entry.objective == mab::Objective::fallback_random || entry.action_id.empty()) {
      out.kind = PolicyEntry::Kind::random;
      out.actions = q->action_ids;
      std::sort(out.actions.begin(), out.actions.end());
    } else {
      out.kind = PolicyEntry::Kind::fixed;
      out.action_id = entry.action_id;
    }
    spec.concepts[q->concept_id][qid] = std::move(out);
  }
  return spec;
}

PolicySpecFile spec_uniform_random(const Catalog& catalog, std::string policy_id) {
  PolicySpecFile spec;
  spec.policy_id = std::move(policy_id);
  spec.algorithm = "random";
  for (const auto& q : catalog.questions) {
    if (q.action_ids.empty()) continue;
    PolicyEntry entry;
    entry.kind = PolicyEntry::Kind::random;
    entry.actions = q.action_ids;
    std::sort(entry.actions.begin(), entry.actions.end());
    spec.concepts[q.concept_id][q.id] = std::move(entry);
  }
  return spec;
}

PolicySpecFile spec_from_contextual(const std::vector<causal::ContextualPolicy>& rules,
                                    const Catalog& catalog, std::string policy_id) {
  PolicySpecFile spec;
  spec.policy_id = std::move(policy_id);
  spec.algorithm = "contextual";
  for (const auto& rule : rules) {
    const Question* q = catalog.find_question(rule.question_id);
    if (!q)
      throw std::invalid_argument("rule question '" + rule.question_id +
                                  "' not in catalog");
    PolicyEntry entry;
    entry.kind = PolicyEntry::Kind::contextual;
    entry.treat_action = rule.treat_action;
    entry.control_action = rule.control_action;
    entry.model = std::make_shared<causal::CateModel>(rule.model);
    spec.concepts[q->concept_id][rule.question_id] = std::move(entry);
  }
  return spec;
}

std::string assign_policy(const SessionId& session_id, const AssignmentConfig& cfg) {
  validate_assignment(cfg);
  std::vector<double> weights;
  weights.reserve(cfg.entries.size());
  for (const auto& [id, w] : cfg.entries) {
    (void)id;
    weights.push_back(w);
  }
  return cfg.entries[weighted_bucket_index(session_bucket(session_id), weights)].first;
}

void DecisionLog::append(DecisionLogEntry entry) {
  std::lock_guard lock(mu_);
  entries_.push_back(std::move(entry));
}

std::size_t DecisionLog::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

std::vector<DecisionLogEntry> DecisionLog::snapshot() const {
  std::lock_guard lock(mu_);
  return entries_;
}

PolicyServer::PolicyServer(AssignmentConfig cfg) : cfg_(std::move(cfg)) {
  validate_assignment(cfg_);
  specs_ = std::make_shared<const SpecMap>();
}

PolicyServer::~PolicyServer() { stop(); }

std::shared_ptr<const PolicyServer::SpecMap> PolicyServer::specs() const {
  std::lock_guard lock(specs_mu_);
  return specs_;
}

void PolicyServer::install_spec(PolicySpecFile spec) {
  auto owned = std::make_shared<const PolicySpecFile>(std::move(spec));
  std::lock_guard lock(specs_mu_);
  auto next = std::make_shared<SpecMap>(*specs_);
  (*next)[owned->policy_id] = owned;
  specs_ = std::move(next);
}

void PolicyServer::load_spec_file(const std::string& path) {
  install_spec(load_policy_spec(path));  // parse failures propagate pre-swap
}

std::string PolicyServer::assign(const SessionId& session_id) const {
  return assign_policy(session_id, cfg_);
}

Decision PolicyServer::get_action(const Query& query) {
  Decision decision;
  decision.policy_id = assign(query.session_id);

  auto snapshot = specs();
  auto spec_it = snapshot->find(decision.policy_id);
  if (spec_it == snapshot->end())
    throw SpecNotLoadedError("no spec installed for policy '" + decision.policy_id + "'");
  const PolicySpecFile& spec = *spec_it->second;

  const PolicyEntry* entry = nullptr;
  if (auto cit = spec.concepts.find(query.concept_id); cit != spec.concepts.end()) {
    if (auto qit = cit->second.find(query.question_id); qit != cit->second.end())
      entry = &qit->second;
  }

  std::vector<ActionId> runtime_sorted = query.runtime_actions;
  std::sort(runtime_sorted.begin(), runtime_sorted.end());

  if (!entry) {
    if (runtime_sorted.empty())
      throw std::invalid_argument("unknown question '" + query.question_id +
                                  "' and no runtime action set");
    decision.action_id = draw_uniform(query.session_id, query.question_id, runtime_sorted);
    decision.fallback = true;
  } else {
    switch (entry->kind) {
      case PolicyEntry::Kind::fixed:
        decision.action_id = entry->action_id;
        break;
      case PolicyEntry::Kind::random: {
        const std::vector<ActionId>& pool =
            entry->actions.empty() ? runtime_sorted : entry->actions;
        if (pool.empty())
          throw std::invalid_argument("random entry for '" + query.question_id +
                                      "' has no action set");
        decision.action_id = draw_uniform(query.session_id, query.question_id, pool);
        break;
      }
      case PolicyEntry::Kind::contextual:
        if (query.x) {
          decision.action_id = entry->model->predict(*query.x) > 0.0
                                   ? entry->treat_action
                                   : entry->control_action;
        } else {
          decision.action_id = entry->control_action;
          decision.fallback = true;
        }
        break;
    }
  }

  DecisionLogEntry log_entry;
  log_entry.session_id = query.session_id;
  log_entry.question_id = query.question_id;
  log_entry.policy_id = decision.policy_id;
  log_entry.action_id = decision.action_id;
  log_entry.fallback = decision.fallback;
  log_entry.timestamp = static_cast<std::int64_t>(std::time(nullptr));
  log_.append(std::move(log_entry));
  return decision;
}

std::string PolicyServer::handle_request_line(PolicyServer& server,
                                              const std::string& line) {
  json response;
  try {
    json request = json::parse(line);
    Query query;
    query.session_id = request.at("session_id").get<std::string>();
    query.concept_id = request.value("concept_id", std::string());
    query.question_id = request.at("question_id").get<std::string>();
    if (request.contains("actions"))
      query.runtime_actions = request["actions"].get<std::vector<ActionId>>();
    if (request.contains("context") && !request["context"].is_null())
      query.x = context_from_json(request["context"]);
    Decision d = server.get_action(query);
    response["action_id"] = d.action_id;
    response["policy_id"] = d.policy_id;
    response["fallback"] = d.fallback;
  } catch (const json::exception& e) {
    response = {{"error", "parse"}, {"reason", e.what()}};
  } catch (const ParseError& e) {
    response = {{"error", "parse"}, {"reason", e.what()}};
  } catch (const SpecNotLoadedError& e) {
    response = {{"error", "spec_not_loaded"}, {"reason", e.what()}};
  } catch (const std::exception& e) {
    response = {{"error", "bad_request"}, {"reason", e.what()}};
  }
  return response.dump();
}

void PolicyServer::start(int port) {
  if (running_.load()) throw std::runtime_error("server already running");

  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw std::runtime_error("socket: " + std::string(std::strerror(errno)));
  int yes = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));

  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = htons(static_cast<uint16_t>(port));
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0) {
    ::close(listen_fd_);
    listen_fd_ = -1;
    throw std::runtime_error("bind: " + std::string(std::strerror(errno)));
  }
  if (::listen(listen_fd_, 16) < 0) {
    ::close(listen_fd_);
    listen_fd_ = -1;
    throw std::runtime_error("listen: " + std::string(std::strerror(errno)));
  }
  socklen_t len = sizeof(addr);
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);

  running_.store(true);
  loop_ = std::thread([this] {
    while (running_.load()) {
      int conn = ::accept(listen_fd_, nullptr, nullptr);
      if (conn < 0) {
        if (!running_.load()) break;
        continue;
      }
      std::string buffer;
      char chunk[4096];
      for (;;) {
        ssize_t got = ::recv(conn, chunk, sizeof(chunk), 0);
        if (got <= 0) break;
        buffer.append(chunk, static_cast<size_t>(got));
        size_t pos;
        bool closed = false;
        while ((pos = buffer.find('\n')) != std::string::npos) {
          std::string line = buffer.substr(0, pos);
          buffer.erase(0, pos + 1);
          if (line.empty()) continue;
          std::string reply = handle_request_line(*this, line) + "\n";
          size_t sent = 0;
          while (sent < reply.size()) {
            ssize_t n = ::send(conn, reply.data() + sent, reply.size() - sent,
                               MSG_NOSIGNAL);
            if (n <= 0) {
              closed = true;
              break;
            }
            sent += static_cast<size_t>(n);
          }
          if (closed) break;
        }
        if (closed) break;
      }
      ::close(conn);
    }
  });
}

void PolicyServer::stop() {
  if (!running_.exchange(false)) {
    if (loop_.joinable()) loop_.join();
    return;
  }
  if (listen_fd_ >= 0) {
    ::shutdown(listen_fd_, SHUT_RDWR);
    ::close(listen_fd_);
    listen_fd_ = -1;
  }
  if (loop_.joinable()) loop_.join();
}

}  // namespace tutorkit::service
