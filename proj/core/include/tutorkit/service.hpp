#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "tutorkit/causal.hpp"
#include "tutorkit/forest.hpp"
#include "tutorkit/ingest.hpp"
#include "tutorkit/mab.hpp"

namespace tutorkit::service {

class SpecNotLoadedError : public std::runtime_error {
 public:
  explicit SpecNotLoadedError(const std::string& what) : std::runtime_error(what) {}
};

class VersionMismatchError : public std::runtime_error {
 public:
  explicit VersionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

constexpr int kSpecVersion = 1;

// One question's serving rule inside a policy spec.
struct PolicyEntry {
  enum class Kind { random, fixed, contextual };
  Kind kind = Kind::random;
  ActionId action_id;               // fixed
  std::vector<ActionId> actions;    // random: the sorted action set to draw from
  ActionId treat_action;            // contextual
  ActionId control_action;
  std::shared_ptr<const causal::CateModel> model;  // contextual
};

struct PolicySpecFile {
  int spec_version = kSpecVersion;
  std::string policy_id;
  std::string algorithm;
  std::string implementation_version = "0.1.0";
  std::map<ConceptId, std::map<QuestionId, PolicyEntry>> concepts;
};

std::string spec_to_json(const PolicySpecFile& spec);
// Throws ParseError on malformed input and VersionMismatchError when the file
// declares a newer spec_version than this build supports.
PolicySpecFile spec_from_json(const std::string& text);
PolicySpecFile load_policy_spec(const std::string& path);
void save_policy_spec(const PolicySpecFile& spec, const std::string& path);

// Converters from trained policies. Random entries record the question's
// sorted action set so replay draws match the training-time simulator.
PolicySpecFile spec_from_mab(const mab::MabPolicy& policy, const Catalog& catalog,
                             std::string policy_id);
PolicySpecFile spec_uniform_random(const Catalog& catalog, std::string policy_id);
PolicySpecFile spec_from_contextual(const std::vector<causal::ContextualPolicy>& rules,
                                    const Catalog& catalog, std::string policy_id);

struct AssignmentConfig {
  // Ordered (policy_id, weight); weights positive, summing to 1.
  std::vector<std::pair<std::string, double>> entries;
};

// Session-sticky policy choice: FNV-1a 64 of the session id, bucket = hash
// mod 10000, cumulative weight ranges. Throws std::invalid_argument on an
// invalid config.
std::string assign_policy(const SessionId& session_id, const AssignmentConfig& cfg);

struct Decision {
  ActionId action_id;
  std::string policy_id;
  bool fallback = false;
};

struct DecisionLogEntry {
  SessionId session_id;
  QuestionId question_id;
  std::string policy_id;
  ActionId action_id;
  bool fallback = false;
  std::int64_t timestamp = 0;
};

// Append-only sink behind one writer lock; readers take snapshots.
class DecisionLog {
 public:
  void append(DecisionLogEntry entry);
  std::size_t size() const;
  std::vector<DecisionLogEntry> snapshot() const;

 private:
  mutable std::mutex mu_;
  std::vector<DecisionLogEntry> entries_;
};

struct Query {
  SessionId session_id;
  ConceptId concept_id;
  QuestionId question_id;
  // A_q supplied by the caller; used for unknown questions and for random
  // entries that did not record an action set.
  std::vector<ActionId> runtime_actions;
  std::optional<context::ContextVector> x;
};

// Immutable-snapshot policy server. Spec installs swap the whole snapshot, so
// every decision is served from exactly one spec generation.
class PolicyServer {
 public:
  explicit PolicyServer(AssignmentConfig cfg);
  ~PolicyServer();

  // Parses, validates, and installs atomically; on failure the previous
  // snapshot stays active.
  void load_spec_file(const std::string& path);
  void install_spec(PolicySpecFile spec);

  std::string assign(const SessionId& session_id) const;
  // Resolves a decision and appends it to the log. Throws SpecNotLoadedError
  // when the assigned policy has no installed spec and std::invalid_argument
  // when no action set is available to draw from.
  Decision get_action(const Query& query);

  const DecisionLog& decision_log() const { return log_; }

  // Newline-delimited JSON over a localhost TCP socket. start() binds and
  // spawns the accept loop (port 0 picks an ephemeral port); stop() shuts the
  // loop down and joins. Malformed requests get {"error", "reason"} lines.
  void start(int port);
  int port() const { return port_; }
  void stop();
  bool running() const { return running_.load(); }

  static std::string handle_request_line(PolicyServer& server, const std::string& line);

 private:
  using SpecMap = std::map<std::string, std::shared_ptr<const PolicySpecFile>>;

  std::shared_ptr<const SpecMap> specs() const;

  AssignmentConfig cfg_;
  mutable std::mutex specs_mu_;
  std::shared_ptr<const SpecMap> specs_;
  DecisionLog log_;

  std::thread loop_;
  std::atomic<bool> running_{false};
  int listen_fd_ = -1;
  int port_ = 0;
};

}  // namespace tutorkit::service
