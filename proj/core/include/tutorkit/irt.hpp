#pragma once

#include <optional>
#include <span>
#include <unordered_set>

#include "tutorkit/domain.hpp"

namespace tutorkit::irt {

// 3PL response probability: c + (1-c) * logistic(a * (theta - b)).
double p_correct(double theta, const IrtItem& item);
// Analytic slope d p_correct / d theta; strictly positive.
double p_correct_dtheta(double theta, const IrtItem& item);

struct AbilityEstimate {
  double theta = 0.0;  // clamped to [-4, 4]
  int n_responses = 0;
  bool converged = true;
  int iterations = 0;
};

struct Response {
  IrtItem item;
  bool correct = false;
};

// MAP ability under a standard-normal prior. Newton iterations until the
// applied step falls below 1e-6 or 50 iterations pass. Empty input is the
// prior mean.
AbilityEstimate estimate_ability(std::span<const Response> responses);

// Gradient of the log posterior at theta; exposed so tests can check the
// Newton step against finite differences.
double ability_log_posterior_gradient(std::span<const Response> responses, double theta);

// Picks the unanswered question whose difficulty sits closest to theta.
// Non-true_false questions win whenever any is still available; remaining
// ties break on the lexicographically smallest id. Empty optional means the
// pool is exhausted.
std::optional<QuestionId> select_next_question(
    double theta, std::span<const Question> pool,
    const std::unordered_set<QuestionId>& answered);

}  // namespace tutorkit::irt
