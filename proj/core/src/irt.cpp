#include "tutorkit/irt.hpp"

#include <algorithm>
#include <cmath>

namespace tutorkit::irt {

namespace {

constexpr double kThetaMin = -4.0;
constexpr double kThetaMax = 4.0;

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// Per-response gradient and curvature of the log likelihood.
struct Contribution {
  double gradient = 0.0;
  double curvature = 0.0;
};

Contribution likelihood_terms(const Response& r, double theta) {
  const double sigma = logistic(r.item.a * (theta - r.item.b));
  const double p = std::clamp(r.item.c + (1.0 - r.item.c) * sigma, 1e-12, 1.0 - 1e-12);
  const double y = r.correct ? 1.0 : 0.0;
  const double dp = (1.0 - r.item.c) * r.item.a * sigma * (1.0 - sigma);
  const double d2p = dp * r.item.a * (1.0 - 2.0 * sigma);
  const double pq = p * (1.0 - p);
  const double score = (y - p) / pq;
  Contribution out;
  out.gradient = score * dp;
  // d/dtheta of score = -(pq + (y-p)(1-2p)) * dp / pq^2
  out.curvature = -(pq + (y - p) * (1.0 - 2.0 * p)) * dp * dp / (pq * pq) + score * d2p;
  return out;
}

}  // namespace

double p_correct(double theta, const IrtItem& item) {
  return item.c + (1.0 - item.c) * logistic(item.a * (theta - item.b));
}

double p_correct_dtheta(double theta, const IrtItem& item) {
  const double sigma = logistic(item.a * (theta - item.b));
  return (1.0 - item.c) * item.a * sigma * (1.0 - sigma);
}

double ability_log_posterior_gradient(std::span<const Response> responses, double theta) {
  double g = -theta;  // standard-normal prior
  for (const auto& r : responses) g += likelihood_terms(r, theta).gradient;
  return g;
}

AbilityEstimate estimate_ability(std::span<const Response> responses) {
  AbilityEstimate est;
  est.n_responses = static_cast<int>(responses.size());
  if (responses.empty()) return est;

  double theta = 0.0;
  est.converged = false;
  for (int iter = 1; iter <= 50; ++iter) {
    est.iterations = iter;
    double g = -theta;
    double h = -1.0;
    for (const auto& r : responses) {
      const auto c = likelihood_terms(r, theta);
      g += c.gradient;
      h += c.curvature;
    }
    double step;
    if (std::fabs(h) < 1e-10 || h > 0.0) {
      // Curvature unusable (flat or locally convex): damped ascent instead.
      step = 0.5 * g;
    } else {
      step = -g / h;
    }
    step = std::clamp(step, -1.0, 1.0);
    const double proposed = std::clamp(theta + step, kThetaMin, kThetaMax);
    const double applied = proposed - theta;
    theta = proposed;
    if (std::fabs(applied) < 1e-6) {
      est.converged = true;
      break;
    }
  }
  est.theta = theta;
  return est;
}

std::optional<QuestionId> select_next_question(
    double theta, std::span<const Question> pool,
    const std::unordered_set<QuestionId>& answered) {
  const Question* best = nullptr;
  bool best_is_tf = false;
  double best_gap = 0.0;
  for (const auto& q : pool) {
    if (answered.count(q.id)) continue;
    const bool is_tf = q.qtype == QuestionType::true_false;
    const double gap = std::fabs(q.item.b - theta);
    bool better;
    if (!best) {
      better = true;
    } else if (is_tf != best_is_tf) {
      better = !is_tf;  // non-true_false always beats true_false
    } else if (gap != best_gap) {
      better = gap < best_gap;
    } else {
      better = q.id < best->id;
    }
    if (better) {
      best = &q;
      best_is_tf = is_tf;
      best_gap = gap;
    }
  }
  if (!best) return std::nullopt;
  return best->id;
}

}  // namespace tutorkit::irt
