#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tutorkit/context.hpp"

namespace tutorkit::causal {

class InsufficientDataError : public std::runtime_error {
 public:
  explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

class FeatureMismatchError : public std::runtime_error {
 public:
  explicit FeatureMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct TreatmentSample {
  context::ContextVector x;
  int w = 0;       // 1 = treatment arm
  double y = 0.0;  // one outcome measure
};

struct TreatmentDataset {
  std::vector<TreatmentSample> samples;
  QuestionId question_id;
  ActionId treat_action;
  ActionId control_action;
  std::string outcome_name;
};

// Forest input columns: the 20 feature values then their 20 presence masks,
// so trees can split on missingness itself.
constexpr int kForestInputs = 2 * context::kNumFeatures;
std::array<double, kForestInputs> encode_features(const context::ContextVector& x);
std::vector<std::string> forest_feature_names();

struct ForestConfig {
  int n_trees = 200;
  int min_leaf = 10;          // per arm, enforced on the estimation half
  double subsample = 0.5;     // drawn without replacement per tree
  double honest_fraction = 0.5;
  int max_features = 0;       // 0 means ceil(inputs / 3)
  int max_thresholds = 64;    // split candidates per feature per node
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double effect = 0.0;  // leaf estimate, estimation-half mean difference
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  // Honesty bookkeeping: split search saw only train_ids, leaf effects only
  // est_ids. Not serialized; predictions never read them.
  std::vector<int> train_ids;
  std::vector<int> est_ids;
};

struct CateModel {
  std::vector<Tree> trees;
  ForestConfig config;
  std::vector<std::string> feature_names;

  double predict(const context::ContextVector& x) const;
  double predict_encoded(const std::array<double, kForestInputs>& row) const;
};

// Honest forest: per tree, subsample without replacement, split the
// subsample into disjoint train/estimation halves, grow splits greedily by
// between-child effect heterogeneity on the train half subject to per-arm
// minimum leaf counts on the estimation half.
CateModel fit_cate_forest(const TreatmentDataset& td, const ForestConfig& config,
                          std::uint64_t seed);

std::string model_to_json(const CateModel& model);
CateModel model_from_json(const std::string& text);

// Grid search scored by out-of-bag error against doubly-weighted pseudo
// outcomes; returns the best configuration refit-ready.
ForestConfig tune_forest_config(const TreatmentDataset& td, std::uint64_t seed);

}  // namespace tutorkit::causal
