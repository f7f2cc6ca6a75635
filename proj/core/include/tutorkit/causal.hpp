#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tutorkit/forest.hpp"
#include "tutorkit/mab.hpp"
#include "tutorkit/stats.hpp"

namespace tutorkit::causal {

class UnknownActionError : public std::runtime_error {
 public:
  explicit UnknownActionError(const std::string& what) : std::runtime_error(what) {}
};

class InvalidContrastError : public std::runtime_error {
 public:
  explicit InvalidContrastError(const std::string& what) : std::runtime_error(what) {}
};

class EmptyArmError : public std::runtime_error {
 public:
  explicit EmptyArmError(const std::string& what) : std::runtime_error(what) {}
};

class NoMatchedSamplesError : public std::runtime_error {
 public:
  explicit NoMatchedSamplesError(const std::string& what) : std::runtime_error(what) {}
};

// Context vectors are expensive to recompute per contrast; the scan builds
// this once per dataset, keyed by (session index, record index).
using ContextCache = std::map<std::pair<int, int>, context::ContextVector>;
ContextCache build_context_cache(const FilteredDataset& dataset,
                                 const outcomes::ItemMap& items);

// One sample per exposure of either action; y is the requested outcome (rows
// with a missing value for it are excluded), x the decision-time context.
TreatmentDataset build_treatment_dataset(const QuestionId& question,
                                         const FilteredDataset& dataset,
                                         const ActionId& treat, const ActionId& control,
                                         mab::Measure outcome,
                                         const outcomes::ItemMap& items,
                                         const outcomes::OutcomeConfig& cfg,
                                         const ContextCache* cache = nullptr);

struct AteResult {
  double tau_hat = 0.0;
  double se = 0.0;
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
};

AteResult estimate_ate(const TreatmentDataset& td);

enum class TestSide { two_sided, one_sided_greater };

struct TestResult {
  double statistic = 0.0;
  double se = 0.0;
  double df = 0.0;
  double p_value = 1.0;
  TestSide sided = TestSide::two_sided;
};

struct LinearHteFit {
  // Design [1, w, x, w*x] with x standardized over the non-missing rows.
  double beta0 = 0.0, beta_w = 0.0, beta_x = 0.0, beta_wx = 0.0;
  double se0 = 0.0, se_w = 0.0, se_x = 0.0, se_wx = 0.0;
  double p_wx = 1.0;  // two-sided Wald on the interaction
  bool logistic = false;
  bool converged = true;
  int n = 0;
};

// Interaction regression for one covariate; binary outcomes switch to the
// logistic form. Rows with the covariate masked are dropped; fewer than 90%
// present is treated as degenerate.
LinearHteFit linear_hte_test(const TreatmentDataset& td, context::Feature covariate);

// Residual-on-prediction calibration: regress y minus its arm mean on
// (w-1/2)*mean(tau_hat) and (w-1/2)*(tau_hat-mean); a positive differential
// coefficient evidences heterogeneity. Degenerate regressors give p = 1.
TestResult calibration_test(const CateModel& model, const TreatmentDataset& heldout);

// Rank-weighted ATE (AUTOC): targeting-operator curve over the tau_hat
// ranking, integrated uniformly over top fractions; SE from 200 half-sample
// bootstrap replicates; one-sided for AUTOC > 0. Constant scores give p = 1.
TestResult rate_autoc(const CateModel& model, const TreatmentDataset& heldout,
                      std::uint64_t seed);

struct ContextualPolicy {
  QuestionId question_id;
  ActionId treat_action;
  ActionId control_action;
  CateModel model;

  // Decision rule: treat exactly when tau_hat(x) > 0.
  const ActionId& decide(const context::ContextVector& x) const {
    return model.predict(x) > 0.0 ? treat_action : control_action;
  }
};

ContextualPolicy derive_contextual_policy(CateModel model, QuestionId question,
                                          ActionId treat, ActionId control);

struct PolicyValue {
  double v_hat = 0.0;
  double se = 0.0;
  int n_matched = 0;
};

PolicyValue estimate_policy_value(const ContextualPolicy& policy,
                                  const TreatmentDataset& td);
// Constant policy: always treat (arm = 1) or always control (arm = 0).
PolicyValue estimate_constant_policy_value(int arm, const TreatmentDataset& td);

// One-sided Welch-style comparison of contextual vs baseline value. The two
// estimates share samples; the test treats them as independent, which is the
// documented approximation.
TestResult compare_policy_values(const PolicyValue& contextual, const PolicyValue& mab);

struct Contrast {
  QuestionId question_id;
  ActionId treat;
  ActionId control;
};

struct HteScanConfig {
  std::vector<mab::Measure> outcomes_to_test = {
      mab::Measure::reward, mab::Measure::reattempt_correct,
      mab::Measure::student_ability, mab::Measure::session_success};
  ForestConfig forest;
  outcomes::OutcomeConfig outcome_cfg;
  double fdr_q = 0.2;
  double alpha = 0.05;  // detection additionally requires raw p below this
  double holdout_fraction = 0.5;
  std::uint64_t seed = 0;
};

struct ScanFailure {
  QuestionId question_id;
  ActionId treat;
  std::string test;
  std::string outcome;
  std::string reason;
};

struct DetectionCell {
  int detected = 0;
  int total = 0;
  double proportion() const { return total > 0 ? static_cast<double>(detected) / total : 0.0; }
};

struct ContrastTestResult {
  std::string test;     // "linear:<covariate>", "calibration", "autoc", "policy_comparison"
  std::string outcome;  // measure name
  double p = 1.0;
  double p_adjusted = 1.0;
  bool detected = false;
};

struct ContrastDetail {
  QuestionId question_id;
  ActionId treat;
  ActionId control;
  int n_samples = 0;  // for the first outcome; informational
  std::vector<ContrastTestResult> tests;
};

struct HteReport {
  std::vector<mab::Measure> outcomes;
  // Rows = covariates, columns = outcomes (interaction regressions).
  std::array<std::vector<DetectionCell>, context::kNumFeatures> linear;
  // Rows = forest-based tests, columns = outcomes.
  std::vector<DetectionCell> calibration;
  std::vector<DetectionCell> autoc;
  std::vector<DetectionCell> policy_comparison;
  std::vector<ContrastDetail> details;  // aligned with the contrast list
  std::vector<ScanFailure> failures;
};

// Batch heterogeneity scan with per-family Benjamini-Hochberg control; a
// detection is a BH rejection whose raw p also clears alpha. Contrast-level
// errors are recorded and skipped.
HteReport hte_scan(const FilteredDataset& dataset, const std::vector<Contrast>& contrasts,
                   const outcomes::ItemMap& items, const HteScanConfig& cfg);

void write_linear_hte_csv(std::ostream& out, const HteReport& report);
void write_forest_hte_csv(std::ostream& out, const HteReport& report);
std::string report_to_json(const HteReport& report);

}  // namespace tutorkit::causal
