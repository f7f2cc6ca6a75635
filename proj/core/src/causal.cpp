#include "tutorkit/causal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include <json.hpp>

#include "tutorkit/rng.hpp"

namespace tutorkit::causal {

namespace {

using json = nlohmann::json;

constexpr double kZ95 = 1.959963984540054;

std::optional<double> outcome_measure(const outcomes::OutcomeVector& o, mab::Measure m) {
  switch (m) {
    case mab::Measure::reward:
      return o.reward;
    case mab::Measure::reattempt_correct:
      return o.reattempt_correct;
    case mab::Measure::student_ability:
      return o.student_ability;
    case mab::Measure::session_success:
      return o.session_success;
    case mab::Measure::future_correct_rate:
      return o.future_correct_rate;
    case mab::Measure::next_question_correct:
      return o.next_question_correct;
    case mab::Measure::future_response_time:
      return o.future_response_time_s;
    case mab::Measure::confidence:
      if (o.confidence) return static_cast<double>(*o.confidence);
      return std::nullopt;
  }
  return std::nullopt;
}

struct ArmSplit {
  std::vector<double> treat;
  std::vector<double> control;
};

ArmSplit split_by_arm(const TreatmentDataset& td) {
  ArmSplit arms;
  for (const auto& s : td.samples) (s.w == 1 ? arms.treat : arms.control).push_back(s.y);
  return arms;
}

// One-sided p for mean > 0 from a t statistic; df <= 0 falls back to normal.
double one_sided_p(double t, double df) {
  if (df > 0) return 1.0 - stats::t_cdf(t, df);
  return 1.0 - stats::normal_cdf(t);
}

// AUTOC over a subset of samples: rank by score descending, average the
// targeting-operator curve uniformly over top fractions. Gamma is the
// uniform-logging IPW transform whose subset means estimate subset ATEs.
std::optional<double> autoc_value(const std::vector<double>& scores,
                                  const std::vector<int>& w,
                                  const std::vector<double>& y,
                                  const std::vector<int>& ids) {
  int n = static_cast<int>(ids.size());
  if (n < 2) return std::nullopt;
  int n_treat = 0;
  for (int id : ids) n_treat += w[id];
  if (n_treat == 0 || n_treat == n) return std::nullopt;
  double p_hat = static_cast<double>(n_treat) / n;

  std::vector<int> order(ids);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });

  std::vector<double> gamma(order.size());
  double total = 0.0;
  for (size_t i = 0; i < order.size(); ++i) {
    int id = order[i];
    gamma[i] = y[id] * (w[id] - p_hat) / (p_hat * (1.0 - p_hat));
    total += gamma[i];
  }
  double overall = total / n;

  double prefix = 0.0, toc_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    prefix += gamma[i];
    toc_sum += prefix / (i + 1) - overall;
  }
  return toc_sum / n;
}

TreatmentDataset subset_dataset(const TreatmentDataset& td, const std::vector<int>& ids) {
  TreatmentDataset out;
  out.question_id = td.question_id;
  out.treat_action = td.treat_action;
  out.control_action = td.control_action;
  out.outcome_name = td.outcome_name;
  out.samples.reserve(ids.size());
  for (int id : ids) out.samples.push_back(td.samples[id]);
  return out;
}

std::string csv_cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

ContextCache build_context_cache(const FilteredDataset& dataset,
                                 const outcomes::ItemMap& items) {
  ContextCache cache;
  context::HistoryIndex history(dataset.history_sessions);
  for (const auto& [question, refs] : dataset.exposure_index) {
    (void)question;
    for (const auto& ref : refs) {
      auto key = std::make_pair(ref.session_index, ref.record_index);
      if (cache.find(key) != cache.end()) continue;
      const PracticeSession& s = dataset.sessions[ref.session_index];
      cache.emplace(key, context::compute_context(history.before(s), s,
                                                  ref.record_index, items));
    }
  }
  return cache;
}

TreatmentDataset build_treatment_dataset(const QuestionId& question,
                                         const FilteredDataset& dataset,
                                         const ActionId& treat, const ActionId& control,
                                         mab::Measure outcome,
                                         const outcomes::ItemMap& items,
                                         const outcomes::OutcomeConfig& cfg,
                                         const ContextCache* cache) {
  if (treat == control)
    throw InvalidContrastError("contrast arms must differ: '" + treat + "'");
  auto exposures = dataset.exposure_index.find(question);
  if (exposures == dataset.exposure_index.end())
    throw mab::UnknownQuestionError(question);
  auto actions = dataset.action_sets.find(question);
  auto known = [&](const ActionId& a) {
    return actions != dataset.action_sets.end() &&
           std::find(actions->second.begin(), actions->second.end(), a) !=
               actions->second.end();
  };
  if (!known(treat)) throw UnknownActionError("action '" + treat + "' not offered on '" + question + "'");
  if (!known(control)) throw UnknownActionError("action '" + control + "' not offered on '" + question + "'");

  std::optional<context::HistoryIndex> local_history;
  if (!cache) local_history.emplace(dataset.history_sessions);

  TreatmentDataset td;
  td.question_id = question;
  td.treat_action = treat;
  td.control_action = control;
  td.outcome_name = mab::to_string(outcome);

  std::unordered_map<int, double> ability_cache;
  int n_treat = 0, n_control = 0;
  for (const auto& ref : exposures->second) {
    const PracticeSession& s = dataset.sessions[ref.session_index];
    const InteractionRecord& r = s.records[ref.record_index];
    if (!r.shown_action_id) continue;
    int w;
    if (*r.shown_action_id == treat)
      w = 1;
    else if (*r.shown_action_id == control)
      w = 0;
    else
      continue;

    auto [it, fresh] = ability_cache.try_emplace(ref.session_index, 0.0);
    if (fresh) it->second = outcomes::session_ability(s, items);
    auto vec = outcomes::compute_outcomes(s, ref.record_index, it->second, cfg);
    auto y = outcome_measure(vec, outcome);
    if (!y) continue;

    TreatmentSample sample;
    sample.w = w;
    sample.y = *y;
    if (cache) {
      sample.x = cache->at({ref.session_index, ref.record_index});
    } else {
      sample.x = context::compute_context(local_history->before(s), s,
                                          ref.record_index, items);
    }
    td.samples.push_back(std::move(sample));
    (w == 1 ? n_treat : n_control) += 1;
  }
  if (n_treat == 0) throw EmptyArmError("no usable exposures of '" + treat + "' on '" + question + "'");
  if (n_control == 0) throw EmptyArmError("no usable exposures of '" + control + "' on '" + question + "'");
  return td;
}

AteResult estimate_ate(const TreatmentDataset& td) {
  ArmSplit arms = split_by_arm(td);
  if (arms.treat.size() < 2 || arms.control.size() < 2)
    throw stats::DegenerateSampleError("each arm needs >= 2 samples for an effect estimate");
  auto welch = stats::welch_t_test(arms.treat, arms.control, stats::Tail::two_sided);
  AteResult out;
  out.tau_hat = welch.mean_a - welch.mean_b;
  out.se = welch.se;
  out.ci95_lo = out.tau_hat - kZ95 * out.se;
  out.ci95_hi = out.tau_hat + kZ95 * out.se;
  return out;
}

LinearHteFit linear_hte_test(const TreatmentDataset& td, context::Feature covariate) {
  const int n_all = static_cast<int>(td.samples.size());
  std::vector<double> xs, ys;
  std::vector<int> ws;
  for (const auto& s : td.samples) {
    if (!s.x.has(covariate)) continue;
    xs.push_back(s.x.get(covariate));
    ws.push_back(s.w);
    ys.push_back(s.y);
  }
  const int n = static_cast<int>(xs.size());
  if (n_all == 0 || n < 0.9 * n_all)
    throw stats::DegenerateSampleError("covariate present in under 90% of samples");
  if (n < 8) throw stats::DegenerateSampleError("too few rows for the interaction fit");
  if (std::find(ws.begin(), ws.end(), 1) == ws.end() ||
      std::find(ws.begin(), ws.end(), 0) == ws.end())
    throw stats::DegenerateSampleError("one arm vanished after dropping masked rows");

  double mu = stats::mean(xs);
  double sd = stats::sample_sd(xs);
  if (sd < 1e-12)
    throw stats::DegenerateSampleError("constant covariate");
  for (double& x : xs) x = (x - mu) / sd;

  stats::Matrix design(n, 4);
  for (int i = 0; i < n; ++i) {
    design.at(i, 0) = 1.0;
    design.at(i, 1) = ws[i];
    design.at(i, 2) = xs[i];
    design.at(i, 3) = ws[i] * xs[i];
  }
  bool binary = std::all_of(ys.begin(), ys.end(),
                            [](double y) { return y == 0.0 || y == 1.0; });
  stats::FitResult fit = binary ? stats::logistic(design, ys) : stats::ols(design, ys);

  LinearHteFit out;
  out.beta0 = fit.beta[0];
  out.beta_w = fit.beta[1];
  out.beta_x = fit.beta[2];
  out.beta_wx = fit.beta[3];
  out.se0 = fit.se[0];
  out.se_w = fit.se[1];
  out.se_x = fit.se[2];
  out.se_wx = fit.se[3];
  out.p_wx = fit.p[3];
  out.logistic = binary;
  out.converged = fit.converged;
  out.n = n;
  return out;
}

TestResult calibration_test(const CateModel& model, const TreatmentDataset& heldout) {
  const int n = static_cast<int>(heldout.samples.size());
  if (n < 4) throw stats::DegenerateSampleError("too few held-out samples");

  double sum_t = 0.0, sum_c = 0.0;
  int n_t = 0, n_c = 0;
  std::vector<double> tau(n);
  for (int i = 0; i < n; ++i) {
    const auto& s = heldout.samples[i];
    tau[i] = model.predict(s.x);
    if (s.w == 1) {
      sum_t += s.y;
      ++n_t;
    } else {
      sum_c += s.y;
      ++n_c;
    }
  }
  if (n_t == 0 || n_c == 0)
    throw stats::DegenerateSampleError("held-out portion lost an arm");
  const double mean_t = sum_t / n_t, mean_c = sum_c / n_c;
  const double tau_bar = stats::mean(tau);

  // Regressors follow the uniform two-arm logging design, so the centered
  // treatment indicator is exactly w - 1/2.
  std::vector<double> resid(n), g_mean(n), g_diff(n);
  double diff_span = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto& s = heldout.samples[i];
    resid[i] = s.y - (s.w == 1 ? mean_t : mean_c);
    const double centered = s.w - 0.5;
    g_mean[i] = centered * tau_bar;
    g_diff[i] = centered * (tau[i] - tau_bar);
    diff_span = std::max(diff_span, std::abs(tau[i] - tau_bar));
  }

  TestResult out;
  out.sided = TestSide::one_sided_greater;
  if (diff_span < 1e-12) {
    out.p_value = 1.0;  // constant predictions carry no ranking information
    return out;
  }

  const bool has_mean = std::abs(tau_bar) > 1e-12;
  stats::Matrix design(n, has_mean ? 2 : 1);
  for (int i = 0; i < n; ++i) {
    if (has_mean) {
      design.at(i, 0) = g_mean[i];
      design.at(i, 1) = g_diff[i];
    } else {
      design.at(i, 0) = g_diff[i];
    }
  }
  stats::FitResult fit = stats::ols(design, resid);
  const int k = has_mean ? 1 : 0;
  out.statistic = fit.se[k] > 0 ? fit.beta[k] / fit.se[k] : 0.0;
  out.se = fit.se[k];
  out.df = fit.df_residual;
  out.p_value = one_sided_p(out.statistic, out.df);
  return out;
}

TestResult rate_autoc(const CateModel& model, const TreatmentDataset& heldout,
                      std::uint64_t seed) {
  const int n = static_cast<int>(heldout.samples.size());
  if (n < 4) throw stats::DegenerateSampleError("too few held-out samples");

  std::vector<double> scores(n), y(n);
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) {
    scores[i] = model.predict(heldout.samples[i].x);
    y[i] = heldout.samples[i].y;
    w[i] = heldout.samples[i].w;
  }
  if (std::count(w.begin(), w.end(), 1) == 0 ||
      std::count(w.begin(), w.end(), 0) == 0)
    throw stats::DegenerateSampleError("held-out portion lost an arm");

  TestResult out;
  out.sided = TestSide::one_sided_greater;
  const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
  if (*hi - *lo < 1e-12) {
    out.p_value = 1.0;  // undefined ranking
    return out;
  }

  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  auto point = autoc_value(scores, w, y, all);
  if (!point) {
    out.p_value = 1.0;
    return out;
  }
  out.statistic = *point;

  constexpr int kReplicates = 200;
  const int half = n / 2;
  Rng rng(Rng::derive(seed, 0x61757463ULL));
  std::vector<int> pool(all);
  std::vector<double> reps;
  reps.reserve(kReplicates);
  for (int r = 0; r < kReplicates; ++r) {
    for (int i = 0; i < half; ++i) {
      int j = i + static_cast<int>(rng.next_below(n - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> ids(pool.begin(), pool.begin() + half);
    if (auto v = autoc_value(scores, w, y, ids)) reps.push_back(*v);
  }
  if (reps.size() < 2) {
    out.p_value = 1.0;
    return out;
  }
  out.se = stats::sample_sd(reps);
  if (out.se < 1e-15) {
    out.p_value = out.statistic > 0 ? 0.0 : 1.0;
    return out;
  }
  out.p_value = 1.0 - stats::normal_cdf(out.statistic / out.se);
  return out;
}

ContextualPolicy derive_contextual_policy(CateModel model, QuestionId question,
                                          ActionId treat, ActionId control) {
  ContextualPolicy policy;
  policy.question_id = std::move(question);
  policy.treat_action = std::move(treat);
  policy.control_action = std::move(control);
  policy.model = std::move(model);
  return policy;
}

namespace {

PolicyValue value_over_matches(const TreatmentDataset& td,
                               const std::function<int(const TreatmentSample&)>& decide) {
  double sum = 0.0, sum_sq = 0.0;
  int n = 0;
  for (const auto& s : td.samples) {
    if (decide(s) != s.w) continue;
    sum += s.y;
    sum_sq += s.y * s.y;
    ++n;
  }
  if (n == 0) throw NoMatchedSamplesError("policy matched no logged exposures");
  PolicyValue out;
  out.n_matched = n;
  out.v_hat = sum / n;
  if (n > 1) {
    double var = (sum_sq - n * out.v_hat * out.v_hat) / (n - 1);
    out.se = std::sqrt(std::max(0.0, var) / n);
  }
  return out;
}

}  // namespace

PolicyValue estimate_policy_value(const ContextualPolicy& policy,
                                  const TreatmentDataset& td) {
  return value_over_matches(td, [&](const TreatmentSample& s) {
    return policy.model.predict(s.x) > 0.0 ? 1 : 0;
  });
}

PolicyValue estimate_constant_policy_value(int arm, const TreatmentDataset& td) {
  return value_over_matches(td, [arm](const TreatmentSample&) { return arm; });
}

TestResult compare_policy_values(const PolicyValue& contextual, const PolicyValue& mab) {
  TestResult out;
  out.sided = TestSide::one_sided_greater;
  const double var_sum = contextual.se * contextual.se + mab.se * mab.se;
  if (var_sum <= 0.0)
    throw stats::DegenerateSampleError("both value estimates have zero variance");
  out.se = std::sqrt(var_sum);
  out.statistic = (contextual.v_hat - mab.v_hat) / out.se;
  const double vc = contextual.se * contextual.se, vm = mab.se * mab.se;
  double denom = 0.0;
  if (contextual.n_matched > 1) denom += vc * vc / (contextual.n_matched - 1);
  if (mab.n_matched > 1) denom += vm * vm / (mab.n_matched - 1);
  out.df = denom > 0 ? var_sum * var_sum / denom : 0.0;
  out.p_value = one_sided_p(out.statistic, out.df);
  return out;
}

HteReport hte_scan(const FilteredDataset& dataset, const std::vector<Contrast>& contrasts,
                   const outcomes::ItemMap& items, const HteScanConfig& cfg) {
  HteReport report;
  report.outcomes = cfg.outcomes_to_test;
  const int n_out = static_cast<int>(report.outcomes.size());
  for (auto& row : report.linear) row.resize(n_out);
  report.calibration.resize(n_out);
  report.autoc.resize(n_out);
  report.policy_comparison.resize(n_out);
  if (contrasts.empty() || n_out == 0) return report;

  report.details.resize(contrasts.size());
  for (size_t ci = 0; ci < contrasts.size(); ++ci) {
    report.details[ci].question_id = contrasts[ci].question_id;
    report.details[ci].treat = contrasts[ci].treat;
    report.details[ci].control = contrasts[ci].control;
  }

  ContextCache cache = build_context_cache(dataset, items);

  // p-value collection; BH runs per test-type x outcome family afterwards.
  struct Entry {
    int contrast;
    int covariate;  // -1 for forest-based tests
    double p;
    size_t detail_slot;
  };
  std::vector<std::vector<Entry>> linear_family(n_out), calib_family(n_out),
      autoc_family(n_out), policy_family(n_out);

  auto fail = [&](size_t ci, const std::string& test, const std::string& outcome,
                  const std::exception& e) {
    report.failures.push_back({contrasts[ci].question_id, contrasts[ci].treat, test,
                               outcome, e.what()});
  };
  auto add_detail = [&](size_t ci, std::string test, const std::string& outcome,
                        double p) {
    auto& tests = report.details[ci].tests;
    tests.push_back({std::move(test), outcome, p, p, false});
    return tests.size() - 1;
  };

  for (size_t ci = 0; ci < contrasts.size(); ++ci) {
    const Contrast& contrast = contrasts[ci];
    for (int oi = 0; oi < n_out; ++oi) {
      const mab::Measure outcome = report.outcomes[oi];
      const std::string outcome_name = mab::to_string(outcome);

      TreatmentDataset td;
      try {
        td = build_treatment_dataset(contrast.question_id, dataset, contrast.treat,
                                     contrast.control, outcome, items,
                                     cfg.outcome_cfg, &cache);
      } catch (const std::exception& e) {
        fail(ci, "build_treatment_dataset", outcome_name, e);
        continue;
      }
      if (oi == 0)
        report.details[ci].n_samples = static_cast<int>(td.samples.size());

      for (int f = 0; f < context::kNumFeatures; ++f) {
        const std::string test_name =
            std::string("linear:") + context::kFeatureNames[f];
        try {
          auto fit = linear_hte_test(td, static_cast<context::Feature>(f));
          size_t slot = add_detail(ci, test_name, outcome_name, fit.p_wx);
          linear_family[oi].push_back({static_cast<int>(ci), f, fit.p_wx, slot});
        } catch (const std::exception& e) {
          fail(ci, test_name, outcome_name, e);
        }
      }

      // Honest holdout: the forest trains on one half, every forest-based
      // test evaluates on the other.
      const int n = static_cast<int>(td.samples.size());
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      const std::uint64_t pair_stream =
          static_cast<std::uint64_t>(ci) * n_out + static_cast<std::uint64_t>(oi);
      Rng rng(Rng::derive(cfg.seed, pair_stream));
      for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(i + 1));
        std::swap(order[i], order[j]);
      }
      int holdout_n = std::clamp(
          static_cast<int>(std::lround(cfg.holdout_fraction * n)), 1, n - 1);
      std::vector<int> holdout_ids(order.begin(), order.begin() + holdout_n);
      std::vector<int> train_ids(order.begin() + holdout_n, order.end());
      TreatmentDataset train_td = subset_dataset(td, train_ids);
      TreatmentDataset holdout_td = subset_dataset(td, holdout_ids);

      CateModel model;
      try {
        model = fit_cate_forest(train_td, cfg.forest, Rng::derive(cfg.seed, pair_stream * 4 + 1));
      } catch (const std::exception& e) {
        fail(ci, "fit_cate_forest", outcome_name, e);
        continue;
      }

      try {
        auto cal = calibration_test(model, holdout_td);
        size_t slot = add_detail(ci, "calibration", outcome_name, cal.p_value);
        calib_family[oi].push_back({static_cast<int>(ci), -1, cal.p_value, slot});
      } catch (const std::exception& e) {
        fail(ci, "calibration", outcome_name, e);
      }

      try {
        auto rt = rate_autoc(model, holdout_td, Rng::derive(cfg.seed, pair_stream * 4 + 2));
        size_t slot = add_detail(ci, "autoc", outcome_name, rt.p_value);
        autoc_family[oi].push_back({static_cast<int>(ci), -1, rt.p_value, slot});
      } catch (const std::exception& e) {
        fail(ci, "autoc", outcome_name, e);
      }

      try {
        auto policy = derive_contextual_policy(model, contrast.question_id,
                                               contrast.treat, contrast.control);
        // Baseline: the single arm a bandit would deploy, picked on the
        // training half so the holdout comparison stays out-of-sample.
        ArmSplit train_arms = split_by_arm(train_td);
        if (train_arms.treat.empty() || train_arms.control.empty())
          throw stats::DegenerateSampleError("training half lost an arm");
        int best_arm =
            stats::mean(train_arms.treat) > stats::mean(train_arms.control) ? 1 : 0;
        auto pv_contextual = estimate_policy_value(policy, holdout_td);
        auto pv_constant = estimate_constant_policy_value(best_arm, holdout_td);
        auto cmp = compare_policy_values(pv_contextual, pv_constant);
        size_t slot = add_detail(ci, "policy_comparison", outcome_name, cmp.p_value);
        policy_family[oi].push_back({static_cast<int>(ci), -1, cmp.p_value, slot});
      } catch (const std::exception& e) {
        fail(ci, "policy_comparison", outcome_name, e);
      }
    }
  }

  auto settle = [&](std::vector<Entry>& family, int oi,
                    auto&& cell_for) {
    if (family.empty()) return;
    std::vector<double> ps;
    ps.reserve(family.size());
    for (const auto& e : family) ps.push_back(e.p);
    std::vector<double> adjusted = stats::bh_adjust(ps);
    std::vector<bool> rejected = stats::bh_reject(ps, cfg.fdr_q);
    for (size_t i = 0; i < family.size(); ++i) {
      const Entry& e = family[i];
      bool detected = rejected[i] && e.p < cfg.alpha;
      DetectionCell& cell = cell_for(e, oi);
      cell.total += 1;
      cell.detected += detected ? 1 : 0;
      auto& detail = report.details[e.contrast].tests[e.detail_slot];
      detail.p_adjusted = adjusted[i];
      detail.detected = detected;
    }
  };

  for (int oi = 0; oi < n_out; ++oi) {
    settle(linear_family[oi], oi, [&](const Entry& e, int o) -> DetectionCell& {
      return report.linear[e.covariate][o];
    });
    settle(calib_family[oi], oi, [&](const Entry&, int o) -> DetectionCell& {
      return report.calibration[o];
    });
    settle(autoc_family[oi], oi, [&](const Entry&, int o) -> DetectionCell& {
      return report.autoc[o];
    });
    settle(policy_family[oi], oi, [&](const Entry&, int o) -> DetectionCell& {
      return report.policy_comparison[o];
    });
  }
  return report;
}

void write_linear_hte_csv(std::ostream& out, const HteReport& report) {
  out << "covariate";
  for (auto m : report.outcomes) out << ',' << mab::to_string(m);
  out << '\n';
  for (int f = 0; f < context::kNumFeatures; ++f) {
    out << context::kFeatureNames[f];
    for (size_t oi = 0; oi < report.outcomes.size(); ++oi)
      out << ',' << csv_cell(report.linear[f][oi].proportion());
    out << '\n';
  }
}

void write_forest_hte_csv(std::ostream& out, const HteReport& report) {
  out << "test";
  for (auto m : report.outcomes) out << ',' << mab::to_string(m);
  out << '\n';
  const std::pair<const char*, const std::vector<DetectionCell>*> rows[] = {
      {"calibration", &report.calibration},
      {"autoc", &report.autoc},
      {"policy_comparison", &report.policy_comparison},
  };
  for (const auto& [name, cells] : rows) {
    out << name;
    for (size_t oi = 0; oi < report.outcomes.size(); ++oi)
      out << ',' << csv_cell((*cells)[oi].proportion());
    out << '\n';
  }
}

std::string report_to_json(const HteReport& report) {
  json j;
  j["outcomes"] = json::array();
  for (auto m : report.outcomes) j["outcomes"].push_back(mab::to_string(m));
  j["policy_value_test"] = "welch one-sided, matched sets treated as independent";

  auto cells = [](const std::vector<DetectionCell>& row) {
    json arr = json::array();
    for (const auto& c : row)
      arr.push_back({{"detected", c.detected}, {"total", c.total}});
    return arr;
  };
  j["linear"] = json::object();
  for (int f = 0; f < context::kNumFeatures; ++f)
    j["linear"][context::kFeatureNames[f]] = cells(report.linear[f]);
  j["calibration"] = cells(report.calibration);
  j["autoc"] = cells(report.autoc);
  j["policy_comparison"] = cells(report.policy_comparison);

  j["contrasts"] = json::array();
  for (const auto& d : report.details) {
    json tests = json::array();
    for (const auto& t : d.tests)
      tests.push_back({{"test", t.test},
                       {"outcome", t.outcome},
                       {"p", t.p},
                       {"p_adjusted", t.p_adjusted},
                       {"detected", t.detected}});
    j["contrasts"].push_back({{"question_id", d.question_id},
                              {"treat", d.treat},
                              {"control", d.control},
                              {"n_samples", d.n_samples},
                              {"tests", std::move(tests)}});
  }

  j["failures"] = json::array();
  for (const auto& f : report.failures)
    j["failures"].push_back({{"question_id", f.question_id},
                             {"treat", f.treat},
                             {"test", f.test},
                             {"outcome", f.outcome},
                             {"reason", f.reason}});
  return j.dump(2);
}

}  // namespace tutorkit::causal
