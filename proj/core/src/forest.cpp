#include "tutorkit/forest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "tutorkit/rng.hpp"

namespace tutorkit::causal {

using nlohmann::json;

std::array<double, kForestInputs> encode_features(const context::ContextVector& x) {
  std::array<double, kForestInputs> row;
  for (int i = 0; i < context::kNumFeatures; ++i) {
    row[i] = x.value[i];
    row[context::kNumFeatures + i] = x.present[i] ? 1.0 : 0.0;
  }
  return row;
}

std::vector<std::string> forest_feature_names() {
  std::vector<std::string> names;
  names.reserve(kForestInputs);
  for (const char* n : context::kFeatureNames) names.emplace_back(n);
  for (const char* n : context::kFeatureNames) names.push_back(std::string(n) + "_present");
  return names;
}

namespace {

struct FitData {
  std::vector<std::array<double, kForestInputs>> x;
  std::vector<int> w;
  std::vector<double> y;
};

struct ArmCounts {
  int n1 = 0, n0 = 0;
  double sum1 = 0.0, sum0 = 0.0;

  void add(int w, double y) {
    if (w) { ++n1; sum1 += y; } else { ++n0; sum0 += y; }
  }
  bool both() const { return n1 > 0 && n0 > 0; }
  double effect() const { return sum1 / n1 - sum0 / n0; }
  int total() const { return n1 + n0; }
};

struct TreeBuilder {
  const FitData& data;
  const ForestConfig& cfg;
  int max_features;
  Rng rng;
  Tree tree;

  TreeBuilder(const FitData& d, const ForestConfig& c, int mf, Rng r)
      : data(d), cfg(c), max_features(mf), rng(r) {}

  // Greedy split: maximize sum over children of n_child_train * (effect_child
  // - effect_parent)^2. Children must keep >= 1 train sample per arm (to
  // define their effect) and >= min_leaf estimation samples per arm.
  struct Split {
    int feature = -1;
    double threshold = 0.0;
    double gain = 0.0;
  };

  Split best_split(const std::vector<int>& train, const std::vector<int>& est,
                   double parent_effect) {
    Split best;
    std::array<int, kForestInputs> features;
    for (int i = 0; i < kForestInputs; ++i) features[i] = i;
    for (int i = 0; i < max_features; ++i) {
      const int j = i + static_cast<int>(rng.next_below(kForestInputs - i));
      std::swap(features[i], features[j]);
    }

    ArmCounts tr_total, es_total;
    for (int id : train) tr_total.add(data.w[id], data.y[id]);
    for (int id : est) es_total.add(data.w[id], data.y[id]);

    std::vector<std::pair<double, int>> tr, es;
    for (int fi = 0; fi < max_features; ++fi) {
      const int f = features[fi];
      tr.clear();
      es.clear();
      for (int id : train) tr.emplace_back(data.x[id][f], id);
      for (int id : est) es.emplace_back(data.x[id][f], id);
      std::sort(tr.begin(), tr.end());
      std::sort(es.begin(), es.end());
      if (tr.front().first == tr.back().first) continue;

      // Candidate thresholds: distinct train values except the largest,
      // thinned to max_thresholds.
      std::vector<double> candidates;
      for (size_t i = 0; i + 1 < tr.size(); ++i) {
        if (tr[i].first < tr[i + 1].first) candidates.push_back(tr[i].first);
      }
      if (static_cast<int>(candidates.size()) > cfg.max_thresholds) {
        std::vector<double> thinned;
        thinned.reserve(cfg.max_thresholds);
        const double step =
            static_cast<double>(candidates.size()) / cfg.max_thresholds;
        for (int k = 0; k < cfg.max_thresholds; ++k) {
          thinned.push_back(candidates[static_cast<size_t>(k * step)]);
        }
        thinned.erase(std::unique(thinned.begin(), thinned.end()), thinned.end());
        candidates = std::move(thinned);
      }

      ArmCounts tr_left, es_left;
      size_t ti = 0, ei = 0;
      for (double threshold : candidates) {
        while (ti < tr.size() && tr[ti].first <= threshold) {
          tr_left.add(data.w[tr[ti].second], data.y[tr[ti].second]);
          ++ti;
        }
        while (ei < es.size() && es[ei].first <= threshold) {
          es_left.add(data.w[es[ei].second], data.y[es[ei].second]);
          ++ei;
        }
        const int es_r1 = es_total.n1 - es_left.n1;
        const int es_r0 = es_total.n0 - es_left.n0;
        if (es_left.n1 < cfg.min_leaf || es_left.n0 < cfg.min_leaf ||
            es_r1 < cfg.min_leaf || es_r0 < cfg.min_leaf) {
          continue;
        }
        ArmCounts tr_right;
        tr_right.n1 = tr_total.n1 - tr_left.n1;
        tr_right.n0 = tr_total.n0 - tr_left.n0;
        tr_right.sum1 = tr_total.sum1 - tr_left.sum1;
        tr_right.sum0 = tr_total.sum0 - tr_left.sum0;
        if (!tr_left.both() || !tr_right.both()) continue;
        const double dl = tr_left.effect() - parent_effect;
        const double dr = tr_right.effect() - parent_effect;
        const double gain = tr_left.total() * dl * dl + tr_right.total() * dr * dr;
        if (gain > best.gain) {
          best.feature = f;
          best.threshold = threshold;
          best.gain = gain;
        }
      }
    }
    return best;
  }

  int build(std::vector<int> train, std::vector<int> est) {
    const int node_id = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();

    ArmCounts es_total;
    for (int id : est) es_total.add(data.w[id], data.y[id]);
    const double leaf_effect = es_total.both() ? es_total.effect() : 0.0;

    ArmCounts tr_total;
    for (int id : train) tr_total.add(data.w[id], data.y[id]);
    if (tr_total.both() && es_total.n1 >= 2 * cfg.min_leaf &&
        es_total.n0 >= 2 * cfg.min_leaf) {
      const Split s = best_split(train, est, tr_total.effect());
      if (s.feature >= 0 && s.gain > 0.0) {
        std::vector<int> train_l, train_r, est_l, est_r;
        for (int id : train) {
          (data.x[id][s.feature] <= s.threshold ? train_l : train_r).push_back(id);
        }
        for (int id : est) {
          (data.x[id][s.feature] <= s.threshold ? est_l : est_r).push_back(id);
        }
        const int left = build(std::move(train_l), std::move(est_l));
        const int right = build(std::move(train_r), std::move(est_r));
        auto& node = tree.nodes[node_id];
        node.feature = s.feature;
        node.threshold = s.threshold;
        node.left = left;
        node.right = right;
        return node_id;
      }
    }
    tree.nodes[node_id].effect = leaf_effect;
    return node_id;
  }
};

}  // namespace

double CateModel::predict_encoded(const std::array<double, kForestInputs>& row) const {
  if (trees.empty()) return 0.0;
  double acc = 0.0;
  for (const auto& tree : trees) {
    int node = 0;
    while (tree.nodes[node].feature >= 0) {
      const auto& n = tree.nodes[node];
      node = row[n.feature] <= n.threshold ? n.left : n.right;
    }
    acc += tree.nodes[node].effect;
  }
  return acc / static_cast<double>(trees.size());
}

double CateModel::predict(const context::ContextVector& x) const {
  if (static_cast<int>(feature_names.size()) != kForestInputs) {
    throw FeatureMismatchError("model feature names do not match the context layout");
  }
  return predict_encoded(encode_features(x));
}

CateModel fit_cate_forest(const TreatmentDataset& td, const ForestConfig& config,
                          std::uint64_t seed) {
  const int n = static_cast<int>(td.samples.size());
  if (n < 4 * config.min_leaf) {
    throw InsufficientDataError("need at least 4*min_leaf = " +
                                std::to_string(4 * config.min_leaf) + " samples, have " +
                                std::to_string(n));
  }
  FitData data;
  data.x.reserve(n);
  data.w.reserve(n);
  data.y.reserve(n);
  for (const auto& s : td.samples) {
    data.x.push_back(encode_features(s.x));
    data.w.push_back(s.w ? 1 : 0);
    data.y.push_back(s.y);
  }

  CateModel model;
  model.config = config;
  model.feature_names = forest_feature_names();
  const int max_features = config.max_features > 0
                               ? std::min(config.max_features, kForestInputs)
                               : (kForestInputs + 2) / 3;

  const int subsample_n = std::max(2, static_cast<int>(config.subsample * n));
  std::vector<int> ids(n);
  for (int t = 0; t < config.n_trees; ++t) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int i = 0; i < subsample_n; ++i) {
      const int j = i + static_cast<int>(rng.next_below(n - i));
      std::swap(ids[i], ids[j]);
    }
    const int train_n =
        std::max(1, static_cast<int>(config.honest_fraction * subsample_n));
    TreeBuilder builder(data, config, max_features, rng.split(0x7265657473ULL));
    builder.tree.train_ids.assign(ids.begin(), ids.begin() + train_n);
    builder.tree.est_ids.assign(ids.begin() + train_n, ids.begin() + subsample_n);
    builder.build(builder.tree.train_ids, builder.tree.est_ids);
    model.trees.push_back(std::move(builder.tree));
  }
  return model;
}

std::string model_to_json(const CateModel& model) {
  json out;
  out["config"] = {{"n_trees", model.config.n_trees},
                   {"min_leaf", model.config.min_leaf},
                   {"subsample", model.config.subsample},
                   {"honest_fraction", model.config.honest_fraction},
                   {"max_features", model.config.max_features},
                   {"max_thresholds", model.config.max_thresholds}};
  out["feature_names"] = model.feature_names;
  json trees = json::array();
  for (const auto& tree : model.trees) {
    json nodes = json::array();
    for (const auto& n : tree.nodes) {
      nodes.push_back({{"f", n.feature},
                       {"t", n.threshold},
                       {"l", n.left},
                       {"r", n.right},
                       {"e", n.effect}});
    }
    trees.push_back({{"nodes", std::move(nodes)}});
  }
  out["trees"] = std::move(trees);
  return out.dump();
}

CateModel model_from_json(const std::string& text) {
  const json in = json::parse(text);
  CateModel model;
  const auto& cfg = in.at("config");
  model.config.n_trees = cfg.at("n_trees").get<int>();
  model.config.min_leaf = cfg.at("min_leaf").get<int>();
  model.config.subsample = cfg.at("subsample").get<double>();
  model.config.honest_fraction = cfg.at("honest_fraction").get<double>();
  model.config.max_features = cfg.at("max_features").get<int>();
  model.config.max_thresholds = cfg.at("max_thresholds").get<int>();
  model.feature_names = in.at("feature_names").get<std::vector<std::string>>();
  if (static_cast<int>(model.feature_names.size()) != kForestInputs) {
    throw FeatureMismatchError("serialized model has " +
                               std::to_string(model.feature_names.size()) +
                               " features, expected " + std::to_string(kForestInputs));
  }
  for (const auto& jt : in.at("trees")) {
    Tree tree;
    for (const auto& jn : jt.at("nodes")) {
      TreeNode n;
      n.feature = jn.at("f").get<int>();
      n.threshold = jn.at("t").get<double>();
      n.left = jn.at("l").get<int>();
      n.right = jn.at("r").get<int>();
      n.effect = jn.at("e").get<double>();
      tree.nodes.push_back(n);
    }
    model.trees.push_back(std::move(tree));
  }
  return model;
}

ForestConfig tune_forest_config(const TreatmentDataset& td, std::uint64_t seed) {
  const int n = static_cast<int>(td.samples.size());
  double p_hat = 0.0;
  for (const auto& s : td.samples) p_hat += s.w ? 1.0 : 0.0;
  p_hat /= n;
  if (p_hat <= 0.0 || p_hat >= 1.0) {
    throw InsufficientDataError("tuning needs both arms present");
  }
  std::vector<std::array<double, kForestInputs>> rows;
  rows.reserve(n);
  for (const auto& s : td.samples) rows.push_back(encode_features(s.x));
  std::vector<double> pseudo(n);
  for (int i = 0; i < n; ++i) {
    const auto& s = td.samples[i];
    pseudo[i] = s.y * ((s.w ? 1.0 : 0.0) - p_hat) / (p_hat * (1.0 - p_hat));
  }

  ForestConfig best;
  double best_score = std::numeric_limits<double>::infinity();
  int cfg_index = 0;
  for (int n_trees : {100, 200, 400}) {
    for (int min_leaf : {5, 10, 25, 50}) {
      for (double subsample : {0.35, 0.5}) {
        ForestConfig cfg;
        cfg.n_trees = n_trees;
        cfg.min_leaf = min_leaf;
        cfg.subsample = subsample;
        ++cfg_index;
        if (n < 4 * cfg.min_leaf) continue;
        const CateModel model =
            fit_cate_forest(td, cfg, Rng::derive(seed, cfg_index));

        // Out-of-bag: average only trees whose subsample skipped the point.
        std::vector<std::vector<char>> in_bag(model.trees.size(),
                                              std::vector<char>(n, 0));
        for (size_t t = 0; t < model.trees.size(); ++t) {
          for (int id : model.trees[t].train_ids) in_bag[t][id] = 1;
          for (int id : model.trees[t].est_ids) in_bag[t][id] = 1;
        }
        double err = 0.0;
        int used = 0;
        for (int i = 0; i < n; ++i) {
          double acc = 0.0;
          int cnt = 0;
          for (size_t t = 0; t < model.trees.size(); ++t) {
            if (in_bag[t][i]) continue;
            int node = 0;
            const auto& nodes = model.trees[t].nodes;
            while (nodes[node].feature >= 0) {
              node = rows[i][nodes[node].feature] <= nodes[node].threshold
                         ? nodes[node].left
                         : nodes[node].right;
            }
            acc += nodes[node].effect;
            ++cnt;
          }
          if (cnt == 0) continue;
          const double diff = pseudo[i] - acc / cnt;
          err += diff * diff;
          ++used;
        }
        if (used == 0) continue;
        err /= used;
        if (err < best_score) {
          best_score = err;
          best = cfg;
        }
      }
    }
  }
  if (!std::isfinite(best_score)) {
    throw InsufficientDataError("no tuning configuration fit the data");
  }
  return best;
}

}  // namespace tutorkit::causal
