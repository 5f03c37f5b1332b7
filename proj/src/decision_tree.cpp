#include "specocc/decision_tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <json.hpp>

namespace specocc {

using nlohmann::json;

double class_entropy(int count0, int count1) {
  const int total = count0 + count1;
  if (total == 0) return 0.0;
  double h = 0.0;
  for (int c : {count0, count1}) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

namespace {

std::uint8_t majority_label(int count0, int count1) {
  return count1 > count0 ? 1 : 0;  // tie -> idle
}

}  // namespace

DtModel dt_fit(const Dataset& train, int min_obs_per_node) {
  train.check();
  if (min_obs_per_node < 1) throw ConfigError("dt_fit: min_obs_per_node must be >= 1");
  if (train.n() == 0) throw ConfigError("dt_fit: empty training set");

  DtModel model;
  model.min_obs_per_node = min_obs_per_node;
  const int k = train.k();

  std::function<int(const std::vector<int>&)> build = [&](const std::vector<int>& rows) -> int {
    int count1 = 0;
    for (int i : rows) count1 += train.labels[i];
    const int count0 = static_cast<int>(rows.size()) - count1;

    const int node_idx = static_cast<int>(model.nodes.size());
    model.nodes.emplace_back();

    const double parent_h = class_entropy(count0, count1);
    if (static_cast<int>(rows.size()) < min_obs_per_node || parent_h == 0.0) {
      model.nodes[node_idx].label = majority_label(count0, count1);
      return node_idx;
    }

    // Best binary split by information gain; ties keep the lowest index.
    int best_feature = -1;
    double best_gain = 0.0;
    for (int j = 0; j < k; ++j) {
      int n1 = 0, ones1 = 0, ones0 = 0;
      for (int i : rows) {
        if (train.features(i, j)) {
          ++n1;
          ones1 += train.labels[i];
        } else {
          ones0 += train.labels[i];
        }
      }
      const int n0 = static_cast<int>(rows.size()) - n1;
      if (n0 == 0 || n1 == 0) continue;
      const double child_h = (n0 * class_entropy(n0 - ones0, ones0) +
                              n1 * class_entropy(n1 - ones1, ones1)) /
                             rows.size();
      const double gain = parent_h - child_h;
      if (gain > best_gain + 1e-12) {
        best_gain = gain;
        best_feature = j;
      }
    }

    if (best_feature < 0) {
      model.nodes[node_idx].label = majority_label(count0, count1);
      return node_idx;
    }

    std::vector<int> rows0, rows1;
    for (int i : rows) (train.features(i, best_feature) ? rows1 : rows0).push_back(i);

    model.nodes[node_idx].leaf = false;
    model.nodes[node_idx].feature = best_feature;
    const int c0 = build(rows0);
    const int c1 = build(rows1);
    model.nodes[node_idx].child[0] = c0;
    model.nodes[node_idx].child[1] = c1;
    return node_idx;
  };

  std::vector<int> all(train.n());
  for (int i = 0; i < train.n(); ++i) all[i] = i;
  build(all);
  return model;
}

std::vector<std::uint8_t> dt_predict(const DtModel& model, const Grid<std::uint8_t>& features) {
  if (model.nodes.empty()) throw ConfigError("dt_predict: empty model");
  std::vector<std::uint8_t> out(features.rows());
  for (int i = 0; i < features.rows(); ++i) {
    int idx = 0;
    while (!model.nodes[idx].leaf)
      idx = model.nodes[idx].child[features(i, model.nodes[idx].feature)];
    out[i] = model.nodes[idx].label;
  }
  return out;
}

int DtModel::depth() const {
  std::function<int(int)> rec = [&](int idx) -> int {
    if (nodes[idx].leaf) return 0;
    return 1 + std::max(rec(nodes[idx].child[0]), rec(nodes[idx].child[1]));
  };
  return nodes.empty() ? 0 : rec(0);
}

std::string DtModel::to_json() const {
  json j;
  j["format_version"] = 1;
  j["model"] = "dt";
  j["min_obs_per_node"] = min_obs_per_node;
  json ns = json::array();
  for (const auto& n : nodes)
    ns.push_back({{"leaf", n.leaf},
                  {"label", n.label},
                  {"feature", n.feature},
                  {"child", {n.child[0], n.child[1]}}});
  j["nodes"] = ns;
  return j.dump(2);
}

DtModel DtModel::from_json(const std::string& text) {
  DtModel m;
  try {
    json j = json::parse(text);
    m.min_obs_per_node = j.at("min_obs_per_node").get<int>();
    for (const auto& nj : j.at("nodes")) {
      DtModel::Node n;
      n.leaf = nj.at("leaf").get<bool>();
      n.label = nj.at("label").get<std::uint8_t>();
      n.feature = nj.at("feature").get<int>();
      n.child[0] = nj.at("child")[0].get<int>();
      n.child[1] = nj.at("child")[1].get<int>();
      m.nodes.push_back(n);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("DtModel JSON: ") + e.what());
  }
  return m;
}

}  // namespace specocc
