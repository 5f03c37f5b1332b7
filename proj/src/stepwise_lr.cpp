#include "specocc/stepwise_lr.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace specocc {

using nlohmann::json;

namespace {

// Cholesky solve of a small SPD system; returns false when not SPD.
bool solve_spd(std::vector<std::vector<double>> m, std::vector<double> rhs,
               std::vector<double>& out) {
  const int p = static_cast<int>(rhs.size());
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = m[i][j];
      for (int t = 0; t < j; ++t) s -= m[i][t] * m[j][t];
      if (i == j) {
        if (s <= 1e-10) return false;
        m[i][i] = std::sqrt(s);
      } else {
        m[i][j] = s / m[j][j];
      }
    }
  }
  // forward then back substitution
  for (int i = 0; i < p; ++i) {
    double s = rhs[i];
    for (int t = 0; t < i; ++t) s -= m[i][t] * rhs[t];
    rhs[i] = s / m[i][i];
  }
  out.assign(p, 0.0);
  for (int i = p - 1; i >= 0; --i) {
    double s = rhs[i];
    for (int t = i + 1; t < p; ++t) s -= m[t][i] * out[t];
    out[i] = s / m[i][i];
  }
  return true;
}

}  // namespace

LrModel lr_fit(const Dataset& train, int max_predictors, const LrOptions& options) {
  train.check();
  if (max_predictors < 1) throw ConfigError("lr_fit: max_predictors must be >= 1");
  const int n = train.n(), k = train.k();
  if (n == 0) throw ConfigError("lr_fit: empty training set");

  // Sufficient statistics; features and labels are binary.
  std::vector<double> col_sum(k, 0), xty(k, 0);
  Grid<double> gram(k, k);
  double y_sum = 0;
  for (int i = 0; i < n; ++i) y_sum += train.labels[i];
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!train.features(i, j)) continue;
      col_sum[j] += 1;
      xty[j] += train.labels[i];
    }
  }
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += train.features(i, a) & train.features(i, b);
      gram(a, b) = gram(b, a) = s;
    }
  const double yty = y_sum;  // labels in {0,1}

  // Least squares for [intercept, selected..., candidate?]; returns SSE.
  auto fit_subset = [&](const std::vector<int>& feats, std::vector<double>& coef) -> double {
    const int p = static_cast<int>(feats.size()) + 1;
    std::vector<std::vector<double>> m(p, std::vector<double>(p, 0));
    std::vector<double> rhs(p, 0);
    m[0][0] = n;
    rhs[0] = y_sum;
    for (int a = 0; a < p - 1; ++a) {
      m[0][a + 1] = m[a + 1][0] = col_sum[feats[a]];
      rhs[a + 1] = xty[feats[a]];
      for (int b = 0; b < p - 1; ++b) m[a + 1][b + 1] = gram(feats[a], feats[b]);
    }
    if (!solve_spd(m, rhs, coef)) return std::numeric_limits<double>::quiet_NaN();
    double fit = coef[0] * rhs[0];
    for (int a = 0; a < p - 1; ++a) fit += coef[a + 1] * rhs[a + 1];
    return std::max(0.0, yty - fit);
  };

  LrModel model;
  model.coefficients.assign(k, 0.0);

  std::vector<int> selected;
  std::vector<double> coef;
  double sse = fit_subset(selected, coef);
  model.sse_history.push_back(sse);
  double intercept = coef[0];

  std::vector<bool> used(k, false);
  while (static_cast<int>(selected.size()) < max_predictors) {
    int best_j = -1;
    double best_sse = std::numeric_limits<double>::infinity();
    std::vector<double> best_coef;
    for (int j = 0; j < k; ++j) {
      if (used[j]) continue;
      std::vector<int> cand = selected;
      cand.push_back(j);
      std::vector<double> c;
      const double s = fit_subset(cand, c);
      if (std::isnan(s)) continue;  // singular: drop this feature
      if (s < best_sse - 1e-12) {
        best_sse = s;
        best_j = j;
        best_coef = std::move(c);
      }
    }
    if (best_j < 0) break;
    const double improvement = sse - best_sse;
    if (improvement < options.min_relative_improvement * std::max(sse, 1e-12)) break;

    selected.push_back(best_j);
    used[best_j] = true;
    sse = best_sse;
    coef = std::move(best_coef);
    intercept = coef[0];
    model.sse_history.push_back(sse);
  }

  model.intercept = intercept;
  model.selected_features = selected;
  for (size_t a = 0; a < selected.size(); ++a)
    model.coefficients[selected[a]] = coef[a + 1];
  model.final_sse = sse;
  model.intercept_only = selected.empty();
  return model;
}

std::vector<std::uint8_t> lr_predict(const LrModel& model, const Grid<std::uint8_t>& features) {
  std::vector<std::uint8_t> out(features.rows());
  for (int i = 0; i < features.rows(); ++i) {
    double z = model.intercept;
    for (int j : model.selected_features)
      if (features(i, j)) z += model.coefficients[j];
    out[i] = z >= 0.5 ? 1 : 0;
  }
  return out;
}

std::string LrModel::to_json() const {
  json j;
  j["format_version"] = 1;
  j["model"] = "lr";
  j["intercept"] = intercept;
  j["coefficients"] = coefficients;
  j["selected_features"] = selected_features;
  j["final_sse"] = final_sse;
  j["intercept_only"] = intercept_only;
  return j.dump(2);
}

LrModel LrModel::from_json(const std::string& text) {
  LrModel m;
  try {
    json j = json::parse(text);
    m.intercept = j.at("intercept").get<double>();
    m.coefficients = j.at("coefficients").get<std::vector<double>>();
    m.selected_features = j.at("selected_features").get<std::vector<int>>();
    m.final_sse = j.at("final_sse").get<double>();
    m.intercept_only = j.at("intercept_only").get<bool>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("LrModel JSON: ") + e.what());
  }
  return m;
}

}  // namespace specocc
