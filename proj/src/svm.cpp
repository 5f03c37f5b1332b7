#include "specocc/svm.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace specocc {

using nlohmann::json;

namespace {

// Objective in augmented coordinates: w has k feature weights plus one
// bias component multiplying bias_scale.
double objective_aug(const Dataset& data, const std::vector<double>& w, double box_constraint,
                     double bias_scale) {
  const int n = data.n(), k = data.k();
  double reg = 0;
  for (double v : w) reg += v * v;
  double loss = 0;
  for (int i = 0; i < n; ++i) {
    double z = w[k] * bias_scale;
    for (int j = 0; j < k; ++j)
      if (data.features(i, j)) z += w[j];
    const double y = data.labels[i] ? 1.0 : -1.0;
    loss += std::max(0.0, 1.0 - y * z);
  }
  return 0.5 * reg + box_constraint * loss;
}

}  // namespace

double svm_objective(const Dataset& data, const std::vector<double>& weights, double bias,
                     double box_constraint, double bias_scale) {
  std::vector<double> w = weights;
  w.push_back(bias / bias_scale);
  return objective_aug(data, w, box_constraint, bias_scale);
}

SvmModel svm_fit(const Dataset& train, double box_constraint, SvmTrainInfo* info,
                 const SvmOptions& options) {
  train.check();
  if (box_constraint <= 0) throw ConfigError("svm_fit: box_constraint must be positive");
  bool has0 = false, has1 = false;
  for (std::uint8_t y : train.labels) (y ? has1 : has0) = true;
  if (!has0 || !has1) throw ConfigError("svm_fit: training data must contain both classes");

  const int n = train.n(), k = train.k();
  const double beta = options.bias_scale;
  const double C = box_constraint;

  // Dual coordinate descent on the L1-loss dual; w tracks sum alpha_i y_i x_i.
  std::vector<double> alpha(n, 0.0);
  std::vector<double> w(k + 1, 0.0);
  std::vector<double> q_diag(n);
  for (int i = 0; i < n; ++i) {
    int ones = 0;
    for (int j = 0; j < k; ++j) ones += train.features(i, j);
    q_diag[i] = ones + beta * beta;
  }

  // Monotone iterate: descent-only record of the primal objective.
  std::vector<double> w_mono = w;
  double f_mono = objective_aug(train, w_mono, C, beta);

  SvmTrainInfo local;
  SvmTrainInfo& ti = info ? *info : local;
  ti.objective_history.clear();

  double last_delta = std::numeric_limits<double>::infinity();
  int settled = 0;
  bool converged = false;

  for (int epoch = 0; epoch < options.max_epochs; ++epoch) {
    double max_violation = 0.0;
    for (int i = 0; i < n; ++i) {
      const double y = train.labels[i] ? 1.0 : -1.0;
      double z = w[k] * beta;
      for (int j = 0; j < k; ++j)
        if (train.features(i, j)) z += w[j];
      const double g = y * z - 1.0;

      double pg = g;
      if (alpha[i] <= 0.0)
        pg = std::min(g, 0.0);
      else if (alpha[i] >= C)
        pg = std::max(g, 0.0);
      max_violation = std::max(max_violation, std::abs(pg));
      if (std::abs(pg) < 1e-12) continue;

      const double a_new = std::clamp(alpha[i] - g / q_diag[i], 0.0, C);
      const double delta = (a_new - alpha[i]) * y;
      if (delta != 0.0) {
        for (int j = 0; j < k; ++j)
          if (train.features(i, j)) w[j] += delta;
        w[k] += delta * beta;
        alpha[i] = a_new;
      }
    }

    // Safeguarded monotone step toward the DCD iterate.
    double f_cand = objective_aug(train, w, C, beta);
    if (f_cand <= f_mono) {
      w_mono = w;
      f_mono = f_cand;
    } else {
      double t = 0.5;
      for (int ls = 0; ls < 20; ++ls, t *= 0.5) {
        std::vector<double> w_t(k + 1);
        for (int j = 0; j <= k; ++j) w_t[j] = w_mono[j] + t * (w[j] - w_mono[j]);
        const double f_t = objective_aug(train, w_t, C, beta);
        if (f_t < f_mono) {
          w_mono = std::move(w_t);
          f_mono = f_t;
          break;
        }
      }
    }
    const double prev =
        ti.objective_history.empty() ? std::numeric_limits<double>::infinity()
                                     : ti.objective_history.back();
    ti.objective_history.push_back(f_mono);
    ti.epochs = epoch + 1;

    last_delta = prev - f_mono;
    if (max_violation < 1e-6) {
      converged = true;
      break;
    }
    if (std::abs(last_delta) <= options.tolerance * std::max(1.0, std::abs(f_mono))) {
      if (++settled >= 5) {
        converged = true;
        break;
      }
    } else {
      settled = 0;
    }
  }

  if (!converged)
    throw ConvergenceError("svm_fit: no convergence within epoch cap", last_delta);
  ti.converged = true;

  SvmModel model;
  model.box_constraint = box_constraint;
  model.weights.assign(w_mono.begin(), w_mono.begin() + k);
  model.bias = w_mono[k] * beta;
  return model;
}

std::vector<std::uint8_t> svm_predict(const SvmModel& model, const Grid<std::uint8_t>& features) {
  std::vector<std::uint8_t> out(features.rows());
  for (int i = 0; i < features.rows(); ++i) {
    double z = model.bias;
    for (int j = 0; j < features.cols(); ++j)
      if (features(i, j)) z += model.weights[j];
    out[i] = z > model.decision_offset ? 1 : 0;
  }
  return out;
}

std::string SvmModel::to_json() const {
  json j;
  j["format_version"] = 1;
  j["model"] = "svm";
  j["weights"] = weights;
  j["bias"] = bias;
  j["box_constraint"] = box_constraint;
  j["decision_offset"] = decision_offset;
  return j.dump(2);
}

SvmModel SvmModel::from_json(const std::string& text) {
  SvmModel m;
  try {
    json j = json::parse(text);
    m.weights = j.at("weights").get<std::vector<double>>();
    m.bias = j.at("bias").get<double>();
    m.box_constraint = j.at("box_constraint").get<double>();
    m.decision_offset = j.at("decision_offset").get<double>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("SvmModel JSON: ") + e.what());
  }
  return m;
}

}  // namespace specocc
