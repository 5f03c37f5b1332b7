#include "specocc/nbc.hpp"

#include <cmath>

#include <json.hpp>

namespace specocc {

using nlohmann::json;

NbcModel nbc_fit(const Dataset& train, NbcKernel kernel) {
  train.check();
  if (train.n() == 0) throw ConfigError("nbc_fit: empty training set");
  NbcModel model;
  model.kernel = kernel;
  const int n = train.n(), k = train.k();

  std::array<int, 2> class_count = {0, 0};
  for (std::uint8_t y : train.labels) ++class_count[y];
  model.class_priors[0] = static_cast<double>(class_count[0]) / n;
  model.class_priors[1] = static_cast<double>(class_count[1]) / n;
  if (class_count[0] == 0 || class_count[1] == 0) {
    model.degenerate = true;
    model.majority = class_count[1] > class_count[0] ? 1 : 0;
  }

  if (kernel == NbcKernel::Bernoulli) {
    for (int c = 0; c < 2; ++c) model.theta[c].assign(k, 0.5);
    for (int j = 0; j < k; ++j) {
      std::array<int, 2> ones = {0, 0};
      for (int i = 0; i < n; ++i)
        if (train.features(i, j)) ++ones[train.labels[i]];
      for (int c = 0; c < 2; ++c)
        model.theta[c][j] =
            (ones[c] + kNbcSmoothing) / (class_count[c] + 2.0 * kNbcSmoothing);
    }
  } else {
    for (int c = 0; c < 2; ++c) {
      model.mean[c].assign(k, 0.0);
      model.variance[c].assign(k, 1.0);
    }
    for (int j = 0; j < k; ++j) {
      std::array<double, 2> sum = {0, 0}, sum2 = {0, 0};
      for (int i = 0; i < n; ++i) {
        const double v = train.features(i, j);
        sum[train.labels[i]] += v;
        sum2[train.labels[i]] += v * v;
      }
      for (int c = 0; c < 2; ++c) {
        if (class_count[c] == 0) continue;
        const double mu = sum[c] / class_count[c];
        double var = sum2[c] / class_count[c] - mu * mu;
        model.mean[c][j] = mu;
        model.variance[c][j] = std::max(var, 1e-9);  // floor keeps densities finite
      }
    }
  }
  return model;
}

std::array<double, 2> nbc_posterior(const NbcModel& model, std::span<const std::uint8_t> row) {
  std::array<double, 2> logp = {0, 0};
  for (int c = 0; c < 2; ++c) {
    if (model.class_priors[c] <= 0) {
      logp[c] = -std::numeric_limits<double>::infinity();
      continue;
    }
    logp[c] = std::log(model.class_priors[c]);
    for (size_t j = 0; j < row.size(); ++j) {
      if (model.kernel == NbcKernel::Bernoulli) {
        const double th = model.theta[c][j];
        logp[c] += std::log(row[j] ? th : 1.0 - th);
      } else {
        const double mu = model.mean[c][j], var = model.variance[c][j];
        const double d = row[j] - mu;
        logp[c] += -0.5 * (std::log(2.0 * M_PI * var) + d * d / var);
      }
    }
  }
  const double mx = std::max(logp[0], logp[1]);
  std::array<double, 2> p = {std::exp(logp[0] - mx), std::exp(logp[1] - mx)};
  const double z = p[0] + p[1];
  return {p[0] / z, p[1] / z};
}

std::vector<std::uint8_t> nbc_predict(const NbcModel& model, const Grid<std::uint8_t>& features) {
  std::vector<std::uint8_t> out(features.rows());
  for (int i = 0; i < features.rows(); ++i) {
    if (model.degenerate) {
      out[i] = model.majority;
      continue;
    }
    const auto p = nbc_posterior(model, features.row(i));
    out[i] = p[1] > p[0] ? 1 : 0;  // tie -> idle class
  }
  return out;
}

std::string NbcModel::to_json() const {
  json j;
  j["format_version"] = 1;
  j["model"] = "nbc";
  j["kernel"] = kernel == NbcKernel::Bernoulli ? "bernoulli" : "gaussian";
  j["class_priors"] = class_priors;
  j["theta"] = theta;
  j["mean"] = mean;
  j["variance"] = variance;
  j["degenerate"] = degenerate;
  j["majority"] = majority;
  return j.dump(2);
}

NbcModel NbcModel::from_json(const std::string& text) {
  NbcModel m;
  try {
    json j = json::parse(text);
    m.kernel =
        j.at("kernel").get<std::string>() == "bernoulli" ? NbcKernel::Bernoulli : NbcKernel::Gaussian;
    m.class_priors = j.at("class_priors").get<std::array<double, 2>>();
    m.theta = j.at("theta").get<std::array<std::vector<double>, 2>>();
    m.mean = j.at("mean").get<std::array<std::vector<double>, 2>>();
    m.variance = j.at("variance").get<std::array<std::vector<double>, 2>>();
    m.degenerate = j.at("degenerate").get<bool>();
    m.majority = j.at("majority").get<std::uint8_t>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("NbcModel JSON: ") + e.what());
  }
  return m;
}

}  // namespace specocc
