#include "specocc/ffa.hpp"

#include <algorithm>
#include <cmath>

namespace specocc {

void SwarmConfig::validate() const {
  if (swarm_size < 2) throw ConfigError("SwarmConfig: swarm_size must be >= 2");
  if (iterations < 1) throw ConfigError("SwarmConfig: iterations must be >= 1");
  if (!(low < high)) throw ConfigError("SwarmConfig: low must be < high");
}

std::vector<double> ffa_step(const std::vector<double>& positions,
                             const std::vector<double>& brightnesses, const SwarmConfig& cfg,
                             std::mt19937_64& rng) {
  if (positions.size() != brightnesses.size() ||
      static_cast<int>(positions.size()) != cfg.swarm_size)
    throw ConfigError("ffa_step: list lengths must equal swarm_size");
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Elite: highest brightness, ties to the lowest index.
  int elite = 0;
  for (int i = 1; i < cfg.swarm_size; ++i)
    if (brightnesses[i] > brightnesses[elite]) elite = i;

  std::vector<double> next = positions;
  for (int i = 0; i < cfg.swarm_size; ++i) {
    if (i == elite) continue;
    for (int j = 0; j < cfg.swarm_size; ++j) {
      if (!(brightnesses[j] > brightnesses[i])) continue;
      const double d = positions[j] - next[i];
      next[i] += cfg.beta0 * std::exp(-cfg.psi * d * d) * d +
                 cfg.alpha * (unit(rng) - 0.5);
    }
    next[i] = std::clamp(next[i], cfg.low, cfg.high);
  }
  return next;
}

FfaResult ffa_optimize(const std::function<double(double)>& objective, const SwarmConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> pos_dist(cfg.low, cfg.high);

  std::vector<double> positions(cfg.swarm_size);
  for (double& p : positions) p = pos_dist(rng);
  std::vector<double> brightnesses(cfg.swarm_size);
  for (int i = 0; i < cfg.swarm_size; ++i) brightnesses[i] = objective(positions[i]);

  FfaResult res;
  int best = 0;
  for (int i = 1; i < cfg.swarm_size; ++i)
    if (brightnesses[i] > brightnesses[best]) best = i;
  res.best_position = positions[best];
  res.best_brightness = brightnesses[best];

  for (int v = 0; v < cfg.iterations; ++v) {
    positions = ffa_step(positions, brightnesses, cfg, rng);
    for (int i = 0; i < cfg.swarm_size; ++i) {
      brightnesses[i] = objective(positions[i]);
      if (brightnesses[i] > res.best_brightness) {
        res.best_brightness = brightnesses[i];
        res.best_position = positions[i];
      }
    }
    res.history.emplace_back(res.best_position, res.best_brightness);
  }
  return res;
}

SvmFfaResult svm_ffa_fit(const Dataset& train, const Dataset& validation,
                         const SwarmConfig& cfg) {
  cfg.validate();
  if (!(cfg.low > 0)) throw ConfigError("svm_ffa_fit: box-constraint bounds must be positive");
  train.check();
  validation.check();

  auto ca_at = [&](double log_box) -> double {
    const double box = std::pow(10.0, log_box);
    try {
      const SvmModel m = svm_fit(train, box);
      return evaluate(svm_predict(m, validation.features), validation.labels).ca;
    } catch (const Error&) {
      return 0.0;  // failed candidate: dark firefly
    }
  };

  SwarmConfig log_cfg = cfg;
  log_cfg.low = std::log10(cfg.low);
  log_cfg.high = std::log10(cfg.high);

  SvmFfaResult out;
  out.tuning = ffa_optimize(ca_at, log_cfg);
  // Report positions in box-constraint units.
  out.tuning.best_position = std::pow(10.0, out.tuning.best_position);
  for (auto& [p, b] : out.tuning.history) p = std::pow(10.0, p);

  // Refit on everything we were allowed to see.
  Dataset full;
  const int n = train.n() + validation.n(), k = train.k();
  full.features = Grid<std::uint8_t>(n, k);
  for (int i = 0; i < train.n(); ++i)
    for (int j = 0; j < k; ++j) full.features(i, j) = train.features(i, j);
  for (int i = 0; i < validation.n(); ++i)
    for (int j = 0; j < k; ++j) full.features(train.n() + i, j) = validation.features(i, j);
  full.labels = train.labels;
  full.labels.insert(full.labels.end(), validation.labels.begin(), validation.labels.end());

  out.model = svm_fit(full, out.tuning.best_position);
  return out;
}

}  // namespace specocc
