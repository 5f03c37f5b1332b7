#pragma once

#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "specocc/common.hpp"
#include "specocc/dataset.hpp"
#include "specocc/svm.hpp"

namespace specocc {

struct SwarmConfig {
  int swarm_size = 10;
  int iterations = 20;
  double alpha = 1.0;  // random-walk scale
  double beta0 = 2.0;  // attractiveness at zero distance
  double psi = 1.3;    // attractiveness decay
  double low = 0.01;   // position bounds
  double high = 100.0;
  std::uint64_t seed = 1;

  void validate() const;
};

// One swarm update: every firefly moves toward each brighter one with
// attractiveness beta0*exp(-psi*d^2) plus an alpha*(rand-0.5) perturbation,
// clamped to [low, high]. The current global best keeps its position
// (elitism) and takes no random step.
std::vector<double> ffa_step(const std::vector<double>& positions,
                             const std::vector<double>& brightnesses, const SwarmConfig& cfg,
                             std::mt19937_64& rng);

struct FfaResult {
  double best_position = 0;
  double best_brightness = 0;
  // (best-ever position, best-ever brightness) after each iteration.
  std::vector<std::pair<double, double>> history;
};

FfaResult ffa_optimize(const std::function<double(double)>& objective, const SwarmConfig& cfg);

struct SvmFfaResult {
  SvmModel model;
  FfaResult tuning;
};

// Box-constraint search in log10 coordinates; objective is validation CA.
// Fit failures for a candidate position count as brightness 0. The final
// model is refit on train+validation at the best position.
SvmFfaResult svm_ffa_fit(const Dataset& train, const Dataset& validation,
                         const SwarmConfig& cfg);

}  // namespace specocc
