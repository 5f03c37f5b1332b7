#include "specocc/hmm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace specocc {

using nlohmann::json;

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double safe_log(double p) { return p > 0 ? std::log(p) : kNegInf; }
}  // namespace

void HmmModel::validate() const {
  if (num_symbols < 1) throw ConfigError("HmmModel: num_symbols must be >= 1");
  for (int s = 0; s < 2; ++s) {
    double row = 0;
    for (double p : transition[s]) {
      if (p < 0) throw ConfigError("HmmModel: negative transition probability");
      row += p;
    }
    if (std::abs(row - 1.0) > 1e-12) throw ConfigError("HmmModel: transition row must sum to 1");
    if (static_cast<int>(emission[s].size()) != num_symbols)
      throw ConfigError("HmmModel: emission row size mismatch");
    row = 0;
    for (double p : emission[s]) {
      if (p < 0) throw ConfigError("HmmModel: negative emission probability");
      row += p;
    }
    if (std::abs(row - 1.0) > 1e-12) throw ConfigError("HmmModel: emission row must sum to 1");
  }
  if (initial[0] < 0 || initial[1] < 0 || std::abs(initial[0] + initial[1] - 1.0) > 1e-12)
    throw ConfigError("HmmModel: initial distribution must sum to 1");
}

HmmModel default_hmm_model(int num_symbols) {
  HmmModel m;
  m.num_symbols = num_symbols;
  m.transition = {{{0.7, 0.3}, {0.3, 0.7}}};
  m.initial = {0.5, 0.5};
  if (num_symbols == 2) {
    m.emission[0] = {0.8, 0.2};
    m.emission[1] = {0.2, 0.8};
  } else {
    // Identity-leaning: state s favors the matching half of the alphabet.
    for (int s = 0; s < 2; ++s) {
      m.emission[s].assign(num_symbols, 0.0);
      double total = 0;
      for (int g = 0; g < num_symbols; ++g) {
        const double frac = num_symbols == 1 ? 0.5 : static_cast<double>(g) / (num_symbols - 1);
        m.emission[s][g] = s == 1 ? 0.2 + 0.6 * frac : 0.8 - 0.6 * frac;
        total += m.emission[s][g];
      }
      for (double& p : m.emission[s]) p /= total;
    }
  }
  m.validate();
  return m;
}

std::vector<int> discretize_observations(const OccupancyVector& occ, double split) {
  if (!(split > 0 && split < 1))
    throw ConfigError("discretize_observations: split must lie in (0,1)");
  std::vector<int> out(occ.values.size());
  for (size_t i = 0; i < occ.values.size(); ++i) out[i] = occ.values[i] < split ? 0 : 1;
  return out;
}

std::vector<int> discretize_observations_uniform(const OccupancyVector& occ, int num_symbols) {
  if (num_symbols < 1) throw ConfigError("discretize_observations_uniform: need >= 1 symbol");
  std::vector<int> out(occ.values.size());
  for (size_t i = 0; i < occ.values.size(); ++i)
    out[i] = std::min(num_symbols - 1, static_cast<int>(occ.values[i] * num_symbols));
  return out;
}

double hmm_forward(const HmmModel& model, const std::vector<int>& obs) {
  model.validate();
  if (obs.empty()) throw ConfigError("hmm_forward: empty observation sequence");
  for (int o : obs)
    if (o < 0 || o >= model.num_symbols)
      throw ConfigError("hmm_forward: symbol index out of range");

  std::array<double, 2> alpha;
  double log_scale = 0;
  for (int s = 0; s < 2; ++s) alpha[s] = model.initial[s] * model.emission[s][obs[0]];
  for (size_t t = 0;; ++t) {
    const double scale = alpha[0] + alpha[1];
    if (scale <= 0) return kNegInf;
    alpha[0] /= scale;
    alpha[1] /= scale;
    log_scale += std::log(scale);
    if (t + 1 == obs.size()) break;
    std::array<double, 2> next;
    for (int s = 0; s < 2; ++s)
      next[s] = (alpha[0] * model.transition[0][s] + alpha[1] * model.transition[1][s]) *
                model.emission[s][obs[t + 1]];
    alpha = next;
  }
  return log_scale;
}

ViterbiResult hmm_viterbi(const HmmModel& model, const std::vector<int>& obs) {
  model.validate();
  if (obs.empty()) throw ConfigError("hmm_viterbi: empty observation sequence");
  for (int o : obs)
    if (o < 0 || o >= model.num_symbols)
      throw ConfigError("hmm_viterbi: symbol index out of range");

  const size_t T = obs.size();
  std::vector<std::array<double, 2>> delta(T);
  std::vector<std::array<int, 2>> back(T);

  for (int s = 0; s < 2; ++s)
    delta[0][s] = safe_log(model.initial[s]) + safe_log(model.emission[s][obs[0]]);
  for (size_t t = 1; t < T; ++t) {
    for (int s = 0; s < 2; ++s) {
      // strict '>' keeps the lower-index predecessor on ties
      const double from0 = delta[t - 1][0] + safe_log(model.transition[0][s]);
      const double from1 = delta[t - 1][1] + safe_log(model.transition[1][s]);
      if (from1 > from0) {
        delta[t][s] = from1;
        back[t][s] = 1;
      } else {
        delta[t][s] = from0;
        back[t][s] = 0;
      }
      delta[t][s] += safe_log(model.emission[s][obs[t]]);
    }
  }

  ViterbiResult res;
  res.states.resize(T);
  int last = delta[T - 1][1] > delta[T - 1][0] ? 1 : 0;
  res.log_prob = delta[T - 1][last];
  res.zero_likelihood = res.log_prob == kNegInf;
  res.states[T - 1] = last;
  for (size_t t = T - 1; t > 0; --t) {
    last = back[t][last];
    res.states[t - 1] = last;
  }
  if (res.zero_likelihood) std::fill(res.states.begin(), res.states.end(), 0);
  return res;
}

HmmModel estimate_hmm(const std::vector<int>& states, const std::vector<int>& obs,
                      int num_symbols, double alpha) {
  if (states.size() != obs.size() || states.size() < 2)
    throw ConfigError("estimate_hmm: need equal-length sequences with T >= 2");
  for (int s : states)
    if (s < 0 || s > 1) throw ConfigError("estimate_hmm: state index out of range");
  for (int o : obs)
    if (o < 0 || o >= num_symbols) throw ConfigError("estimate_hmm: symbol out of range");

  HmmModel m;
  m.num_symbols = num_symbols;

  std::array<std::array<double, 2>, 2> trans_count = {{{0, 0}, {0, 0}}};
  std::array<std::vector<double>, 2> emit_count;
  for (int s = 0; s < 2; ++s) emit_count[s].assign(num_symbols, 0.0);
  for (size_t t = 0; t + 1 < states.size(); ++t) ++trans_count[states[t]][states[t + 1]];
  for (size_t t = 0; t < states.size(); ++t) ++emit_count[states[t]][obs[t]];

  for (int s = 0; s < 2; ++s) {
    const double trow = trans_count[s][0] + trans_count[s][1] + 2 * alpha;
    for (int s2 = 0; s2 < 2; ++s2)
      m.transition[s][s2] = trow > 0 ? (trans_count[s][s2] + alpha) / trow : 0.5;
    double erow = num_symbols * alpha;
    for (double c : emit_count[s]) erow += c;
    m.emission[s].resize(num_symbols);
    for (int g = 0; g < num_symbols; ++g)
      m.emission[s][g] = erow > 0 ? (emit_count[s][g] + alpha) / erow : 1.0 / num_symbols;
  }
  const double irow = 1 + 2 * alpha;
  for (int s = 0; s < 2; ++s) m.initial[s] = ((states[0] == s ? 1.0 : 0.0) + alpha) / irow;
  m.validate();
  return m;
}

Metrics hmm_classify(const HmmModel& model, const std::vector<int>& obs,
                     const PuLabelVector& reference) {
  if (obs.size() != reference.values.size())
    throw ConfigError("hmm_classify: observation/reference length mismatch");
  const auto res = hmm_viterbi(model, obs);
  std::vector<std::uint8_t> predicted(res.states.size());
  for (size_t i = 0; i < res.states.size(); ++i)
    predicted[i] = static_cast<std::uint8_t>(res.states[i]);
  return evaluate(predicted, reference.values);
}

std::string HmmModel::to_json() const {
  json j;
  j["format_version"] = 1;
  j["model"] = "hmm";
  j["transition"] = transition;
  j["emission"] = emission;
  j["initial"] = initial;
  j["num_symbols"] = num_symbols;
  return j.dump(2);
}

HmmModel HmmModel::from_json(const std::string& text) {
  HmmModel m;
  try {
    json j = json::parse(text);
    m.transition = j.at("transition").get<std::array<std::array<double, 2>, 2>>();
    m.emission = j.at("emission").get<std::array<std::vector<double>, 2>>();
    m.initial = j.at("initial").get<std::array<double, 2>>();
    m.num_symbols = j.at("num_symbols").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("HmmModel JSON: ") + e.what());
  }
  m.validate();
  return m;
}

}  // namespace specocc
