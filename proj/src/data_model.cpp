#include "specocc/data_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

namespace specocc {

using nlohmann::json;

void BandConfig::validate() const {
  if (!(f_stop_mhz > f_start_mhz))
    throw ConfigError("BandConfig '" + name + "': f_stop must exceed f_start");
  if (num_bins < 1) throw ConfigError("BandConfig '" + name + "': num_bins must be >= 1");
  const double span = f_stop_mhz - f_start_mhz;
  if (std::abs(num_bins * bin_width_mhz - span) > bin_width_mhz + 1e-9)
    throw ConfigError("BandConfig '" + name +
                      "': num_bins * bin_width inconsistent with band span");
}

std::vector<std::uint8_t> GroundTruth::slot_labels() const {
  std::vector<std::uint8_t> out(pu_active.rows(), 0);
  for (int i = 0; i < pu_active.rows(); ++i)
    for (int j = 0; j < pu_active.cols(); ++j)
      if (pu_active(i, j)) {
        out[i] = 1;
        break;
      }
  return out;
}

void GeneratorConfig::validate() const {
  if (noise_variance <= 0) throw ConfigError("GeneratorConfig: noise_variance must be > 0");
  if (!(pu_power_range[0] < pu_power_range[1]))
    throw ConfigError("GeneratorConfig: pu_power_range lower must be < upper");
  if (activity_pattern.kind == ActivityPattern::Kind::Periodic) {
    if (activity_pattern.period_slots < 1)
      throw ConfigError("GeneratorConfig: period_slots must be >= 1");
    if (activity_pattern.duty_cycle < 0 || activity_pattern.duty_cycle >= 1)
      throw ConfigError("GeneratorConfig: duty_cycle must be in [0,1)");
  } else {
    if (activity_pattern.occupancy_rate < 0 || activity_pattern.occupancy_rate >= 1)
      throw ConfigError("GeneratorConfig: occupancy_rate must be in [0,1)");
  }
  if (group != 'A' && group != 'B') throw ConfigError("GeneratorConfig: group must be A or B");
  if (clutter.enabled &&
      !(clutter.width_min_frac > 0 && clutter.width_min_frac <= clutter.width_max_frac &&
        clutter.width_max_frac <= 1))
    throw ConfigError("GeneratorConfig: invalid clutter width fractions");
}

std::string GeneratorConfig::to_json() const {
  json j;
  j["noise_floor_mean"] = noise_floor_mean;
  j["noise_variance"] = noise_variance;
  j["pu_power_range"] = pu_power_range;
  json ap;
  if (activity_pattern.kind == ActivityPattern::Kind::Periodic) {
    ap["type"] = "periodic";
    ap["period_slots"] = activity_pattern.period_slots;
    ap["duty_cycle"] = activity_pattern.duty_cycle;
  } else {
    ap["type"] = "aperiodic";
    ap["occupancy_rate"] = activity_pattern.occupancy_rate;
  }
  j["activity_pattern"] = ap;
  j["group"] = std::string(1, group);
  j["seed"] = seed;
  if (clutter.enabled) {
    j["clutter"] = {{"enabled", true},
                    {"width_min_frac", clutter.width_min_frac},
                    {"width_max_frac", clutter.width_max_frac}};
  }
  return j.dump(2);
}

GeneratorConfig GeneratorConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("GeneratorConfig JSON: ") + e.what());
  }
  GeneratorConfig cfg;
  try {
    cfg.noise_floor_mean = j.at("noise_floor_mean").get<double>();
    cfg.noise_variance = j.at("noise_variance").get<double>();
    cfg.pu_power_range = j.at("pu_power_range").get<std::array<double, 2>>();
    const json& ap = j.at("activity_pattern");
    const std::string type = ap.at("type").get<std::string>();
    if (type == "periodic") {
      cfg.activity_pattern.kind = ActivityPattern::Kind::Periodic;
      cfg.activity_pattern.period_slots = ap.at("period_slots").get<int>();
      cfg.activity_pattern.duty_cycle = ap.at("duty_cycle").get<double>();
    } else if (type == "aperiodic") {
      cfg.activity_pattern.kind = ActivityPattern::Kind::Aperiodic;
      cfg.activity_pattern.occupancy_rate = ap.at("occupancy_rate").get<double>();
    } else {
      throw ParseError("GeneratorConfig: unknown activity_pattern type '" + type + "'");
    }
    cfg.group = j.at("group").get<std::string>().at(0);
    cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("clutter")) {
      const json& c = j.at("clutter");
      cfg.clutter.enabled = c.value("enabled", true);
      cfg.clutter.width_min_frac = c.value("width_min_frac", 0.25);
      cfg.clutter.width_max_frac = c.value("width_max_frac", 0.75);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("GeneratorConfig JSON: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

GeneratorConfig group_a_preset(std::uint64_t seed, ActivityPattern::Kind kind) {
  GeneratorConfig cfg;
  cfg.group = 'A';
  cfg.noise_floor_mean = -107.0;
  cfg.noise_variance = 1.0;
  cfg.pu_power_range = {-60.0, -30.0};
  cfg.seed = seed;
  cfg.activity_pattern.kind = kind;
  return cfg;
}

GeneratorConfig group_b_preset(std::uint64_t seed, ActivityPattern::Kind kind) {
  GeneratorConfig cfg;
  cfg.group = 'B';
  cfg.noise_floor_mean = -107.0;
  cfg.noise_variance = 1.0;
  cfg.pu_power_range = {-103.0, -100.0};
  cfg.seed = seed;
  cfg.activity_pattern.kind = kind;
  return cfg;
}

BandConfig make_band(const std::string& name, double f_start, double f_stop, int num_bins) {
  BandConfig band;
  band.name = name;
  band.f_start_mhz = f_start;
  band.f_stop_mhz = f_stop;
  band.num_bins = num_bins;
  band.bin_width_mhz = (f_stop - f_start) / num_bins;
  band.validate();
  return band;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

PowerMatrix load_csv(const std::string& path, const BandConfig& band) {
  band.validate();
  std::ifstream in(path);
  if (!in) throw ParseError("load_csv: cannot open '" + path + "'");

  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw ParseError("load_csv: empty input '" + path + "'");
  ++line_no;
  const int k = band.num_bins;
  if (static_cast<int>(split_fields(line).size()) != k + 1)
    throw ParseError("load_csv: header at line 1 must have " + std::to_string(k + 1) +
                     " columns");

  std::vector<double> values;
  int rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (static_cast<int>(fields.size()) != k + 1)
      throw ParseError("load_csv: line " + std::to_string(line_no) + " has " +
                       std::to_string(fields.size()) + " columns, expected " +
                       std::to_string(k + 1));
    for (int j = 1; j <= k; ++j) {
      double v;
      const std::string& f = fields[j];
      auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc{} || res.ptr != f.data() + f.size())
        throw ParseError("load_csv: non-numeric value '" + f + "' at line " +
                         std::to_string(line_no));
      if (!std::isfinite(v))
        throw ParseError("load_csv: non-finite value at line " + std::to_string(line_no));
      values.push_back(v);
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("load_csv: empty input '" + path + "'");

  PowerMatrix m;
  m.band = band;
  m.values = Grid<double>(rows, k);
  m.values.data() = std::move(values);
  return m;
}

void write_csv(const PowerMatrix& matrix, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("write_csv: cannot open '" + path + "' for writing");
  out << "slot";
  for (int j = 1; j <= matrix.n_bins(); ++j) out << ",bin_" << j;
  out << "\n";
  for (int i = 0; i < matrix.n_slots(); ++i) {
    out << i;
    for (int j = 0; j < matrix.n_bins(); ++j) out << ',' << format_double(matrix.values(i, j));
    out << "\n";
  }
  if (!out) throw Error("write_csv: write failure on '" + path + "'");
}

std::pair<PowerMatrix, GroundTruth> generate_synthetic(const GeneratorConfig& cfg, int n,
                                                       const BandConfig& band) {
  cfg.validate();
  band.validate();
  if (n < 1) throw ConfigError("generate_synthetic: n must be >= 1");

  const int k = band.num_bins;
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> noise(0.0, std::sqrt(cfg.noise_variance));
  std::uniform_real_distribution<double> signal(cfg.pu_power_range[0], cfg.pu_power_range[1]);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  GroundTruth truth;
  truth.pu_active = Grid<std::uint8_t>(n, k);
  Grid<std::uint8_t> clutter_cells(n, k);

  const ActivityPattern& ap = cfg.activity_pattern;
  if (ap.kind == ActivityPattern::Kind::Periodic) {
    // Alternating contiguous bin groups, active for the first duty_cycle
    // fraction of every period.
    const int group_w = std::max(1, k / 8);
    const int on_slots = static_cast<int>(std::lround(ap.duty_cycle * ap.period_slots));
    for (int i = 0; i < n; ++i) {
      const bool slot_on = (i % ap.period_slots) < on_slots;
      if (!slot_on) continue;
      for (int j = 0; j < k; ++j)
        if ((j / group_w) % 2 == 0) truth.pu_active(i, j) = 1;
    }
  } else {
    // Two-state slot Markov chain with stationary rate occupancy_rate.
    // Each burst occupies a scattered bin subset redrawn at burst start.
    const double rate = ap.occupancy_rate;
    const double p_leave_active = 0.1;
    const double p_enter_active = rate >= 1.0 ? 1.0 : p_leave_active * rate / (1.0 - rate);
    bool active = unit(rng) < rate;
    std::vector<std::uint8_t> burst_bins(k, 0);
    auto draw_burst = [&] {
      for (int j = 0; j < k; ++j) burst_bins[j] = unit(rng) < 0.85 ? 1 : 0;
    };
    if (active) draw_burst();
    for (int i = 0; i < n; ++i) {
      if (i > 0) {
        const bool was_active = active;
        const double u = unit(rng);
        active = was_active ? (u >= p_leave_active) : (u < p_enter_active);
        if (active && !was_active) draw_burst();
      }
      if (active)
        for (int j = 0; j < k; ++j) truth.pu_active(i, j) = burst_bins[j];
    }
  }

  if (cfg.clutter.enabled) {
    std::uniform_real_distribution<double> width(cfg.clutter.width_min_frac,
                                                 cfg.clutter.width_max_frac);
    for (int i = 0; i < n; ++i) {
      bool pu_slot = false;
      for (int j = 0; j < k && !pu_slot; ++j) pu_slot = truth.pu_active(i, j);
      if (pu_slot) continue;
      const int w = std::clamp(static_cast<int>(std::lround(width(rng) * k)), 1, k);
      const int start = static_cast<int>(unit(rng) * (k - w + 1));
      for (int j = start; j < start + w; ++j) clutter_cells(i, j) = 1;
    }
  }

  PowerMatrix m;
  m.band = band;
  m.values = Grid<double>(n, k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      if (truth.pu_active(i, j) || clutter_cells(i, j)) {
        m.values(i, j) = signal(rng) + noise(rng);
      } else {
        m.values(i, j) = cfg.noise_floor_mean + noise(rng);
      }
    }
  }
  return {std::move(m), std::move(truth)};
}

std::vector<std::pair<double, double>> empirical_cdf(const PowerMatrix& matrix) {
  if (matrix.values.empty()) throw Error("empirical_cdf: empty matrix");
  std::vector<double> sorted = matrix.values.data();
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<double, double>> out;
  const double total = static_cast<double>(sorted.size());
  size_t i = 0;
  while (i < sorted.size()) {
    size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out.emplace_back(sorted[i], static_cast<double>(j) / total);
    i = j;
  }
  return out;
}

}  // namespace specocc
