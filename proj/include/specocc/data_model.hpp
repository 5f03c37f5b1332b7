#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specocc/common.hpp"

namespace specocc {

struct BandConfig {
  std::string name;
  double f_start_mhz = 0;
  double f_stop_mhz = 0;
  int num_bins = 0;
  double bin_width_mhz = 0;

  // Throws ConfigError when the band geometry is inconsistent.
  void validate() const;
};

// Received power grid: one row per one-minute slot, one column per bin.
struct PowerMatrix {
  BandConfig band;
  Grid<double> values;  // dBm
  double slot_duration_minutes = 1.0;

  int n_slots() const { return values.rows(); }
  int n_bins() const { return values.cols(); }
};

// Cells where a PU signal was injected by the synthetic generator.
struct GroundTruth {
  Grid<std::uint8_t> pu_active;

  // 1 when any bin of the slot carries an injected PU signal.
  std::vector<std::uint8_t> slot_labels() const;
};

struct ActivityPattern {
  enum class Kind { Periodic, Aperiodic };
  Kind kind = Kind::Aperiodic;
  // periodic
  int period_slots = 10;
  double duty_cycle = 0.5;
  // aperiodic
  double occupancy_rate = 0.3;
};

// Contiguous interference block present while the PU is idle. Not part of
// the ground truth; it makes idle-slot occupancy fluctuate.
struct ClutterConfig {
  bool enabled = false;
  double width_min_frac = 0.25;
  double width_max_frac = 0.75;
};

struct GeneratorConfig {
  double noise_floor_mean = -107.0;      // dBm
  double noise_variance = 1.0;           // dBm^2
  std::array<double, 2> pu_power_range = {-104.0, -100.0};  // dBm
  ActivityPattern activity_pattern;
  char group = 'B';  // 'A' wide power span, 'B' narrow
  std::uint64_t seed = 1;
  ClutterConfig clutter;

  void validate() const;

  std::string to_json() const;
  static GeneratorConfig from_json(const std::string& text);
};

// Presets matching the two observed band families: group A spans roughly
// -110..-30 dBm, group B stays within -110..-100 dBm.
GeneratorConfig group_a_preset(std::uint64_t seed, ActivityPattern::Kind kind);
GeneratorConfig group_b_preset(std::uint64_t seed, ActivityPattern::Kind kind);
BandConfig make_band(const std::string& name, double f_start, double f_stop, int num_bins);

PowerMatrix load_csv(const std::string& path, const BandConfig& band);
void write_csv(const PowerMatrix& matrix, const std::string& path);

std::pair<PowerMatrix, GroundTruth> generate_synthetic(const GeneratorConfig& cfg, int n,
                                                       const BandConfig& band);

// (power, cumulative fraction) over sorted distinct values.
std::vector<std::pair<double, double>> empirical_cdf(const PowerMatrix& matrix);

}  // namespace specocc
