#pragma once

#include <map>
#include <string>
#include <vector>

#include "specocc/common.hpp"
#include "specocc/data_model.hpp"
#include "specocc/dataset.hpp"
#include "specocc/ffa.hpp"
#include "specocc/labeling.hpp"
#include "specocc/outage.hpp"

namespace specocc {

// Known classifier names: nbc, dt, svm, lr, hmm, trained-hmm, svm-ffa.
extern const std::vector<std::string> kKnownClassifiers;

struct ExperimentConfig {
  // data source: exactly one of the two
  std::string csv_path;                 // when non-empty, load this file
  GeneratorConfig generator;            // otherwise synthesize
  std::string preset;                   // optional preset id behind `generator`

  BandConfig band;
  int days = 1;
  int slots_per_day = 1440;
  std::vector<double> gammas;
  std::vector<double> ms_grid;
  std::vector<double> split_ratios;
  std::vector<std::string> classifiers;
  int out_su = 3;
  OutageMode outage_mode = OutageMode::AsWritten;
  SwarmConfig swarm;
  std::uint64_t seed = 1;
  std::string output_dir = "out";

  int lr_max_bins = 64;  // LR is skipped above this bin count
  int lr_max_predictors = 15;
  int dt_min_obs_per_node = 17;
  double svm_box_constraint = 1.0;
  double target_protection = 0.9;
  bool record_timings = true;

  void validate() const;
  std::string to_json() const;
  static ExperimentConfig from_json(const std::string& text);
  static ExperimentConfig from_json_file(const std::string& path);
};

GeneratorConfig resolve_preset(const std::string& preset, std::uint64_t seed);

struct ComparisonReport {
  struct Row {
    int day = 0;
    std::string classifier;
    double split_ratio = 0;
    Metrics metrics;
  };
  struct OutageRow {
    int day = 0;
    std::string classifier;
    double expected = 1;
    double evaluated = 1;
  };
  struct DayCalibration {
    int day = 0;
    double split_ratio = 0;
    LabelingCriteria criteria;
    CalibrationReport report;
    BSelection b;
  };
  struct TuningRow {
    int day = 0;
    int iteration = 0;
    double best_box_constraint = 0;
    double best_ca = 0;
  };

  std::vector<Row> rows;
  std::vector<OutageRow> outage_rows;
  std::vector<DayCalibration> calibrations;
  std::vector<TuningRow> tuning_rows;
  std::vector<std::string> notes;  // skipped days, warnings

  std::vector<std::pair<double, double>> occupancy_vs_threshold_table;
  std::vector<double> bin_occupancy_profile;

  std::map<std::string, double> mean_ca() const;
  std::map<std::string, double> mean_fit_seconds() const;
  std::map<std::string, double> mean_predict_seconds() const;
};

ComparisonReport run_experiment(const ExperimentConfig& cfg);

// Writes comparison.csv, outage.csv, calibration.json,
// occupancy_vs_threshold.csv, bin_occupancy.csv, tuning_history.csv.
void emit_reports(const ComparisonReport& report, const std::string& dir);

}  // namespace specocc
