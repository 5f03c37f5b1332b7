// Command-line front end: generate synthetic spectrum data, inspect its
// statistics, calibrate labeling criteria, run the classifier comparison,
// and score SU outage from a prediction file.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specocc/experiment.hpp"
#include "specocc/hmm.hpp"
#include "specocc/occupancy.hpp"
#include "specocc/outage.hpp"

namespace fs = std::filesystem;
using namespace specocc;

namespace {

struct Overrides {
  std::string config_path;
  std::string out_dir;
  std::int64_t seed = -1;
  int days = -1;
  std::string classifiers;
  std::string splits;
};

void add_common(CLI::App* cmd, Overrides& ov, bool config_required = true) {
  auto* opt = cmd->add_option("--config", ov.config_path, "experiment config JSON file");
  if (config_required) opt->required();
  cmd->add_option("--out-dir", ov.out_dir, "output directory override");
  cmd->add_option("--seed", ov.seed, "seed override");
  cmd->add_option("--days", ov.days, "day count override");
  cmd->add_option("--classifiers", ov.classifiers, "comma-separated classifier override");
  cmd->add_option("--split", ov.splits, "comma-separated split-ratio override");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

ExperimentConfig load_config(const Overrides& ov) {
  ExperimentConfig cfg = ExperimentConfig::from_json_file(ov.config_path);
  if (ov.seed >= 0) {
    cfg.seed = static_cast<std::uint64_t>(ov.seed);
    cfg.generator.seed = cfg.seed;
    cfg.swarm.seed = cfg.seed;
  }
  if (!ov.out_dir.empty()) cfg.output_dir = ov.out_dir;
  if (ov.days > 0) cfg.days = ov.days;
  if (!ov.classifiers.empty()) cfg.classifiers = split_list(ov.classifiers);
  if (!ov.splits.empty()) {
    cfg.split_ratios.clear();
    for (const auto& s : split_list(ov.splits)) cfg.split_ratios.push_back(std::stod(s));
  }
  cfg.validate();
  return cfg;
}

PowerMatrix load_or_generate(const ExperimentConfig& cfg, GroundTruth* truth = nullptr) {
  if (!cfg.csv_path.empty()) return load_csv(cfg.csv_path, cfg.band);
  GeneratorConfig gen = cfg.generator;
  gen.seed = cfg.seed;
  auto [matrix, gt] = generate_synthetic(gen, cfg.days * cfg.slots_per_day, cfg.band);
  if (truth) *truth = gt;
  return matrix;
}

int cmd_generate(const Overrides& ov) {
  ExperimentConfig cfg = load_config(ov);
  if (!cfg.csv_path.empty()) throw ConfigError("generate: config source must be synthetic");
  GroundTruth truth;
  const PowerMatrix matrix = load_or_generate(cfg, &truth);
  fs::create_directories(cfg.output_dir);
  write_csv(matrix, (fs::path(cfg.output_dir) / "power.csv").string());
  {
    std::ofstream out(fs::path(cfg.output_dir) / "ground_truth.csv");
    out << "slot,pu_active\n";
    const auto labels = truth.slot_labels();
    for (size_t i = 0; i < labels.size(); ++i) out << i << ',' << int(labels[i]) << "\n";
  }
  {
    std::ofstream out(fs::path(cfg.output_dir) / "generator.json");
    GeneratorConfig gen = cfg.generator;
    gen.seed = cfg.seed;
    out << gen.to_json() << "\n";
  }
  std::cout << "wrote " << matrix.n_slots() << " slots x " << matrix.n_bins() << " bins to "
            << cfg.output_dir << "\n";
  return 0;
}

int cmd_stats(const Overrides& ov) {
  ExperimentConfig cfg = load_config(ov);
  const PowerMatrix matrix = load_or_generate(cfg);
  fs::create_directories(cfg.output_dir);
  {
    std::ofstream out(fs::path(cfg.output_dir) / "cdf.csv");
    out << "power_dbm,cumulative_fraction\n";
    for (const auto& [p, f] : empirical_cdf(matrix))
      out << format_double(p) << ',' << format_double(f) << "\n";
  }
  {
    std::ofstream out(fs::path(cfg.output_dir) / "occupancy_vs_threshold.csv");
    out << "gamma_dbm,mean_occupancy\n";
    for (const auto& [g, occ] : occupancy_vs_threshold(matrix, cfg.gammas))
      out << format_double(g) << ',' << format_double(occ) << "\n";
  }
  {
    std::ofstream out(fs::path(cfg.output_dir) / "bin_occupancy.csv");
    out << "bin,occupancy\n";
    const auto profile =
        bin_occupancy(threshold_status(matrix, cfg.gammas[cfg.gammas.size() / 2]));
    for (size_t j = 0; j < profile.values.size(); ++j)
      out << (j + 1) << ',' << format_double(profile.values[j]) << "\n";
  }
  std::cout << "stats written to " << cfg.output_dir << "\n";
  return 0;
}

int cmd_calibrate(const Overrides& ov) {
  ExperimentConfig cfg = load_config(ov);
  const PowerMatrix matrix = load_or_generate(cfg);
  auto [criteria, report] = calibrate(matrix, cfg.gammas, cfg.ms_grid);
  const StatusMatrix status = threshold_status(matrix, criteria.gamma);
  const OccupancyVector occ = slot_occupancy(status);
  const BSelection b =
      select_b(status, occ, criteria.l_oc, criteria.u_oc, cfg.target_protection);
  criteria.b_min_run = b.b;
  fs::create_directories(cfg.output_dir);
  {
    std::ofstream out(fs::path(cfg.output_dir) / "criteria.json");
    out << criteria.to_json() << "\n";
  }
  {
    std::ofstream out(fs::path(cfg.output_dir) / "calibration.json");
    out << report.to_json() << "\n";
  }
  std::cout << "gamma=" << criteria.gamma << " l_oc=" << criteria.l_oc
            << " u_oc=" << criteria.u_oc << " B=" << criteria.b_min_run
            << (b.target_met ? "" : " (protection target not met)") << "\n";
  return 0;
}

int cmd_compare(const Overrides& ov) {
  ExperimentConfig cfg = load_config(ov);
  const ComparisonReport report = run_experiment(cfg);
  emit_reports(report, cfg.output_dir);
  std::cout << "mean CA per classifier:\n";
  for (const auto& [name, ca] : report.mean_ca())
    std::cout << "  " << name << ": " << ca << "\n";
  for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
  std::cout << "reports written to " << cfg.output_dir << "\n";
  return 0;
}

int cmd_outage(const std::string& input, int out_su, const std::string& mode_name) {
  std::ifstream in(input);
  if (!in) throw ConfigError("outage: cannot open '" + input + "'");
  std::string line;
  if (!std::getline(in, line)) throw ParseError("outage: empty input");
  PuLabelVector labels;
  OccupancyVector occ;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
      throw ParseError("outage: malformed line " + std::to_string(line_no));
    labels.values.push_back(static_cast<std::uint8_t>(std::stoi(a)));
    occ.values.push_back(std::stod(b));
  }
  const OutageMode mode =
      mode_name == "complement" ? OutageMode::Complement : OutageMode::AsWritten;
  std::cout << su_outage_probability(labels, occ, out_su, mode).to_json() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectrum occupancy analysis toolkit"};
  app.require_subcommand(1);

  Overrides ov;
  auto* generate = app.add_subcommand("generate", "synthesize a spectrum matrix");
  add_common(generate, ov);
  auto* stats = app.add_subcommand("stats", "CDF / occupancy statistics");
  add_common(stats, ov);
  auto* calibrate_cmd = app.add_subcommand("calibrate", "select gamma, [l_oc,u_oc] and B");
  add_common(calibrate_cmd, ov);
  auto* compare = app.add_subcommand("compare", "train and compare classifiers");
  add_common(compare, ov);

  std::string outage_input, outage_mode = "as-written";
  int outage_out_su = 3;
  auto* outage = app.add_subcommand("outage", "SU outage from a label,occupancy CSV");
  outage->add_option("--input", outage_input, "CSV with header and label,occupancy rows")
      ->required();
  outage->add_option("--out-su", outage_out_su, "minimum consecutive free slots");
  outage->add_option("--mode", outage_mode, "as-written | complement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(ov);
    if (stats->parsed()) return cmd_stats(ov);
    if (calibrate_cmd->parsed()) return cmd_calibrate(ov);
    if (compare->parsed()) return cmd_compare(ov);
    if (outage->parsed()) return cmd_outage(outage_input, outage_out_su, outage_mode);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
