#include "specocc/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "specocc/decision_tree.hpp"
#include "specocc/hmm.hpp"
#include "specocc/nbc.hpp"
#include "specocc/occupancy.hpp"
#include "specocc/stepwise_lr.hpp"
#include "specocc/svm.hpp"

namespace specocc {

using nlohmann::json;

const std::vector<std::string> kKnownClassifiers = {"nbc", "dt",          "svm",    "lr",
                                                    "hmm", "trained-hmm", "svm-ffa"};

void ExperimentConfig::validate() const {
  band.validate();
  if (csv_path.empty()) generator.validate();
  if (days < 1) throw ConfigError("ExperimentConfig: days must be >= 1");
  if (slots_per_day < 4) throw ConfigError("ExperimentConfig: slots_per_day must be >= 4");
  if (gammas.empty()) throw ConfigError("ExperimentConfig: gamma grid is empty");
  if (ms_grid.empty()) throw ConfigError("ExperimentConfig: ms_grid is empty");
  if (split_ratios.empty()) throw ConfigError("ExperimentConfig: split_ratios is empty");
  for (double r : split_ratios)
    if (!(r > 0 && r < 1)) throw ConfigError("ExperimentConfig: split ratios must lie in (0,1)");
  if (classifiers.empty()) throw ConfigError("ExperimentConfig: classifier set is empty");
  for (const auto& c : classifiers)
    if (std::find(kKnownClassifiers.begin(), kKnownClassifiers.end(), c) ==
        kKnownClassifiers.end())
      throw ConfigError("ExperimentConfig: unknown classifier '" + c + "'");
  if (out_su < 1) throw ConfigError("ExperimentConfig: out_su must be >= 1");
  if (!(target_protection >= 0 && target_protection <= 1))
    throw ConfigError("ExperimentConfig: target_protection must lie in [0,1]");
  swarm.validate();
}

GeneratorConfig resolve_preset(const std::string& preset, std::uint64_t seed) {
  if (preset == "group_a_periodic") return group_a_preset(seed, ActivityPattern::Kind::Periodic);
  if (preset == "group_a_aperiodic")
    return group_a_preset(seed, ActivityPattern::Kind::Aperiodic);
  if (preset == "group_b_periodic") return group_b_preset(seed, ActivityPattern::Kind::Periodic);
  if (preset == "group_b_aperiodic")
    return group_b_preset(seed, ActivityPattern::Kind::Aperiodic);
  if (preset == "group_b_clutter") {
    GeneratorConfig cfg = group_b_preset(seed, ActivityPattern::Kind::Aperiodic);
    cfg.clutter.enabled = true;
    return cfg;
  }
  throw ConfigError("resolve_preset: unknown preset '" + preset + "'");
}

std::string ExperimentConfig::to_json() const {
  json j;
  if (!csv_path.empty()) {
    j["source"] = {{"type", "csv"}, {"path", csv_path}};
  } else if (!preset.empty()) {
    j["source"] = {{"type", "synthetic"}, {"preset", preset}};
  } else {
    j["source"] = {{"type", "synthetic"}, {"generator", json::parse(generator.to_json())}};
  }
  j["band"] = {{"name", band.name},
               {"f_start_mhz", band.f_start_mhz},
               {"f_stop_mhz", band.f_stop_mhz},
               {"num_bins", band.num_bins}};
  j["days"] = days;
  j["slots_per_day"] = slots_per_day;
  j["gammas"] = gammas;
  j["ms_grid"] = ms_grid;
  j["split_ratios"] = split_ratios;
  j["classifiers"] = classifiers;
  j["out_su"] = out_su;
  j["outage_mode"] = outage_mode == OutageMode::AsWritten ? "as-written" : "complement";
  j["swarm"] = {{"swarm_size", swarm.swarm_size}, {"iterations", swarm.iterations},
                {"alpha", swarm.alpha},           {"beta0", swarm.beta0},
                {"psi", swarm.psi},               {"bounds", {swarm.low, swarm.high}},
                {"seed", swarm.seed}};
  j["seed"] = seed;
  j["output_dir"] = output_dir;
  j["lr_max_bins"] = lr_max_bins;
  j["lr_max_predictors"] = lr_max_predictors;
  j["dt_min_obs_per_node"] = dt_min_obs_per_node;
  j["svm_box_constraint"] = svm_box_constraint;
  j["target_protection"] = target_protection;
  j["record_timings"] = record_timings;
  return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("ExperimentConfig JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.seed = j.value("seed", std::uint64_t{1});
    const json& src = j.at("source");
    const std::string type = src.at("type").get<std::string>();
    if (type == "csv") {
      cfg.csv_path = src.at("path").get<std::string>();
    } else if (type == "synthetic") {
      if (src.contains("preset")) {
        cfg.preset = src.at("preset").get<std::string>();
        cfg.generator = resolve_preset(cfg.preset, cfg.seed);
      } else {
        cfg.generator = GeneratorConfig::from_json(src.at("generator").dump());
      }
    } else {
      throw ConfigError("ExperimentConfig: unknown source type '" + type + "'");
    }
    const json& b = j.at("band");
    cfg.band = make_band(b.value("name", "band"), b.at("f_start_mhz").get<double>(),
                         b.at("f_stop_mhz").get<double>(), b.at("num_bins").get<int>());
    cfg.days = j.value("days", 1);
    cfg.slots_per_day = j.value("slots_per_day", 1440);
    cfg.gammas = j.value("gammas", std::vector<double>{-105.0, -104.5, -104.0, -103.5});
    cfg.ms_grid = j.value("ms_grid",
                          std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
    cfg.split_ratios = j.value("split_ratios", std::vector<double>{0.15});
    cfg.classifiers = j.value("classifiers", std::vector<std::string>{"nbc", "dt", "svm"});
    cfg.out_su = j.value("out_su", 3);
    cfg.outage_mode = j.value("outage_mode", std::string("as-written")) == "complement"
                          ? OutageMode::Complement
                          : OutageMode::AsWritten;
    if (j.contains("swarm")) {
      const json& s = j.at("swarm");
      cfg.swarm.swarm_size = s.value("swarm_size", 10);
      cfg.swarm.iterations = s.value("iterations", 20);
      cfg.swarm.alpha = s.value("alpha", 1.0);
      cfg.swarm.beta0 = s.value("beta0", 2.0);
      cfg.swarm.psi = s.value("psi", 1.3);
      if (s.contains("bounds")) {
        cfg.swarm.low = s.at("bounds")[0].get<double>();
        cfg.swarm.high = s.at("bounds")[1].get<double>();
      }
      cfg.swarm.seed = s.value("seed", cfg.seed);
    } else {
      cfg.swarm.seed = cfg.seed;
    }
    cfg.output_dir = j.value("output_dir", std::string("out"));
    cfg.lr_max_bins = j.value("lr_max_bins", 64);
    cfg.lr_max_predictors = j.value("lr_max_predictors", 15);
    cfg.dt_min_obs_per_node = j.value("dt_min_obs_per_node", 17);
    cfg.svm_box_constraint = j.value("svm_box_constraint", 1.0);
    cfg.target_protection = j.value("target_protection", 0.9);
    cfg.record_timings = j.value("record_timings", true);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("ExperimentConfig JSON: ") + e.what());
  }
  cfg.generator.seed = cfg.seed;
  cfg.validate();
  return cfg;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("ExperimentConfig: cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json(text);
}

namespace {

PowerMatrix slice_rows(const PowerMatrix& m, int begin, int end) {
  PowerMatrix out;
  out.band = m.band;
  out.slot_duration_minutes = m.slot_duration_minutes;
  out.values = Grid<double>(end - begin, m.n_bins());
  for (int i = begin; i < end; ++i)
    for (int j = 0; j < m.n_bins(); ++j) out.values(i - begin, j) = m.values(i, j);
  return out;
}

std::vector<int> to_state_seq(const std::vector<std::uint8_t>& labels) {
  std::vector<int> out(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) out[i] = labels[i];
  return out;
}

std::vector<std::uint8_t> to_labels(const std::vector<int>& states) {
  std::vector<std::uint8_t> out(states.size());
  for (size_t i = 0; i < states.size(); ++i) out[i] = static_cast<std::uint8_t>(states[i]);
  return out;
}

class Timer {
 public:
  void start() { t0_ = std::chrono::steady_clock::now(); }
  double stop() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace

std::map<std::string, double> ComparisonReport::mean_ca() const {
  std::map<std::string, double> sum;
  std::map<std::string, int> count;
  for (const auto& r : rows) {
    sum[r.classifier] += r.metrics.ca;
    ++count[r.classifier];
  }
  for (auto& [name, v] : sum) v /= count[name];
  return sum;
}

std::map<std::string, double> ComparisonReport::mean_fit_seconds() const {
  std::map<std::string, double> sum;
  std::map<std::string, int> count;
  for (const auto& r : rows) {
    sum[r.classifier] += r.metrics.fit_seconds;
    ++count[r.classifier];
  }
  for (auto& [name, v] : sum) v /= count[name];
  return sum;
}

std::map<std::string, double> ComparisonReport::mean_predict_seconds() const {
  std::map<std::string, double> sum;
  std::map<std::string, int> count;
  for (const auto& r : rows) {
    sum[r.classifier] += r.metrics.predict_seconds;
    ++count[r.classifier];
  }
  for (auto& [name, v] : sum) v /= count[name];
  return sum;
}

ComparisonReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();

  PowerMatrix matrix;
  if (!cfg.csv_path.empty()) {
    matrix = load_csv(cfg.csv_path, cfg.band);
  } else {
    GeneratorConfig gen = cfg.generator;
    gen.seed = cfg.seed;
    matrix = generate_synthetic(gen, cfg.days * cfg.slots_per_day, cfg.band).first;
  }
  const int usable_days = std::min(cfg.days, matrix.n_slots() / cfg.slots_per_day);
  if (usable_days < 1)
    throw Error("run_experiment: data shorter than one day segment");

  ComparisonReport report;
  report.occupancy_vs_threshold_table = occupancy_vs_threshold(matrix, cfg.gammas);
  report.bin_occupancy_profile =
      bin_occupancy(threshold_status(matrix, cfg.gammas[cfg.gammas.size() / 2])).values;

  int successful = 0;
  for (int day = 0; day < usable_days; ++day) {
    const PowerMatrix day_matrix =
        slice_rows(matrix, day * cfg.slots_per_day, (day + 1) * cfg.slots_per_day);

    for (size_t ri = 0; ri < cfg.split_ratios.size(); ++ri) {
      const double ratio = cfg.split_ratios[ri];
      const int n1 = static_cast<int>(std::ceil(cfg.slots_per_day * ratio));

      LabelingCriteria criteria;
      CalibrationReport cal;
      BSelection bsel;
      try {
        // Calibration sees only the training prefix of the day.
        const PowerMatrix prefix = slice_rows(day_matrix, 0, n1);
        std::tie(criteria, cal) = calibrate(prefix, cfg.gammas, cfg.ms_grid);
        const StatusMatrix pstatus = threshold_status(prefix, criteria.gamma);
        const OccupancyVector pocc = slot_occupancy(pstatus);
        bsel = select_b(pstatus, pocc, criteria.l_oc, criteria.u_oc, cfg.target_protection);
        criteria.b_min_run = bsel.b;
      } catch (const CalibrationError& e) {
        report.notes.push_back("day " + std::to_string(day + 1) + " ratio " +
                               format_double(ratio) + " skipped: " + e.what());
        continue;
      }
      report.calibrations.push_back({day + 1, ratio, criteria, cal, bsel});

      const StatusMatrix status = threshold_status(day_matrix, criteria.gamma);
      const OccupancyVector occ = slot_occupancy(status);
      const PuLabelVector labels = label_pu(status, occ, criteria);
      const TrainTestSplit tts = split(make_dataset(status, labels), ratio);

      OccupancyVector occ_test;
      occ_test.values.assign(occ.values.begin() + n1, occ.values.end());
      OccupancyVector occ_train;
      occ_train.values.assign(occ.values.begin(), occ.values.begin() + n1);
      const double ms_mid = 0.5 * (criteria.l_oc + criteria.u_oc);

      for (const std::string& name : cfg.classifiers) {
        if (name == "lr" && cfg.band.num_bins > cfg.lr_max_bins) {
          report.notes.push_back("day " + std::to_string(day + 1) +
                                 ": lr skipped (num_bins exceeds lr_max_bins)");
          continue;
        }
        Timer timer;
        std::vector<std::uint8_t> predicted;
        double fit_s = 0, predict_s = 0;
        try {
          if (name == "nbc") {
            timer.start();
            const NbcModel m = nbc_fit(tts.train);
            fit_s = timer.stop();
            timer.start();
            predicted = nbc_predict(m, tts.test.features);
            predict_s = timer.stop();
          } else if (name == "dt") {
            timer.start();
            const DtModel m = dt_fit(tts.train, cfg.dt_min_obs_per_node);
            fit_s = timer.stop();
            timer.start();
            predicted = dt_predict(m, tts.test.features);
            predict_s = timer.stop();
          } else if (name == "svm") {
            timer.start();
            const SvmModel m = svm_fit(tts.train, cfg.svm_box_constraint);
            fit_s = timer.stop();
            timer.start();
            predicted = svm_predict(m, tts.test.features);
            predict_s = timer.stop();
          } else if (name == "lr") {
            timer.start();
            const LrModel m = lr_fit(tts.train, cfg.lr_max_predictors);
            fit_s = timer.stop();
            timer.start();
            predicted = lr_predict(m, tts.test.features);
            predict_s = timer.stop();
          } else if (name == "hmm" || name == "trained-hmm") {
            const std::vector<int> obs_test = discretize_observations(occ_test, ms_mid);
            HmmModel m = default_hmm_model(2);
            if (name == "trained-hmm") {
              timer.start();
              m = estimate_hmm(to_state_seq(tts.train.labels),
                               discretize_observations(occ_train, ms_mid), 2);
              fit_s = timer.stop();
            }
            timer.start();
            predicted = to_labels(hmm_viterbi(m, obs_test).states);
            predict_s = timer.stop();
          } else if (name == "svm-ffa") {
            const TrainTestSplit inner = split(tts.train, 0.8);
            SwarmConfig swarm = cfg.swarm;
            swarm.seed = cfg.swarm.seed * 1000003ULL + day * 131ULL + ri;
            timer.start();
            const SvmFfaResult res = svm_ffa_fit(inner.train, inner.test, swarm);
            fit_s = timer.stop();
            timer.start();
            predicted = svm_predict(res.model, tts.test.features);
            predict_s = timer.stop();
            if (ri == 0) {
              for (size_t it = 0; it < res.tuning.history.size(); ++it)
                report.tuning_rows.push_back({day + 1, static_cast<int>(it + 1),
                                              res.tuning.history[it].first,
                                              res.tuning.history[it].second});
            }
          }
        } catch (const Error& e) {
          report.notes.push_back("day " + std::to_string(day + 1) + " ratio " +
                                 format_double(ratio) + " " + name + " failed: " + e.what());
          continue;
        }

        Metrics m = evaluate(predicted, tts.test.labels);
        if (cfg.record_timings) {
          m.fit_seconds = fit_s;
          m.predict_seconds = predict_s;
        }
        report.rows.push_back({day + 1, name, ratio, m});
        ++successful;

        if (ri == 0) {
          PuLabelVector pred_vec{predicted};
          PuLabelVector ref_vec{tts.test.labels};
          const OutageReport evaluated =
              su_outage_probability(pred_vec, occ_test, cfg.out_su, cfg.outage_mode);
          const OutageReport expected =
              su_outage_probability(ref_vec, occ_test, cfg.out_su, cfg.outage_mode);
          report.outage_rows.push_back(
              {day + 1, name, expected.p_outage, evaluated.p_outage});
        }
      }
    }
  }

  if (successful == 0) throw Error("run_experiment: every day segment failed");
  return report;
}

void emit_reports(const ComparisonReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);

  auto open = [&](const std::string& name) {
    std::ofstream out(fs::path(dir) / name);
    if (!out) throw Error("emit_reports: cannot write '" + (fs::path(dir) / name).string() + "'");
    return out;
  };

  {
    auto out = open("comparison.csv");
    out << "day,classifier,split_ratio,ca,misdetections,false_alarms,fit_seconds,"
           "predict_seconds\n";
    for (const auto& r : report.rows)
      out << r.day << ',' << r.classifier << ',' << format_double(r.split_ratio) << ','
          << format_double(r.metrics.ca) << ',' << r.metrics.misdetections << ','
          << r.metrics.false_alarms << ',' << format_double(r.metrics.fit_seconds) << ','
          << format_double(r.metrics.predict_seconds) << "\n";
  }
  {
    auto out = open("outage.csv");
    out << "day,classifier,expected_outage,evaluated_outage,abs_difference\n";
    for (const auto& r : report.outage_rows)
      out << r.day << ',' << r.classifier << ',' << format_double(r.expected) << ','
          << format_double(r.evaluated) << ','
          << format_double(std::abs(r.expected - r.evaluated)) << "\n";
  }
  {
    auto out = open("calibration.json");
    json arr = json::array();
    for (const auto& c : report.calibrations) {
      json j;
      j["day"] = c.day;
      j["split_ratio"] = c.split_ratio;
      j["criteria"] = json::parse(c.criteria.to_json());
      j["report"] = json::parse(c.report.to_json());
      j["b"] = c.b.b;
      j["b_target_met"] = c.b.target_met;
      arr.push_back(j);
    }
    json root;
    root["calibrations"] = arr;
    root["notes"] = report.notes;
    out << root.dump(2) << "\n";
  }
  {
    auto out = open("occupancy_vs_threshold.csv");
    out << "gamma_dbm,mean_occupancy\n";
    for (const auto& [g, occ] : report.occupancy_vs_threshold_table)
      out << format_double(g) << ',' << format_double(occ) << "\n";
  }
  {
    auto out = open("bin_occupancy.csv");
    out << "bin,occupancy\n";
    for (size_t j = 0; j < report.bin_occupancy_profile.size(); ++j)
      out << (j + 1) << ',' << format_double(report.bin_occupancy_profile[j]) << "\n";
  }
  {
    auto out = open("tuning_history.csv");
    out << "day,iteration,best_box_constraint,best_ca\n";
    for (const auto& t : report.tuning_rows)
      out << t.day << ',' << t.iteration << ',' << format_double(t.best_box_constraint) << ','
          << format_double(t.best_ca) << "\n";
  }
}

}  // namespace specocc
