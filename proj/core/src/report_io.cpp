#include "overbern/report_io.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace overbern {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_block(const ExperimentConfig& c) {
  ordered_json j;
  j["experiment"] = to_string(c.experiment);
  j["function_id"] = c.function_id;
  j["degrees"] = c.degrees;
  j["powers"] = c.powers;
  j["constant"] = c.constant;
  j["eval_resolution"] = c.eval_resolution;
  j["moduli_mode"] = to_string(c.moduli_mode);
  j["seed"] = c.seed;
  j["h"] = c.h;
  j["trials"] = c.trials;
  j["moduli_resolution"] = c.moduli_resolution;
  j["fit_min"] = c.fit_min;
  j["fit_max"] = c.fit_max;
  return j;
}

ordered_json points_block(const std::vector<PointRecord>& points, bool with_tag) {
  ordered_json arr = ordered_json::array();
  for (const PointRecord& p : points) {
    ordered_json rec;
    rec["point"] = p.point;
    rec["lhs"] = p.lhs;
    rec["rhs"] = p.rhs;
    rec["margin"] = p.margin;
    if (with_tag) rec["inequality"] = p.tag;
    arr.push_back(std::move(rec));
  }
  return arr;
}

ordered_json provenance_block(const std::string& moduli_mode,
                              const std::vector<long long>& resolutions,
                              std::uint64_t seed) {
  ordered_json j;
  j["moduli_mode"] = moduli_mode;
  j["resolutions"] = resolutions;
  j["seed"] = seed;
  return j;
}

ordered_json meta_block() {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  char buf[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  ordered_json j;
  j["generated_at"] = buf;
  return j;
}

bool any_tag(const std::vector<PointRecord>& points) {
  for (const PointRecord& p : points) {
    if (p.tag != 0) return true;
  }
  return false;
}

std::string csv_table(const std::vector<PointRecord>& points) {
  const std::size_t d = points.empty() ? 1 : points.front().point.size();
  std::string out;
  for (std::size_t a = 1; a <= d; ++a) {
    out += "x" + std::to_string(a) + ",";
  }
  out += "lhs,rhs,margin\n";
  for (const PointRecord& p : points) {
    for (double c : p.point) {
      out += format_double(c);
      out += ',';
    }
    out += format_double(p.lhs);
    out += ',';
    out += format_double(p.rhs);
    out += ',';
    out += format_double(p.margin);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string report_json(const ExperimentConfig& config, const BoundReport& report,
                        bool include_meta) {
  ordered_json j;
  j["config"] = config_block(config);
  ordered_json agg;
  agg["max_lhs"] = report.max_lhs;
  agg["min_margin"] = report.min_margin;
  agg["pass"] = report.pass;
  agg["advisory"] = report.advisory;
  if (report.worst_ratio) agg["worst_ratio"] = *report.worst_ratio;
  j["aggregates"] = std::move(agg);
  j["points"] = points_block(report.points, any_tag(report.points));
  j["provenance"] =
      provenance_block(report.moduli_mode, report.resolutions, report.seed);
  if (include_meta) j["meta"] = meta_block();
  return j.dump(2) + "\n";
}

std::string report_json(const ExperimentConfig& config,
                        const ConvergenceReport& report, bool include_meta) {
  ordered_json j;
  j["config"] = config_block(config);
  ordered_json agg;
  agg["max_lhs"] = report.max_lhs;
  agg["min_margin"] = report.min_margin;
  agg["pass"] = report.pass;
  agg["trivially_converged"] = report.trivially_converged;
  agg["fitted_rate"] = report.fitted_rate;
  agg["expected_rate"] = report.expected_rate;
  j["aggregates"] = std::move(agg);
  j["points"] = points_block(report.points, false);
  j["provenance"] =
      provenance_block(report.moduli_mode, report.resolutions, report.seed);
  if (include_meta) j["meta"] = meta_block();
  return j.dump(2) + "\n";
}

std::string report_csv(const BoundReport& report) { return csv_table(report.points); }

std::string report_csv(const ConvergenceReport& report) {
  return csv_table(report.points);
}

ExperimentConfig config_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  if (!j.is_object()) {
    throw std::invalid_argument("config: top level must be a JSON object");
  }
  ExperimentConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "experiment") {
      c.experiment = experiment_from_string(value.get<std::string>());
    } else if (key == "function_id") {
      c.function_id = value.get<std::string>();
    } else if (key == "degrees") {
      c.degrees = value.get<std::vector<int>>();
    } else if (key == "powers") {
      c.powers = value.get<std::vector<long long>>();
    } else if (key == "constant") {
      c.constant = value.get<double>();
    } else if (key == "eval_resolution") {
      c.eval_resolution = value.get<int>();
    } else if (key == "moduli_mode") {
      c.moduli_mode = moduli_mode_from_string(value.get<std::string>());
    } else if (key == "seed") {
      c.seed = value.get<std::uint64_t>();
    } else if (key == "h") {
      c.h = value.get<double>();
    } else if (key == "trials") {
      c.trials = value.get<int>();
    } else if (key == "moduli_resolution") {
      c.moduli_resolution = value.get<int>();
    } else if (key == "fit_min") {
      c.fit_min = value.get<int>();
    } else if (key == "fit_max") {
      c.fit_max = value.get<int>();
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return c;
}

std::string config_json(const ExperimentConfig& config) {
  return config_block(config).dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

}  // namespace overbern
