#pragma once

#include <string>

#include "overbern/experiments.hpp"
#include "overbern/report.hpp"

namespace overbern {

/// Shortest decimal form that parses back to the same IEEE-754 double.
std::string format_double(double value);

/// Machine report: top-level keys `config`, `aggregates`, `points`,
/// `provenance` and, unless suppressed, `meta` (the only nondeterministic
/// block). Identical config + seed give byte-identical output without meta.
std::string report_json(const ExperimentConfig& config, const BoundReport& report,
                        bool include_meta = true);
std::string report_json(const ExperimentConfig& config,
                        const ConvergenceReport& report, bool include_meta = true);

/// Per-point table, header `x1,...,xd,lhs,rhs,margin`, round-trip doubles.
std::string report_csv(const BoundReport& report);
std::string report_csv(const ConvergenceReport& report);

/// Parses a config file whose keys mirror the ExperimentConfig field names
/// (all optional); unknown keys are rejected.
ExperimentConfig config_from_json(const std::string& text);
std::string config_json(const ExperimentConfig& config);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace overbern
