#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rwalk/experiment.hpp"

namespace rwalk::io {

/// Doubles in CSV output are printed with 6 significant digits.
std::string fmt6(double value);

/// Parses an ExperimentConfig from its JSON document form. Only "graph" and
/// "policies" are required; everything else has defaults. Unknown keys are
/// rejected. Throws std::invalid_argument with the offending field.
ExperimentConfig parse_config_json(std::string_view text);

/// Overlays a JSON document onto an existing config: fields present in the
/// JSON win, absent fields keep their values from `base`. Used by the CLI,
/// where a config file overrides flags.
ExperimentConfig merge_config_json(std::string_view text, ExperimentConfig base);

/// Serializes a config back to JSON (inverse of parse_config_json).
std::string config_json(const ExperimentConfig& config);

GraphSpec parse_graph_spec_json(std::string_view text);

// CSV emitters. Headers are stable; see the README for the schemas.
void write_report_csv(std::ostream& out, const ExperimentResult& result);
void write_cs_dist_csv(std::ostream& out, const ExperimentResult& result);
void write_mnl_dist_csv(std::ostream& out, const ExperimentResult& result);
void write_partial_cover_csv(std::ostream& out, const ExperimentResult& result);
void write_visit_hist_csv(std::ostream& out, const ExperimentResult& result);
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// Writes report.csv, cs_dist.csv, mnl_dist.csv, partial_cover.csv and
/// visit_hist.csv into `dir` (created if missing). On failure every file
/// written by this call is removed before the error propagates. Returns the
/// written paths.
std::vector<std::filesystem::path> write_experiment_csvs(
    const std::filesystem::path& dir, const ExperimentResult& result);

/// Writes sweep.csv into `dir`; same cleanup contract.
std::vector<std::filesystem::path> write_sweep_csvs(const std::filesystem::path& dir,
                                                    const SweepResult& result);

}  // namespace rwalk::io
