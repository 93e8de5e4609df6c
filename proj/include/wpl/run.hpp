#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpl/common.hpp"
#include "wpl/hyperparam.hpp"
#include "wpl/simulation.hpp"
#include "wpl/vi_core.hpp"

namespace wpl {

// Everything `fit` needs; the manifest snapshots the resolved version of this.
struct RunConfig {
  std::string data_path;
  std::string covariates_path;  // empty = covariate-free data
  std::string out_dir;
  std::string grid_path;             // JSON grid file; empty = default grid
  std::optional<HyperGrid> grid;     // programmatic override, wins over grid_path
  double threshold = 0.5;
  double tau = 0.0;  // fixed bandwidth; 0 = adaptive per-individual bandwidths
  bool covariate_free = false;
  bool high_dim = false;
  bool standardize = false;
  int threads = 0;  // 0 = available parallelism
  std::uint64_t seed = 0;
  std::vector<Index> anchors;  // 0-based; empty = all individuals
  FitControls controls;
};

struct SimulateConfig {
  SimSetting setting;
  int trials = 1;
  std::string out_dir;
  std::uint64_t seed = 0;
};

struct EvalConfig {
  std::string estimates_dir;  // fit outputs, or a directory of trial_* fit outputs
  std::string truth_dir;      // simulate outputs matching the same layout
  std::string out_dir;
  bool with_auc = true;
};

// Exit statuses shared by the library drivers and the CLI.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_partial = 3;
inline constexpr int exit_other = 4;

// Fits per-anchor graphs and writes prob_<l>.csv, adj_<l>.csv (l 1-based), and
// manifest.json into out_dir. Returns exit_partial when some regressions failed
// (recorded in the manifest), exit_ok otherwise.
int run_fit(const RunConfig& config);

// Writes trial_<t>/ subdirectories with data.csv, covariates.csv (when the setting
// has covariates), truth.csv (one row per individual: the p x p adjacency flattened
// row-major), and a top-level manifest.json.
int run_simulate(const SimulateConfig& config);

// Writes metrics.csv with one row per (trial, individual) plus mean/sd summary rows
// over per-trial means.
int run_eval(const EvalConfig& config);

// Setting names used by the CLI and manifests.
std::string setting_name(SettingKind kind);
SettingKind parse_setting(const std::string& name);  // config_error listing valid names

}  // namespace wpl
