#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wpl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr const char* version = "0.1.0";

// An observation matrix with optional per-row covariates (z has zero columns or
// has_covariates is false when the design is covariate-free).
struct DataSet {
  Matrix x;
  Matrix z;
  bool has_covariates = true;
};

// Invalid inputs: bad dimensions, out-of-range hyperparameters, degenerate covariates.
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed input files; line is 1-based, or -1 when no single line is at fault.
struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, long line_number = -1)
      : std::runtime_error(line_number > 0 ? "line " + std::to_string(line_number) + ": " + msg
                                           : msg),
        line(line_number) {}
  long line;
};

// A non-finite quantity appeared during iteration; sweep is the offending sweep index.
struct numerical_error : std::runtime_error {
  numerical_error(const std::string& msg, int sweep_index)
      : std::runtime_error(msg + " (sweep " + std::to_string(sweep_index) + ")"),
        sweep(sweep_index) {}
  int sweep;
};

// Hyperparameter search found no usable grid cell.
struct selection_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Metric undefined for the given inputs (e.g. AUC with single-class labels).
struct metric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem problems (unwritable output directory, missing file).
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class log_level : int { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

// Log threshold comes from the WPL_LOG environment variable (debug|info|warn|error|off).
inline log_level log_threshold() {
  static const log_level level = [] {
    const char* env = std::getenv("WPL_LOG");
    const std::string v = env ? env : "warn";
    if (v == "debug") return log_level::debug;
    if (v == "info") return log_level::info;
    if (v == "warn") return log_level::warn;
    if (v == "error") return log_level::error;
    return log_level::off;
  }();
  return level;
}

inline void log(log_level level, const std::string& msg) {
  static const char* names[] = {"debug", "info", "warn", "error"};
  if (static_cast<int>(level) >= static_cast<int>(log_threshold()) && level != log_level::off)
    std::fprintf(stderr, "[wpl %s] %s\n", names[static_cast<int>(level)], msg.c_str());
}

}  // namespace wpl
