#pragma once

#include <string>

#include "wpl/common.hpp"

namespace wpl {

// Strict numeric CSV: every cell a finite double, every row the same width as the
// first. Reports 1-based line numbers; a trailing newline is fine, headers are not.
Matrix load_matrix_csv(const std::string& path);

// Writes comma-separated rows with 17 significant digits, enough for an exact
// double round-trip through load_matrix_csv.
void save_matrix_csv(const std::string& path, const Matrix& m);

// data CSV plus optional covariates CSV (empty path = covariate-free); the two must
// agree on the number of rows.
DataSet load_dataset(const std::string& data_path, const std::string& covariates_path);

}  // namespace wpl
