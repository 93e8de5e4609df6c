#pragma once

#include <string>
#include <vector>

#include "wpl/hyperparam.hpp"
#include "wpl/kernel_weights.hpp"
#include "wpl/vi_core.hpp"

namespace wpl {

// standard: per-pi global (sigma2, sigma2_beta) search + softmax averaging over pi.
// high_dim: empirical-Bayes sigma2 with a per-anchor grid over (pi, sigma2_beta).
// covariate_free: the standard scheme with every weight forced to one.
enum class FitMode { standard, high_dim, covariate_free };

struct FitRequest {
  Matrix data;                 // n x p observations
  WeightPlan plan;             // n x n weights (ignored and replaced by all-ones in covariate-free mode)
  std::vector<Index> anchors;  // individuals whose graphs are emitted (0-based; empty = all)
  double threshold = 0.5;      // edge iff symmetrized probability strictly exceeds this
  FitMode mode = FitMode::standard;
  HyperGrid grid;              // resolved candidate lists (sigma2 list unused in high_dim mode)
  FitControls controls;
  int threads = 1;
};

struct GraphEstimate {
  Index individual = 0;
  Matrix prob;       // p x p symmetrized inclusion probabilities, zero diagonal
  Matrix adjacency;  // p x p binary, adjacency_jk = 1 iff prob_jk > threshold
  // Chosen hyperparameters per response variable: one entry per softmax member in
  // standard mode, a single (pi, EB sigma2, sigma2_beta) entry in high_dim mode.
  std::vector<std::vector<HyperChoice>> hyper_provenance;
};

struct FailureRecord {
  Index anchor = 0;
  Index response = 0;
  std::string message;
};

struct EstimateResult {
  std::vector<GraphEstimate> graphs;
  std::vector<FailureRecord> failures;  // per-(anchor, response); failed rows are NaN in prob
};

// Average alpha_jk and alpha_kj; diagonal forced to zero. Off-diagonal entries must
// lie in [0, 1].
Matrix symmetrize(const Matrix& alpha_hat);

// adjacency_jk = 1 iff prob_jk > t, strictly (a tie at t yields no edge). NaN entries
// (failed regressions) never produce an edge.
Matrix threshold_graph(const Matrix& prob, double t);

// Run the full hyperparameter scheme for response j and return anchor l's averaged fit.
AveragedFit fit_one_regression(Index l, Index j, const FitRequest& request);

// Estimate the graph of every requested anchor: p regressions per anchor, symmetrized
// and thresholded. Per-(l, j) failures are recorded and leave NaNs in the probability
// matrix instead of aborting. Deterministic for fixed inputs at any thread count.
EstimateResult estimate_all(const FitRequest& request);

}  // namespace wpl
