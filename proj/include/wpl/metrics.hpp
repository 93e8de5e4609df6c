#pragma once

#include <optional>
#include <vector>

#include "wpl/common.hpp"

namespace wpl {

// Edge-recovery rates over ordered off-diagonal pairs (j, k), j != k.
// A rate whose denominator is empty (no true edges / no true non-edges) is absent.
struct PairMetrics {
  std::optional<double> sensitivity;
  std::optional<double> specificity;
};

// truth and estimate must be square 0/1 matrices of equal size, symmetric with zero
// diagonals. sensitivity = TP / (TP + FN), specificity = TN / (TN + FP).
PairMetrics sensitivity_specificity(const Matrix& truth, const Matrix& estimate);

// Probability that a uniformly random positive scores strictly higher than a uniformly
// random negative; ties contribute nothing. labels are 0/1; throws metric_error unless
// both classes are present.
double auc(const std::vector<int>& labels, const std::vector<double>& scores);

// Orders individuals so consecutive rows of z are close: starts at row 0, then
// repeatedly appends the unvisited row nearest (Euclidean) to the previous one,
// breaking ties toward the lowest index. Returns a permutation of 0..n-1.
std::vector<Index> greedy_sort_covariates(const Matrix& z);

struct IndividualMetrics {
  Index individual = 0;
  std::optional<double> sensitivity;
  std::optional<double> specificity;
  std::optional<double> auc;
};

struct MetricReport {
  std::vector<IndividualMetrics> individuals;
  // Means over the individuals for which the metric is defined; absent if none are.
  std::optional<double> mean_sensitivity;
  std::optional<double> mean_specificity;
  std::optional<double> mean_auc;
};

// Per-individual sensitivity/specificity of adjacency[i] against truth[i], plus the
// AUC of probs[i] over the unordered pairs j < k when probs is non-null. Undefined
// metrics (empty denominator, single-class AUC) are recorded as absent.
MetricReport evaluate_graphs(const std::vector<Matrix>& truths,
                             const std::vector<Matrix>& adjacencies,
                             const std::vector<Matrix>* probs = nullptr);

}  // namespace wpl
