#pragma once

#include "wpl/common.hpp"

namespace wpl {

// Covariate-similarity weights w_l(z_i) relative to every anchor individual l.
// Row l of `weights` holds w_l(z_i) for i = 1..n; `tau` holds the per-anchor
// bandwidths used to fill that row. Weights are normalized so the self-weight is 1.
struct WeightPlan {
  Matrix weights;          // n x n, row l = weights relative to anchor l
  Vector tau;              // length n, strictly positive (all 1 in covariate-free mode, unused)
  bool normalized = true;  // entries lie in (0, 1] with w_l(z_l) = 1
};

// Gaussian kernel scaled to unit self-weight: exp(-||anchor - other||^2 / (2 tau^2)).
double kernel_weight(const Vector& anchor, const Vector& other, double tau);

// Rule-of-thumb pilot bandwidth 1.06 * sd * n^(-1/5) for one covariate column
// (sample standard deviation, n-1 denominator).
double silverman_bandwidth(const Matrix& covariates, Index column);

// Two-step adaptive bandwidths:
//   step 1: pooled pilot h = harmonic mean of per-column Silverman bandwidths
//           (columns with zero variance carry no distance information and are skipped);
//   step 2: pilot density score k_hat(z_i) = (1/n) sum_j exp(-||z_i-z_j||^2/(2h^2)),
//           self term included — the unnormalized product-Gaussian kernel mean, which
//           is scale-free, so tau stays in covariate units;
//   tau_i = h / sqrt(k_hat(z_i)), larger where covariates are sparse. Rescaling a lone
//   covariate column by c > 0 rescales every tau_i by exactly c.
// With standardize, columns are first centered and scaled to unit sample variance.
Vector adaptive_bandwidths(const Matrix& covariates, bool standardize = false);

// Weight plans: adaptive bandwidths, a scalar override applied to every anchor, or
// the all-ones covariate-free plan.
WeightPlan build_weight_plan(const Matrix& covariates, bool standardize = false);
WeightPlan build_weight_plan(const Matrix& covariates, double tau_override,
                             bool standardize = false);
WeightPlan covariate_free_plan(Index n);

}  // namespace wpl
