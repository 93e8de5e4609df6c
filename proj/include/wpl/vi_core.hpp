#pragma once

#include "wpl/common.hpp"

namespace wpl {

// One weighted spike-and-slab regression: response x_j on predictors X_{-j} with the
// kernel weights of a single anchor individual.
struct RegressionProblem {
  Vector response;    // length n
  Matrix predictors;  // n x (p-1)
  Vector weights;     // length n, nonnegative, at least one strictly positive
};

// Hyperparameters of the spike-and-slab prior: inclusion probability pi, residual
// variance sigma2, slab variance multiplier sigma2_beta (slab variance = sigma2 * sigma2_beta).
struct HyperChoice {
  double pi = 0.5;
  double sigma2 = 1.0;
  double sigma2_beta = 1.0;
};

struct FitControls {
  int max_sweeps = 500;
  double tol = 1e-6;  // stop when |ELBO change| over one full sweep falls below tol
};

// Free parameters of the factorized variational posterior, one triple per predictor.
struct VariationalState {
  Vector alpha;  // inclusion probabilities, clamped to [1e-12, 1 - 1e-12]
  Vector mu;     // slab means
  Vector s2;     // slab variances, strictly positive
  double elbo = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Sufficient statistics of a weighted regression; everything the updates and the ELBO
// read. Rows with weight exactly zero contribute nothing to any of these.
struct SuffStats {
  Matrix gram;        // X^T W X, (p-1) x (p-1)
  Vector xty;         // X^T W y
  double yty = 0.0;   // y^T W y
  double sum_w = 0.0; // total weight mass, the effective sample size
};

SuffStats make_suff_stats(const RegressionProblem& problem);
void validate_hyper(const HyperChoice& hyper);

// s2_k = sigma2 / (1/sigma2_beta + sum_i w_i x_ik^2); independent of alpha and mu.
Vector update_s2(const SuffStats& stats, const HyperChoice& hyper);

// mu_k = (s2_k / sigma2) * sum_i w_i x_ik (y_i - sum_{m != k} x_im mu_m alpha_m),
// updated for k = 1..p-1 in sequence using the freshest values (Gauss-Seidel).
void update_mu_batch(VariationalState& state, const SuffStats& stats, const HyperChoice& hyper);

// logit alpha_k = logit pi + mu_k^2 / (2 s2_k) + log(s_k / (sigma sigma_beta)),
// computed with an overflow-safe logistic and clamped to [1e-12, 1 - 1e-12].
void update_alpha_batch(VariationalState& state, const HyperChoice& hyper);

// Closed-form ELBO: E_q[log weighted likelihood] - KL(q || spike-and-slab prior), where
// the weighted log likelihood tempers each Gaussian term by its weight,
//   sum_i w_i log N(y_i; x_i' beta, sigma2)
//     = -(sum_i w_i) log(2 pi sigma2)/2 - sum_i w_i E_q[(y_i - x_i' beta)^2] / (2 sigma2),
// so the effective sample size is the weight mass sum_i w_i rather than the row count.
double elbo(const VariationalState& state, const SuffStats& stats, const HyperChoice& hyper);

// Batch-wise coordinate ascent: alpha = pi, mu = 0, s2 precomputed; each sweep runs
// update_mu_batch then update_alpha_batch until |ELBO change| < tol or max_sweeps.
VariationalState fit(const SuffStats& stats, const HyperChoice& hyper,
                     const FitControls& controls = {});

// Convenience overloads that build the sufficient statistics first.
Vector update_s2(const RegressionProblem& problem, const HyperChoice& hyper);
void update_mu_batch(VariationalState& state, const RegressionProblem& problem,
                     const HyperChoice& hyper);
double elbo(const VariationalState& state, const RegressionProblem& problem,
            const HyperChoice& hyper);
VariationalState fit(const RegressionProblem& problem, const HyperChoice& hyper,
                     const FitControls& controls = {});

// High-dimensional variant: after each sweep sigma2 is replaced by its closed-form
// ELBO maximizer
//   sigma2 = (E_q[weighted RSS] + sum_k alpha_k (s2_k + mu_k^2) / sigma2_beta)
//            / (sum_w + sum_k alpha_k),
// clamped below at sigma2_floor; s2 is recomputed from the new sigma2 each sweep.
struct EmpiricalBayesFit {
  VariationalState state;
  double sigma2 = 0.0;
};
EmpiricalBayesFit fit_empirical_bayes(const SuffStats& stats, double pi, double sigma2_beta,
                                      const FitControls& controls, double sigma2_floor,
                                      double sigma2_init = 0.0);

}  // namespace wpl
