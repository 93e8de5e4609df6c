#pragma once

#include <vector>

#include "wpl/vi_core.hpp"

namespace wpl {

// Candidate hyperparameter values searched per response variable.
struct HyperGrid {
  std::vector<double> pi;           // prior inclusion probabilities, each in (0, 1)
  std::vector<double> sigma2;       // residual variances, positive
  std::vector<double> sigma2_beta;  // slab variance multipliers, positive
};

void validate_grid(const HyperGrid& grid);

// Mean over columns of the sample variance (n-1 denominator); feeds the sigma2 grid.
double pooled_variance(const Matrix& data);

// pi: {2^k / (p-1), k = 0..4} restricted to (0, 0.5] (points above 0.5 are dropped;
// 0.5 itself if all overflow); sigma2: {0.25, 0.5, 1, 2, 4} x pooled response
// variance; sigma2_beta: {0.1, 1, 10}.
HyperGrid default_grid(Index n, Index p, double pooled_response_variance);

// Result of the per-pi global (sigma2, sigma2_beta) search: the winning pair and the
// per-anchor fits at that pair.
struct GridSelection {
  double sigma2 = 0.0;
  double sigma2_beta = 0.0;
  double total_elbo = 0.0;               // multiplicity-weighted ELBO sum at the winner
  std::vector<VariationalState> states;  // one per supplied problem, at the winning pair
};

// Pick the (sigma2, sigma2_beta) cell maximizing the ELBO summed over all n weighted
// regressions of one response (ties: smallest sigma2, then smallest sigma2_beta).
// `multiplicity` weighs each problem's ELBO in the sum (use 1.0 each, or the group
// size when identical weight rows have been deduplicated). A cell is unusable if any
// of its fits fails numerically; if no cell is usable a selection_error is thrown.
GridSelection grid_select(const std::vector<SuffStats>& problems,
                          const std::vector<double>& multiplicity, const HyperGrid& grid,
                          double pi, const FitControls& controls, int threads = 1);
GridSelection grid_select(const std::vector<RegressionProblem>& problems, const HyperGrid& grid,
                          double pi, const FitControls& controls = {}, int threads = 1);

// Softmax model average over per-pi member fits, weights proportional to exp(ELBO).
struct AveragedFit {
  Vector alpha_bar;  // averaged inclusion probabilities
  Vector mu_bar;     // averaged slab means
  std::vector<double> member_elbos;
  std::vector<double> weights;            // softmax weights, sum to 1
  std::vector<VariationalState> members;  // recorded so each member fit can be inspected
  std::vector<HyperChoice> member_hyper;  // hyperparameters behind each member
};

AveragedFit softmax_average(const std::vector<VariationalState>& members,
                            const std::vector<HyperChoice>& member_hyper = {});

// High-dimensional variant: grid over (pi, sigma2_beta) with sigma2 estimated by
// empirical Bayes inside each fit; the cell with the highest ELBO wins (ties: smaller
// pi, then smaller sigma2_beta). hyper.sigma2 of the result carries the EB estimate.
struct EmpiricalBayesSelection {
  HyperChoice hyper;
  VariationalState state;
};
EmpiricalBayesSelection select_empirical_bayes(const SuffStats& stats,
                                               const std::vector<double>& pi_candidates,
                                               const std::vector<double>& sigma2_beta_candidates,
                                               const FitControls& controls, double sigma2_floor);

// EB residual variance for one problem with (pi, sigma2_beta) fixed; the lower clamp
// is 1e-8 x the response variance (with a tiny absolute guard for a zero response).
double empirical_bayes_sigma2(const RegressionProblem& problem, const FitControls& controls = {},
                              double pi = 0.5, double sigma2_beta = 1.0);

}  // namespace wpl
