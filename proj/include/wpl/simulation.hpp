#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wpl/common.hpp"

namespace wpl {

// Per-individual precision matrices and their exact edge supports.
struct PrecisionSpec {
  std::vector<Matrix> omega;  // symmetric positive definite, asserted at generation
  std::vector<Matrix> truth;  // 1 exactly where off-diagonal omega is nonzero
};

struct SimResult {
  DataSet data;
  PrecisionSpec precision;
  std::vector<Index> contaminated_rows;  // ascending; empty unless contamination ran
};

// Deterministic generator: mt19937_64 stream mapped to doubles in [0, 1) with 53-bit
// resolution, Gaussians via Box-Muller with a cached spare.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  double uniform01();        // [0, 1)
  double normal();           // N(0, 1)
  double chi_squared(double df);
  std::uint64_t next_u64();

 private:
  std::mt19937_64 state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stream of per-trial seeds derived from a root seed (SplitMix64), so trials are
// independent and insertion-order stable.
std::uint64_t trial_seed(std::uint64_t root_seed, std::uint64_t trial_index);

enum class SettingKind {
  uni_continuous,
  multi_continuous,
  discrete_independent,
  discrete_dependent,
  covariate_free,
  contaminated,
  t_noise,
};

struct SimSetting {
  SettingKind kind = SettingKind::uni_continuous;
  Index p = 10;              // ambient dimension of each observation
  Index n_per_cluster = 50;  // uni: per interval (n = 3x); multi: per cell (n = 9x)
  double c = 15.0;           // discrete signal strength, >= 0
  Index n1 = 50, n2 = 50;    // discrete level sizes
  Index n = 100;             // covariate-free sample size
  double fraction = 0.05;    // contaminated: fraction of rows replaced
  double df = 3.0;           // t-noise degrees of freedom
  SettingKind base = SettingKind::discrete_dependent;  // robustness base setting
};

// Dispatches on setting.kind; every generator is pure given the seed.
SimResult generate(const SimSetting& setting, std::uint64_t seed);

// z_i uniform, n_per_cluster each from [-3,-1], [-1,1], [1,3]; omega has diagonal 2,
// (2,3) = 1, (1,2) = 1{z<1} min(1, 1/2 - z/2), (1,3) = 1{z>-1} min(1, 1/2 + z/2)
// (1-based positions), zeros elsewhere.
SimResult gen_uni_continuous(Index n_per_cluster, Index p, std::uint64_t seed);

// z in [-3,3]^2, n_per_cell draws per cell of the 3x3 partition (z1-interval major,
// z2 minor, so C1 = (-3,-1)^2 and C7 = (1,3)x(-3,-1)); (1,2) follows z1 and (1,3)
// follows z2 with the same piecewise formula as the unidimensional setting.
SimResult gen_multi_continuous(Index n_per_cell, Index p, std::uint64_t seed);

// Two covariate levels z = 1 (n1 rows) then z = 2 (n2 rows); omega = lambda lambda^T
// + 10 I with lambda = c on the leading four coordinates (both levels when
// independent; dependent flips level 2's block to the trailing four).
SimResult gen_discrete(bool dependent, double c, Index n1, Index n2, Index dim,
                       std::uint64_t seed);

// Single shared omega (the level-1 discrete matrix), no covariates.
SimResult gen_covariate_free(double c, Index n, Index dim, std::uint64_t seed);

// Contamination: replaces ceil(fraction * n) rows of the base draw with independent
// N(3, I) rows; chosen indices are recorded. t-noise: divides each Gaussian row by
// sqrt(chi2_df / df), i.e. multivariate-t with the same scale matrix.
SimResult gen_robustness(SettingKind kind, const SimSetting& base, double fraction,
                         double df, std::uint64_t seed);

// count rows of N(0, omega^{-1}) drawn through the Cholesky factor of omega.
Matrix sample_mvn_precision(const Matrix& omega, Index count, Rng& rng);

}  // namespace wpl
