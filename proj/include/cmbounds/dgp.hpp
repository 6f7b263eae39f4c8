#ifndef CMBOUNDS_DGP_HPP
#define CMBOUNDS_DGP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cmbounds/matrix.hpp"
#include "cmbounds/types.hpp"

namespace cmbounds {

enum class Family { logit, probit };

const char* to_string(Family family);
Family family_from_string(const std::string& name);

// Synthetic data-generating process: prices p_mj ~ Uniform(price_low,
// price_high) i.i.d., mean utilities delta_mj = beta_j - alpha * p_mj,
// shares from the chosen family. The probit covariance and all remaining
// parameters are config fields with desk-scale defaults; none of them is
// ground truth from elsewhere.
struct DgpConfig {
    int num_goods = 3;
    int num_markets = 200;
    Family family = Family::logit;
    Matrix sigma;                           // J x J, probit only; defaulted for J == 3
    double alpha = 1.0;                     // price coefficient, > 0
    std::vector<double> beta;               // intercepts, defaults to (2, ..., 2)
    double price_low = 1.0;
    double price_high = 3.0;
    std::uint64_t seed = 1;
    long probit_draws = 100000;             // R for observed market shares
    long probit_truth_draws = 10000000;     // R for "true" counterfactual shares
};

// One price-increase experiment: the counterfactual mean utilities and the
// share vector the DGP actually produces under them.
struct CounterfactualCase {
    std::string name;  // "p1_up", ...
    Scenario scenario;
    std::vector<double> true_share;
};

struct GeneratedStudy {
    MarketData data;
    std::vector<CounterfactualCase> counterfactuals;  // one per good
};

// Default probit error covariance for J = 3.
Matrix default_probit_covariance();

// Fills defaulted fields (beta, sigma) and checks invariants. Throws
// ConfigError or CholeskyFailure.
DgpConfig resolve_dgp_config(DgpConfig cfg);

// Closed-form multinomial logit shares, computed against max(delta) so any
// finite input is safe.
std::vector<double> logit_shares(const std::vector<double>& delta);

// Monte Carlo multinomial probit shares: frequency of argmax_j(delta_j +
// eps_j) over `draws` common-random-number draws eps ~ N(0, sigma). Sums to
// one exactly; argmax ties (probability-zero events) go to the lowest good
// index. Deterministic given the seed.
std::vector<double> probit_shares(const std::vector<double>& delta, const Matrix& sigma,
                                  long draws, std::uint64_t seed);

// Lower-triangular Cholesky factor; throws CholeskyFailure.
Matrix cholesky_lower(const Matrix& sigma);

// Draws the M observed markets plus one fresh baseline market, then builds
// one counterfactual per good by raising that good's baseline price 1%.
// Bit-identical output for equal configs; substream seeds are derived with
// the documented splitting scheme (see rng.hpp).
GeneratedStudy generate_study(const DgpConfig& cfg);

// Substream tags for derive_seed(cfg.seed, tag).
namespace seed_stream {
inline constexpr std::uint64_t prices = 1;
inline constexpr std::uint64_t shares = 2;
inline constexpr std::uint64_t truth = 3;
}  // namespace seed_stream

}  // namespace cmbounds

#endif
