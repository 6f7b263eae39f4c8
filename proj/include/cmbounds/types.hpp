#ifndef CMBOUNDS_TYPES_HPP
#define CMBOUNDS_TYPES_HPP

#include <string>
#include <vector>

namespace cmbounds {

// One observed market: mean utilities and a point in the share simplex.
struct Market {
    std::vector<double> delta;
    std::vector<double> share;
};

// M observed markets over J goods. Shares include every good the model
// knows about; if the application has an outside option it must occupy one
// of the J coordinates. Market indices are 1-based in every user-facing
// message.
struct MarketData {
    int num_goods = 0;
    std::vector<Market> markets;

    int num_markets() const { return static_cast<int>(markets.size()); }
};

// Mean utility vector of the hypothetical market whose share vector is the
// unknown being bounded.
struct Scenario {
    std::vector<double> delta_cf;
};

enum class MethodTag { two_cycle, all_cycles, oracle };

const char* to_string(MethodTag tag);
MethodTag method_tag_from_string(const std::string& name);

struct GoodBounds {
    double lower = 0.0;
    double upper = 1.0;
    std::vector<double> lower_witness;  // share vector attaining the bound
    std::vector<double> upper_witness;
};

struct BoundsResult {
    std::vector<GoodBounds> per_good;  // empty when infeasible
    MethodTag method_tag = MethodTag::two_cycle;
    bool feasible = true;
};

// Input acceptance tolerances: a share component may undershoot zero by up
// to kShareAcceptTol and the vector sum may deviate from one by up to the
// same amount; anything worse is rejected. Repairs never move a component
// by more than kShareAcceptTol.
inline constexpr double kShareAcceptTol = 1e-6;
// Renormalization is skipped when the sum is already this close to one.
// The threshold sits above the rounding left behind by a renormalization
// pass (about J ulps) and below any deviation worth repairing, which makes
// validation idempotent at the bit level.
inline constexpr double kRenormSkipTol = 8e-15;

// Checks dimensions, finiteness and simplex membership; clamps share
// components in [-kShareAcceptTol, 0) to zero and rescales the vector to
// unit sum. Validating the returned value again is a bit-exact no-op.
// Throws DimensionMismatch, NotASimplexPoint or NonFinite.
MarketData validate_market_data(MarketData raw);

// Scenario must match the data's good count and be finite.
void validate_scenario(const Scenario& scen, const MarketData& data);

}  // namespace cmbounds

#endif
