#include "cmbounds/types.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "cmbounds/errors.hpp"

namespace cmbounds {

const char* to_string(MethodTag tag) {
    switch (tag) {
        case MethodTag::two_cycle: return "two_cycle";
        case MethodTag::all_cycles: return "all_cycles";
        case MethodTag::oracle: return "oracle";
    }
    return "unknown";
}

MethodTag method_tag_from_string(const std::string& name) {
    if (name == "two_cycle") return MethodTag::two_cycle;
    if (name == "all_cycles") return MethodTag::all_cycles;
    if (name == "oracle") return MethodTag::oracle;
    throw ConfigError("unknown method '" + name + "' (expected two_cycle, all_cycles or oracle)");
}

namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

MarketData validate_market_data(MarketData raw) {
    const int J = raw.num_goods;
    if (J <= 0) throw DimensionMismatch("num_goods must be positive, got " + std::to_string(J));
    if (raw.num_markets() < 2)
        throw DimensionMismatch("need at least 2 markets, got " +
                                std::to_string(raw.num_markets()));

    for (int m = 0; m < raw.num_markets(); ++m) {
        Market& market = raw.markets[m];
        const std::string where = "market " + std::to_string(m + 1);
        if (static_cast<int>(market.delta.size()) != J)
            throw DimensionMismatch(where + ": delta has length " +
                                    std::to_string(market.delta.size()) + ", expected " +
                                    std::to_string(J));
        if (static_cast<int>(market.share.size()) != J)
            throw DimensionMismatch(where + ": share has length " +
                                    std::to_string(market.share.size()) + ", expected " +
                                    std::to_string(J));
        if (!all_finite(market.delta) || !all_finite(market.share))
            throw NonFinite(where + ": non-finite entry");

        double sum = 0.0;
        bool needs_clamp = false;
        for (double s : market.share) {
            if (s < -kShareAcceptTol)
                throw NotASimplexPoint(where + ": share component " + std::to_string(s) +
                                       " below -" + std::to_string(kShareAcceptTol));
            if (s < 0.0) needs_clamp = true;
            sum += s;
        }
        if (std::abs(sum - 1.0) > kShareAcceptTol)
            throw NotASimplexPoint(where + ": share sum " + std::to_string(sum) +
                                   " deviates from 1 by more than " +
                                   std::to_string(kShareAcceptTol));

        if (needs_clamp) {
            sum = 0.0;
            for (double& s : market.share) {
                if (s < 0.0) s = 0.0;
                sum += s;
            }
        }
        if (std::abs(sum - 1.0) > kRenormSkipTol) {
            for (double& s : market.share) s /= sum;
        }
    }
    return raw;
}

void validate_scenario(const Scenario& scen, const MarketData& data) {
    if (static_cast<int>(scen.delta_cf.size()) != data.num_goods)
        throw DimensionMismatch("counterfactual delta has length " +
                                std::to_string(scen.delta_cf.size()) + ", expected " +
                                std::to_string(data.num_goods));
    if (!all_finite(scen.delta_cf)) throw NonFinite("counterfactual delta: non-finite entry");
}

}  // namespace cmbounds
