#ifndef CMBOUNDS_GRAPH_HPP
#define CMBOUNDS_GRAPH_HPP

#include "cmbounds/matrix.hpp"
#include "cmbounds/types.hpp"

namespace cmbounds {

// Complete bidirected graph on the M markets with edge weight
// w[i][j] = (delta_i - delta_j)' share_i. Not antisymmetric in general.
struct WeightMatrix {
    Matrix w;  // M x M, zero diagonal
};

// Shortest-path lengths between every pair of markets. min_cycle_slack is
// the most negative diagonal entry seen before the diagonal is zeroed; the
// data are cyclically monotone iff it is not meaningfully negative.
struct ApspResult {
    Matrix dist;
    bool cyclically_monotone = true;
    double min_cycle_slack = 0.0;
};

// Absolute tolerance for declaring a cycle negative. Exact-arithmetic zero
// cycles (e.g. duplicated markets) must not trip the detector.
inline constexpr double kCycleTol = 1e-9;

WeightMatrix build_weights(const MarketData& data);

// Floyd-Warshall over all M intermediate vertices. Runs to completion even
// when a negative cycle exists; the result is flagged, never truncated, so
// callers can report which markets participate. Diagonal is zeroed after
// the slack is recorded.
ApspResult floyd_warshall(const WeightMatrix& weights);

}  // namespace cmbounds

#endif
