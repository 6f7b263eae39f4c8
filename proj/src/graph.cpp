#include "cmbounds/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmbounds/errors.hpp"

namespace cmbounds {

WeightMatrix build_weights(const MarketData& data) {
    const int M = data.num_markets();
    const int J = data.num_goods;
    WeightMatrix result;
    result.w = Matrix(M, M, 0.0);
    for (int i = 0; i < M; ++i) {
        const Market& mi = data.markets[i];
        for (int j = 0; j < M; ++j) {
            if (i == j) continue;  // diagonal stays exactly zero
            const Market& mj = data.markets[j];
            double acc = 0.0;
            for (int g = 0; g < J; ++g) acc += (mi.delta[g] - mj.delta[g]) * mi.share[g];
            result.w(i, j) = acc;
        }
    }
    return result;
}

ApspResult floyd_warshall(const WeightMatrix& weights) {
    const Matrix& w = weights.w;
    if (!w.square())
        throw DimensionMismatch("weight matrix must be square, got " + std::to_string(w.rows) +
                                "x" + std::to_string(w.cols));
    for (double x : w.data)
        if (!std::isfinite(x)) throw NonFinite("weight matrix has a non-finite entry");

    const std::size_t M = w.rows;
    ApspResult result;
    result.dist = w;
    Matrix& d = result.dist;

    for (std::size_t k = 0; k < M; ++k) {
        const double* row_k = d.row(k);
        for (std::size_t i = 0; i < M; ++i) {
            double* row_i = d.row(i);
            const double d_ik = row_i[k];
            for (std::size_t j = 0; j < M; ++j) {
                const double via_k = d_ik + row_k[j];
                if (via_k < row_i[j]) row_i[j] = via_k;
            }
        }
    }

    double min_diag = 0.0;
    for (std::size_t i = 0; i < M; ++i) min_diag = std::min(min_diag, d(i, i));
    result.min_cycle_slack = min_diag;
    result.cyclically_monotone = (min_diag >= -kCycleTol);
    for (std::size_t i = 0; i < M; ++i) d(i, i) = 0.0;
    return result;
}

}  // namespace cmbounds
