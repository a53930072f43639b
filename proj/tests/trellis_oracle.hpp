#pragma once

#include <limits>
#include <vector>

#include "ccode/convcode.hpp"

namespace ccode::testonly {

/// Independent oracle: exact minimum codeword weight over all nonzero inputs
/// of polynomial degree <= horizon, by layered minimization over the full
/// state space (plain matrix products, no shared machinery with the search).
inline long bounded_input_min_weight(const ConvCode& v, long horizon) {
    const Field& F = *v.field;
    const long q = F.size();
    long branches = 1;
    for (int i = 0; i < v.k; ++i) branches *= q;
    long states = 1;
    for (int i = 0; i < v.k * v.mu; ++i) states *= q;

    auto out_row = [&](long u, int ci) {
        std::vector<int> row(v.n, 0);
        long t = u;
        for (int r = 0; r < v.k; ++r) {
            int coef = static_cast<int>(t % q);
            t /= q;
            if (coef)
                for (int j = 0; j < v.n; ++j)
                    row[j] = F.add(row[j], F.mul(coef, v.coeff[ci].at(r, j)));
        }
        return row;
    };

    const long INF = std::numeric_limits<long>::max() / 2;
    std::vector<long> dp(states, INF), next(states, INF);
    // Layer 0: the first input block must be nonzero.
    for (long u = 1; u < branches; ++u) {
        long s = u;  // later blocks are all zero
        long w = 0;
        auto row = out_row(u, 0);
        for (int j = 0; j < v.n; ++j)
            if (row[j]) ++w;
        if (v.mu == 0) {
            dp[0] = std::min(dp[0], w);
        } else {
            dp[s] = std::min(dp[s], w);
        }
    }
    if (v.mu == 0) return dp[0];

    for (long t = 1; t <= horizon + v.mu; ++t) {
        std::fill(next.begin(), next.end(), INF);
        for (long s = 0; s < states; ++s) {
            if (dp[s] >= INF) continue;
            std::vector<long> blocks(v.mu);
            long x = s;
            for (int i = 0; i < v.mu; ++i) {
                blocks[i] = x % branches;
                x /= branches;
            }
            long ulimit = t <= horizon ? branches : 1;  // only zeros past the horizon
            for (long u = 0; u < ulimit; ++u) {
                std::vector<int> row = out_row(u, 0);
                for (int i = 0; i < v.mu; ++i) {
                    auto add = out_row(blocks[i], i + 1);
                    for (int j = 0; j < v.n; ++j) row[j] = F.add(row[j], add[j]);
                }
                long w = 0;
                for (int j = 0; j < v.n; ++j)
                    if (row[j]) ++w;
                long ns = u;
                long mult = branches;
                for (int i = 0; i + 1 < v.mu; ++i) {
                    ns += blocks[i] * mult;
                    mult *= branches;
                }
                next[ns] = std::min(next[ns], dp[s] + w);
            }
        }
        dp.swap(next);
    }
    return dp[0];
}

}  // namespace ccode::testonly
