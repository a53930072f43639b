#include "ccode/convcode.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>

namespace ccode {

const char* cert_name(Cert c) {
    switch (c) {
        case Cert::yes: return "yes";
        case Cert::no: return "no";
        default: return "undetermined";
    }
}

BlockCode SplitSpec::effective_source() const {
    return side == SplitSide::parity ? source : dual(source);
}

namespace {

SplitSpec split_matrix(const BlockCode& c, SplitSide side, const std::vector<int>& row_counts) {
    const Matrix& M = side == SplitSide::parity ? c.H : c.G;
    if (row_counts.empty()) throw Error("empty split");
    long total = 0;
    for (int r : row_counts) {
        if (r < 1) throw Error("split blocks need at least one row");
        total += r;
    }
    if (total != M.rows())
        throw Error("split totals " + std::to_string(total) + " rows, matrix has " +
                    std::to_string(M.rows()));
    SplitSpec s;
    s.source = c;
    s.side = side;
    s.row_counts = row_counts;
    int at = 0;
    for (int rc : row_counts) {
        s.blocks.push_back(take_rows(M, at, at + rc));
        at += rc;
    }
    for (const Matrix& b : s.blocks) s.ranks.push_back(rank_of(b));
    s.kappa = s.ranks[0];
    // Rank conditions: the first block must have independent rows, and no
    // later block may exceed it (otherwise padding to kappa rows is
    // impossible and the generator-matrix certificates fail).
    if (s.kappa != row_counts[0])
        throw Error("rank condition violated: first block has rank " + std::to_string(s.kappa) +
                    " but " + std::to_string(row_counts[0]) + " rows");
    for (size_t i = 1; i < s.blocks.size(); ++i) {
        if (s.ranks[i] > s.kappa)
            throw Error("rank condition violated: rk block " + std::to_string(i) + " = " +
                        std::to_string(s.ranks[i]) + " exceeds rk block 0 = " +
                        std::to_string(s.kappa));
        if (row_counts[i] > row_counts[0])
            throw Error("rank condition violated: block " + std::to_string(i) + " has " +
                        std::to_string(row_counts[i]) + " rows, more than block 0");
        if (s.ranks[i] != row_counts[i])
            throw Error("split block " + std::to_string(i) + " has dependent rows");
    }
    return s;
}

Matrix pad_rows(const Matrix& m, int rows) {
    if (m.rows() == rows) return m;
    Matrix out(m.field(), rows, m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

}  // namespace

SplitSpec split_parity(const BlockCode& c, const std::vector<int>& row_counts) {
    return split_matrix(c, SplitSide::parity, row_counts);
}

SplitSpec split_generator(const BlockCode& c, const std::vector<int>& row_counts) {
    return split_matrix(c, SplitSide::generator, row_counts);
}

Poly ConvCode::entry(int r, int c) const {
    std::vector<int> coeffs(mu + 1, 0);
    for (int i = 0; i <= mu; ++i) coeffs[i] = coeff[i].at(r, c);
    return Poly(field, std::move(coeffs));
}

Degrees degree_of(const ConvCode& v) {
    Degrees d;
    d.row_degrees.assign(v.k, 0);
    for (int r = 0; r < v.k; ++r) {
        int deg = 0;
        for (int i = static_cast<int>(v.coeff.size()) - 1; i >= 1; --i) {
            bool nonzero = false;
            for (int c = 0; c < v.n && !nonzero; ++c) nonzero = v.coeff[i].at(r, c) != 0;
            if (nonzero) {
                deg = i;
                break;
            }
        }
        d.row_degrees[r] = deg;
        d.delta += deg;
        d.mu = std::max(d.mu, deg);
    }
    return d;
}

bool is_reduced(const ConvCode& v) {
    if (v.k == 0) return true;
    Matrix lead(v.field, v.k, v.n);
    Degrees d = degree_of(v);
    for (int r = 0; r < v.k; ++r)
        for (int c = 0; c < v.n; ++c) lead.at(r, c) = v.coeff[d.row_degrees[r]].at(r, c);
    return rank_of(lead) == v.k;
}

namespace {

// Fraction-free determinant of a k x k polynomial matrix (Bareiss); every
// division is exact in F[D].
Poly poly_det(std::vector<std::vector<Poly>> m, const FieldPtr& f) {
    int k = static_cast<int>(m.size());
    if (k == 0) return Poly::constant(f, 1);
    Poly prev = Poly::constant(f, 1);
    bool negate = false;
    for (int i = 0; i < k - 1; ++i) {
        int pivot = -1;
        for (int r = i; r < k; ++r)
            if (!m[r][i].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Poly(f);
        if (pivot != i) {
            std::swap(m[pivot], m[i]);
            negate = !negate;
        }
        for (int r = i + 1; r < k; ++r) {
            for (int c = i + 1; c < k; ++c)
                m[r][c] = exact_div(m[i][i] * m[r][c] - m[r][i] * m[i][c], prev);
            m[r][i] = Poly(f);
        }
        prev = m[i][i];
    }
    Poly det = m[k - 1][k - 1];
    if (negate) det = Poly(f) - det;
    return det;
}

long binomial_capped(int n, int k, long cap) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

BasicCert is_basic(const ConvCode& v, long minor_budget, int samples) {
    BasicCert cert;
    cert.gcd = Poly(v.field);
    if (v.k == 0 || v.k > v.n) {
        cert.verdict = Cert::no;
        return cert;
    }
    auto minor_at = [&](const std::vector<int>& cols) {
        std::vector<std::vector<Poly>> m(v.k, std::vector<Poly>(v.k));
        for (int r = 0; r < v.k; ++r)
            for (int c = 0; c < v.k; ++c) m[r][c] = v.entry(r, cols[c]);
        return poly_det(std::move(m), v.field);
    };
    auto fold = [&](const Poly& det) {
        cert.gcd = cert.gcd.is_zero() ? det.monic() : poly_gcd(cert.gcd, det);
        ++cert.minors_examined;
        return !cert.gcd.is_zero() && cert.gcd.is_constant();
    };

    long count = binomial_capped(v.n, v.k, minor_budget);
    if (count <= minor_budget) {
        // Lexicographic walk over all k-column subsets, stopping as soon as
        // the running gcd drops to a constant.
        std::vector<int> cols(v.k);
        for (int i = 0; i < v.k; ++i) cols[i] = i;
        while (true) {
            if (fold(minor_at(cols))) {
                cert.verdict = Cert::yes;
                return cert;
            }
            int i = v.k - 1;
            while (i >= 0 && cols[i] == v.n - v.k + i) --i;
            if (i < 0) break;
            ++cols[i];
            for (int j = i + 1; j < v.k; ++j) cols[j] = cols[j - 1] + 1;
        }
        cert.verdict = Cert::no;  // every minor shares the non-constant gcd
        return cert;
    }

    cert.sampled = true;
    std::mt19937 rng(0x5eedu);
    std::vector<int> all(v.n);
    for (int i = 0; i < v.n; ++i) all[i] = i;
    for (int s = 0; s < samples; ++s) {
        for (int i = 0; i < v.k; ++i) {
            std::uniform_int_distribution<int> pick(i, v.n - 1);
            std::swap(all[i], all[pick(rng)]);
        }
        std::vector<int> cols(all.begin(), all.begin() + v.k);
        std::sort(cols.begin(), cols.end());
        if (fold(minor_at(cols))) {
            cert.verdict = Cert::yes;
            return cert;
        }
    }
    cert.verdict = Cert::undetermined;
    return cert;
}

ConvCode conv_from_coeffs(FieldPtr f, std::vector<Matrix> coeff) {
    if (coeff.empty()) throw Error("a convolutional code needs at least one coefficient matrix");
    ConvCode v;
    v.field = std::move(f);
    v.k = coeff[0].rows();
    v.n = coeff[0].cols();
    for (const Matrix& m : coeff) {
        if (m.rows() != v.k || m.cols() != v.n) throw Error("coefficient matrices disagree in shape");
        if (!m.field()->same_as(*v.field)) throw Error("coefficient matrix field mismatch");
    }
    v.coeff = std::move(coeff);
    // Trim trailing all-zero coefficient matrices so mu reflects the matrix.
    while (v.coeff.size() > 1 && v.coeff.back().is_zero()) v.coeff.pop_back();
    Degrees d = degree_of(v);
    v.delta = d.delta;
    v.mu = d.mu;
    v.row_degrees = d.row_degrees;
    v.reduced = is_reduced(v);
    v.basic = is_basic(v).verdict;
    return v;
}

ConvCode conv_from_split(const SplitSpec& s) {
    ConvCode v;
    v.field = s.source.field;
    v.n = s.source.n;
    v.k = s.kappa;
    for (const Matrix& b : s.blocks) v.coeff.push_back(pad_rows(b, s.kappa));
    Degrees d = degree_of(v);
    v.delta = d.delta;
    v.mu = d.mu;
    v.row_degrees = d.row_degrees;
    v.split = s;

    // The construction promises reduced basic generator matrices; re-verify
    // instead of assuming. A definite "no" here is an internal error.
    v.reduced = is_reduced(v);
    if (!v.reduced) throw Error("split produced a non-reduced generator matrix (internal)");
    BasicCert bc = is_basic(v);
    if (bc.verdict == Cert::no)
        throw Error("split produced a non-basic generator matrix (internal), minor gcd " +
                    bc.gcd.to_string());
    v.basic = bc.verdict;

    // Degree must match the rank-ordering rule delta = sum_i max_{j>=i} rk M_j.
    int expected = 0;
    for (size_t i = 1; i < s.row_counts.size(); ++i)
        expected += *std::max_element(s.row_counts.begin() + i, s.row_counts.end());
    if (v.delta != expected)
        throw Error("measured degree " + std::to_string(v.delta) +
                    " disagrees with the block-rank formula " + std::to_string(expected));
    if (v.mu != s.memory())
        throw Error("measured memory disagrees with the split (internal)");
    return v;
}

namespace {

struct OutputTables {
    // tables[i][u] = weight contribution row: u-th input block times coeff[i]
    std::vector<std::vector<std::vector<int>>> rows;
    long branches = 0;

    void build(const ConvCode& v) {
        const Field& F = *v.field;
        long q = F.size();
        branches = 1;
        for (int i = 0; i < v.k; ++i) branches *= q;
        rows.resize(v.coeff.size());
        for (size_t ci = 0; ci < v.coeff.size(); ++ci) {
            rows[ci].resize(branches);
            for (long u = 0; u < branches; ++u) {
                std::vector<int> out(v.n, 0);
                long t = u;
                for (int r = 0; r < v.k; ++r) {
                    int c = static_cast<int>(t % q);
                    t /= q;
                    if (c)
                        for (int j = 0; j < v.n; ++j)
                            out[j] = F.add(out[j], F.mul(c, v.coeff[ci].at(r, j)));
                }
                rows[ci][u] = std::move(out);
            }
        }
    }
};

void add_into(const Field& F, std::vector<int>& acc, const std::vector<int>& add) {
    for (size_t j = 0; j < acc.size(); ++j) acc[j] = F.add(acc[j], add[j]);
}

}  // namespace

DistanceResult free_distance(const ConvCode& v, const SearchLimits& limits, long budget) {
    DistanceResult res;
    const Field& F = *v.field;
    long q = F.size();
    if (v.k == 0) throw Error("free distance of the zero code is undefined");

    if (v.mu == 0) {
        // Memory zero is a block code; the definitions coincide.
        BlockCode b = code_from_generator(v.coeff[0]);
        DistResult d = min_distance(b, budget);
        res.mode = d.exact ? DistanceResult::Mode::exact : DistanceResult::Mode::lower_bound;
        res.value = d.value;
        return res;
    }

    long branches = size_capped(q, v.k, limits.branch_cap);
    long states = size_capped(q, v.k * v.mu, limits.state_cap);
    if (branches <= limits.branch_cap && states <= limits.state_cap) {
        OutputTables tab;
        tab.build(v);
        const long B = tab.branches;
        std::vector<long> dist(states, std::numeric_limits<long>::max());
        using QE = std::pair<long, long>;  // (weight, state)
        std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
        const long pow_tail = states / B;  // B^(mu-1)
        for (long u = 1; u < B; ++u) {
            long w = vector_weight(tab.rows[0][u]);
            if (w < dist[u]) {
                dist[u] = w;
                pq.emplace(w, u);
            }
        }
        long best = std::numeric_limits<long>::max();
        std::vector<int> outbuf(v.n);
        std::vector<long> blocks(v.mu);
        while (!pq.empty()) {
            auto [w, s] = pq.top();
            pq.pop();
            if (w > dist[s] || w >= best) continue;
            ++res.states;
            long t = s;
            for (int i = 0; i < v.mu; ++i) {
                blocks[i] = t % B;
                t /= B;
            }
            for (long u = 0; u < B; ++u) {
                std::copy(tab.rows[0][u].begin(), tab.rows[0][u].end(), outbuf.begin());
                for (int i = 0; i < v.mu; ++i) add_into(F, outbuf, tab.rows[i + 1][blocks[i]]);
                long nw = w + vector_weight(outbuf);
                long ns = u + (s % pow_tail) * B;
                ++res.edges;
                if (ns == 0) {
                    best = std::min(best, nw);
                    continue;
                }
                if (nw < dist[ns]) {
                    dist[ns] = nw;
                    pq.emplace(nw, ns);
                }
            }
        }
        res.mode = DistanceResult::Mode::exact;
        res.value = static_cast<int>(best);
        res.states = states;
        return res;
    }

    // Over the caps: fall back to a certified bracket. Lower bound from the
    // split source when available, upper bound from bounded-degree inputs.
    std::optional<int> lower;
    if (v.split) {
        DistResult dp = min_distance(dual(v.split->effective_source()), budget);
        if (dp.exact) lower = dp.value;
    }
    std::optional<int> upper;
    long horizon = limits.horizon;
    if (horizon < 0) horizon = 2 * limits.state_cap;
    // Shrink the horizon until the input enumeration fits the budget.
    auto enum_cost = [&](long h) {
        long bits = v.k * (h + 1);
        if (bits > 62) return budget + 1;
        return size_capped(q, static_cast<int>(bits), budget);
    };
    while (horizon > 0 && enum_cost(horizon) > budget) --horizon;
    if (branches <= limits.branch_cap && horizon >= 0 && enum_cost(horizon) <= budget) {
        res.horizon_used = horizon;
        OutputTables tab;
        tab.build(v);
        const long B = tab.branches;
        long bestw = std::numeric_limits<long>::max();
        std::vector<long> inputs;
        // DFS over inputs u_0 .. u_h with u_0 nonzero; output at time t is
        // sum_j coeff_j * u_{t-j}, and the last mu outputs flush the state.
        auto output_at = [&](long time) {
            std::vector<int> out(v.n, 0);
            for (int j = 0; j <= v.mu; ++j) {
                long idx = time - j;
                if (idx >= 0 && idx < static_cast<long>(inputs.size()))
                    add_into(F, out, tab.rows[j][inputs[idx]]);
            }
            return out;
        };
        std::function<void(long)> walk = [&](long wsofar) {
            if (wsofar >= bestw) return;
            long t = static_cast<long>(inputs.size());
            if (t > horizon) {
                long w = wsofar;
                for (int i = 0; i < v.mu && w < bestw; ++i) w += vector_weight(output_at(t + i));
                bestw = std::min(bestw, w);
                return;
            }
            for (long u = (t == 0 ? 1 : 0); u < B; ++u) {
                inputs.push_back(u);
                walk(wsofar + vector_weight(output_at(t)));
                inputs.pop_back();
            }
        };
        walk(0);
        if (bestw < std::numeric_limits<long>::max()) upper = static_cast<int>(bestw);
    }
    if (lower && upper) {
        res.mode = DistanceResult::Mode::bracket;
        res.value = std::min(*lower, *upper);
        res.upper = upper;
    } else if (lower) {
        res.mode = DistanceResult::Mode::lower_bound;
        res.value = *lower;
    } else if (upper) {
        res.mode = DistanceResult::Mode::bracket;
        res.value = 1;
        res.upper = upper;
    } else {
        throw Error("distance limits too small to produce even a bracket");
    }
    return res;
}

namespace {
DistResult dist_or_inf(const BlockCode& c, long budget) {
    if (c.k == 0) return {kInfiniteDistance, true, 0};
    return min_distance(c, budget);
}
}  // namespace

TheoremABounds theorem_a_bounds(const SplitSpec& s, long budget) {
    TheoremABounds b;
    BlockCode eff = s.effective_source();
    b.d = dist_or_inf(eff, budget);
    b.d_perp = dist_or_inf(dual(eff), budget);
    b.d0 = dist_or_inf(code_from_parity(s.blocks.front()), budget);
    b.dmu = dist_or_inf(code_from_parity(s.blocks.back()), budget);
    long lo = std::min<long>(static_cast<long>(b.d0.value) + b.dmu.value, b.d.value);
    b.dual_window_lo = static_cast<int>(std::min<long>(lo, kInfiniteDistance));
    b.dual_window_hi = b.d.value;
    return b;
}

}  // namespace ccode
