#include "ccode/blockcode.hpp"

#include <algorithm>
#include <limits>

namespace ccode {

long size_capped(long q, int k, long cap) {
    long v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > cap / q) return cap + 1;
        v *= q;
    }
    return v;
}

BlockCode code_from_generator(const Matrix& g) {
    if (!g.field()) throw Error("generator has no field");
    g.check_entries();
    Matrix basis = row_basis(g);
    BlockCode c;
    c.field = g.field();
    c.n = g.cols();
    c.k = basis.rows();
    c.G = std::move(basis);
    c.H = kernel(c.G);
    return c;
}

BlockCode code_from_parity(const Matrix& h) {
    if (!h.field()) throw Error("parity check has no field");
    h.check_entries();
    Matrix basis = row_basis(h);
    BlockCode c;
    c.field = h.field();
    c.n = h.cols();
    c.G = kernel(basis);
    c.k = c.G.rows();
    // Keep the caller's parity rows when they were already independent; block
    // structure of a pre-split H matters downstream.
    c.H = (basis.rows() == h.rows()) ? h : std::move(basis);
    return c;
}

BlockCode dual(const BlockCode& c) {
    BlockCode d;
    d.field = c.field;
    d.n = c.n;
    d.k = c.n - c.k;
    d.G = c.H;
    d.H = c.G;
    return d;
}

EnumStats for_each_codeword(const BlockCode& c, long max_words,
                            const std::function<bool(const std::vector<int>&)>& fn) {
    EnumStats stats;
    if (c.k == 0) return stats;
    const Field& F = *c.field;
    long q = F.size();
    int n = c.n, k = c.k;
    std::vector<int> word(n, 0);
    bool stop = false;

    // DFS over message coordinates with incremental partial sums. The first
    // nonzero coordinate is pinned to 1, so each codeword line is visited once.
    std::function<void(int, std::vector<int>&)> walk = [&](int idx, std::vector<int>& acc) {
        if (stop) return;
        if (idx == k) {
            ++stats.visited;
            if (!fn(acc)) stop = true;
            if (stats.visited >= max_words && max_words > 0) {
                stop = true;
                stats.complete = false;
            }
            return;
        }
        walk(idx + 1, acc);
        if (stop) return;
        std::vector<int> next(n);
        for (int coef = 1; coef < q; ++coef) {
            for (int j = 0; j < n; ++j) next[j] = F.add(acc[j], F.mul(coef, c.G.at(idx, j)));
            walk(idx + 1, next);
            if (stop) return;
        }
    };

    for (int lead = 0; lead < k && !stop; ++lead) {
        std::vector<int> acc = c.G.row(lead);
        walk(lead + 1, acc);
    }
    return stats;
}

DistResult min_distance(const BlockCode& c, long budget) {
    DistResult res;
    if (c.k == 0) throw Error("minimum distance of the zero code is undefined");
    long q = c.field->size();
    bool fits = size_capped(q, c.k, budget) <= budget;
    int best = c.n + 1;
    EnumStats st = for_each_codeword(c, fits ? 0 : budget, [&](const std::vector<int>& w) {
        int wt = vector_weight(w);
        if (wt < best) best = wt;
        return best > 1;  // weight 1 cannot be beaten
    });
    res.value = best;
    res.exact = st.complete;
    res.enumerated = st.visited;
    return res;
}

EvenOddWeights even_odd_min_weights(const BlockCode& c, long budget) {
    if (c.k == 0) throw Error("even/odd weights of the zero code are undefined");
    long q = c.field->size();
    if (size_capped(q, c.k, budget) > budget)
        throw Error("even/odd weight enumeration exceeds the budget");
    const Field& F = *c.field;
    EvenOddWeights eo;
    for_each_codeword(c, 0, [&](const std::vector<int>& w) {
        int wt = vector_weight(w);
        int s = 0;
        for (int v : w) s = F.add(s, v);
        // Scalar multiples share the even/odd class, so one representative
        // per line is enough.
        if (s == 0) {
            if (!eo.even || wt < *eo.even) eo.even = wt;
        } else {
            if (!eo.odd || wt < *eo.odd) eo.odd = wt;
        }
        return true;
    });
    return eo;
}

BlockCode expand_code(const BlockCode& c, const Basis& beta) {
    if (!beta.field || !c.field->same_as(*beta.field))
        throw Error("basis field does not match the code field");
    if (!is_basis(beta)) throw Error("not a basis");
    const Field& F = *c.field;
    FieldPtr base = F.base();
    int m = F.degree();
    Basis dual_b = dual_basis(beta);

    auto expand_vec = [&](const std::vector<int>& v) {
        std::vector<int> out;
        out.reserve(v.size() * m);
        for (int x : v)
            for (int j = 0; j < m; ++j)
                out.push_back(F.trace_to_base(F.mul(x, dual_b.elements[j])));
        return out;
    };

    std::vector<std::vector<int>> rows;
    for (int r = 0; r < c.k; ++r) {
        std::vector<int> grow = c.G.row(r);
        for (int j = 0; j < m; ++j) {
            std::vector<int> scaled(grow.size());
            for (size_t i = 0; i < grow.size(); ++i) scaled[i] = F.mul(beta.elements[j], grow[i]);
            rows.push_back(expand_vec(scaled));
        }
    }
    Matrix G = Matrix::from_rows(base, rows);
    BlockCode out = code_from_generator(G);
    if (out.k != m * c.k) throw Error("expansion lost dimension (internal)");
    return out;
}

CoordChange puncture_code(const BlockCode& c, int coord) {
    if (c.n < 2) throw Error("puncturing needs length at least 2");
    if (coord < 0 || coord >= c.n) throw Error("coordinate out of range");
    Matrix g = delete_col(c.G, coord);
    CoordChange out{code_from_generator(g), false};
    out.k_dropped = out.code.k < c.k;
    return out;
}

CoordChange shorten_code(const BlockCode& c, int coord) {
    if (c.n < 2) throw Error("shortening needs length at least 2");
    if (coord < 0 || coord >= c.n) throw Error("coordinate out of range");
    // Messages whose codeword vanishes at the coordinate.
    Matrix col(c.field, 1, c.k);
    for (int r = 0; r < c.k; ++r) col.at(0, r) = c.G.at(r, coord);
    Matrix u = kernel(col);
    Matrix sub = mat_mul(u, c.G);
    CoordChange out{code_from_generator(delete_col(sub, coord)), false};
    out.k_dropped = out.code.k < c.k;
    return out;
}

BlockCode extend_code(const BlockCode& c) {
    BlockCode out = code_from_generator(append_parity_col(c.G));
    if (out.k != c.k) throw Error("extension lost dimension (internal)");
    return out;
}

BlockCode direct_sum_code(const BlockCode& a, const BlockCode& b) {
    BlockCode out = code_from_generator(block_diag(a.G, b.G));
    if (a.dist_exact && b.dist_exact && a.dist && b.dist) {
        out.dist = std::min(*a.dist, *b.dist);
        out.dist_exact = true;
    }
    return out;
}

BlockCode uuv_code(const BlockCode& a, const BlockCode& b) {
    if (a.n != b.n) throw Error("(u|u+v) needs equal lengths");
    Matrix top = stack_h(a.G, a.G);
    Matrix bottom = stack_h(Matrix(b.field, b.k, b.n), b.G);
    BlockCode out = code_from_generator(stack_v(top, bottom));
    if (a.dist_exact && b.dist_exact && a.dist && b.dist) {
        out.dist = std::min(2 * *a.dist, *b.dist);
        out.dist_exact = true;
    }
    return out;
}

BlockCode product_code(const BlockCode& a, const BlockCode& b) {
    BlockCode out = code_from_generator(kronecker(a.G, b.G));
    if (a.dist_exact && b.dist_exact && a.dist && b.dist) {
        out.dist = *a.dist * *b.dist;
        out.dist_exact = true;
    }
    return out;
}

}  // namespace ccode
