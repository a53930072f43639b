#include "ccode/constructions.hpp"

#include <algorithm>

namespace ccode {

namespace {

const SplitSpec& require_split(const ConvCode& v, SplitSide side, const char* who) {
    if (!v.split) throw Error(std::string(who) + " needs a split-built input");
    if (v.split->side != side)
        throw Error(std::string(who) + " needs a " +
                    (side == SplitSide::parity ? "parity" : "generator") +
                    "-side split, input was built from the other matrix");
    return *v.split;
}

void require_same_field(const ConvCode& a, const ConvCode& b) {
    if (!a.field->same_as(*b.field)) throw Error("field mismatch between inputs");
}

std::string dist_str(const DistResult& d) {
    return std::to_string(d.value) + (d.exact ? "" : " (inexact)");
}

/// Expansion rows of every row of m in the basis gamma: row r yields the
/// coordinate rows of gamma_j * m_r for j = 1..deg. Row order: r outer, j inner.
Matrix expand_matrix_rows(const Matrix& m, const Basis& gamma) {
    const Field& F = *gamma.field;
    Basis dual_g = dual_basis(gamma);
    int deg = F.degree();
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<size_t>(m.rows()) * deg);
    for (int r = 0; r < m.rows(); ++r)
        for (int j = 0; j < deg; ++j) {
            std::vector<int> out;
            out.reserve(static_cast<size_t>(m.cols()) * deg);
            for (int c = 0; c < m.cols(); ++c) {
                int x = F.mul(gamma.elements[j], m.at(r, c));
                for (int s = 0; s < deg; ++s)
                    out.push_back(F.trace_to_base(F.mul(x, dual_g.elements[s])));
            }
            rows.push_back(std::move(out));
        }
    return Matrix::from_rows(F.base(), rows);
}

void push_dist(std::vector<std::pair<std::string, std::string>>& info, const std::string& key,
               const DistResult& d) {
    info.emplace_back(key, dist_str(d));
}

}  // namespace

ConstructionResult expand_conv(const ConvCode& v, const Basis& beta, long budget) {
    const SplitSpec& s = require_split(v, SplitSide::parity, "expand");
    if (!beta.field || !v.field->same_as(*beta.field))
        throw Error("expansion basis must live in the input's field");
    if (!is_basis(beta)) throw Error("not a basis");
    bool extrapolated = v.mu > 1;
    if (v.mu == 1 && s.ranks[0] < s.ranks[1])
        throw Error("expand needs rk H_0 >= rk H_1");

    const Field& F = *v.field;
    int m = F.degree();
    Basis beta_perp = dual_basis(beta);
    const BlockCode& c = s.source;

    // Dual side: the expansion of the source's dual in the dual basis keeps
    // the block structure; each expanded block has full row rank.
    std::vector<Matrix> blocks;
    std::vector<int> counts;
    for (const Matrix& b : s.blocks) {
        blocks.push_back(expand_matrix_rows(b, beta_perp));
        counts.push_back(blocks.back().rows());
    }
    Matrix h_beta = blocks[0];
    for (size_t i = 1; i < blocks.size(); ++i) h_beta = stack_v(h_beta, blocks[i]);

    // Primal side: the expansion of the source itself in beta. The two
    // expansions must be dual to each other; verify rather than assume.
    Matrix g_beta = expand_matrix_rows(c.G, beta);
    if (!mat_mul(g_beta, transpose(h_beta)).is_zero())
        throw Error("expanded generator and parity are not orthogonal (duality failed)");
    if (rank_of(h_beta) != h_beta.rows() || rank_of(g_beta) != g_beta.rows())
        throw Error("rank split infeasible: expanded blocks lost rank");

    BlockCode expanded = code_from_parity(h_beta);
    if (!same_row_space(expanded.G, g_beta))
        throw Error("expanded code disagrees with its dual expansion (duality failed)");

    SplitSpec ns = split_parity(expanded, counts);
    ConstructionResult res{conv_from_split(ns), {}, {}};

    DistResult dperp = min_distance(dual(c), budget);
    res.claim.n = static_cast<long>(v.n) * m;
    res.claim.k = static_cast<long>(v.k) * m;
    res.claim.delta = static_cast<long>(v.delta) * m;
    res.claim.mu = v.mu;
    res.claim.field_q = F.base()->size();
    res.claim.provenance = "expand";
    res.claim.extrapolated = extrapolated;
    if (dperp.exact) {
        res.claim.df_rel = ParamClaim::Rel::ge;
        res.claim.df_value = dperp.value;
    }
    push_dist(res.info, "d_perp_seed", dperp);
    DistResult dperp_beta = min_distance(dual(expanded), budget);
    push_dist(res.info, "d_perp_expanded", dperp_beta);
    return res;
}

ConstructionResult direct_sum_conv(const ConvCode& a, const ConvCode& b, long budget) {
    const SplitSpec& sa = require_split(a, SplitSide::parity, "direct sum");
    const SplitSpec& sb = require_split(b, SplitSide::parity, "direct sum");
    require_same_field(a, b);
    if (a.mu != b.mu) throw Error("direct sum needs equal memory");
    bool extrapolated = a.mu > 1;

    std::vector<Matrix> blocks;
    std::vector<int> counts;
    for (int i = 0; i <= a.mu; ++i) {
        blocks.push_back(block_diag(sa.blocks[i], sb.blocks[i]));
        counts.push_back(blocks.back().rows());
    }
    Matrix h = blocks[0];
    for (size_t i = 1; i < blocks.size(); ++i) h = stack_v(h, blocks[i]);
    BlockCode sum = code_from_parity(h);
    BlockCode direct = direct_sum_code(sa.source, sb.source);
    if (!same_row_space(sum.H, direct.H))
        throw Error("direct-sum parity disagrees with the block direct sum (internal)");

    SplitSpec ns = split_parity(sum, counts);
    ConstructionResult res{conv_from_split(ns), {}, {}};
    res.claim.n = a.n + b.n;
    res.claim.k = a.k + b.k;
    res.claim.delta = a.delta + b.delta;
    res.claim.mu = a.mu;
    res.claim.field_q = a.field->size();
    res.claim.provenance = "dsum";
    res.claim.extrapolated = extrapolated;
    DistResult d1 = min_distance(dual(sa.source), budget);
    DistResult d2 = min_distance(dual(sb.source), budget);
    if (d1.exact && d2.exact) {
        res.claim.df_rel = ParamClaim::Rel::ge;
        res.claim.df_value = std::min(d1.value, d2.value);
    }
    push_dist(res.info, "d1_perp", d1);
    push_dist(res.info, "d2_perp", d2);
    return res;
}

ConstructionResult puncture_conv(const ConvCode& v, int coord, long budget) {
    const SplitSpec& s = require_split(v, SplitSide::parity, "puncture");
    if (v.mu < 1 || v.mu > 3) throw Error("puncturing is stated for memory 1, 2 and 3");
    if (coord < 0 || coord >= v.n) throw Error("coordinate out of range");
    const BlockCode& c = s.source;
    BlockCode cperp = dual(c);
    if (size_capped(c.field->size(), cperp.k, budget) > budget)
        throw Error("dual weight enumeration exceeds the budget");
    // Exact minimum-weight support scan of the dual.
    int dperp = c.n + 1;
    bool min_hits_coord = false;
    for_each_codeword(cperp, 0, [&](const std::vector<int>& w) {
        int wt = vector_weight(w);
        if (wt < dperp) {
            dperp = wt;
            min_hits_coord = w[coord] != 0;
        } else if (wt == dperp && w[coord] != 0) {
            min_hits_coord = true;
        }
        return true;
    });
    if (dperp <= 1) throw Error("puncturing needs dual distance greater than 1");

    std::vector<Matrix> blocks;
    std::vector<int> counts;
    for (const Matrix& b : s.blocks) {
        blocks.push_back(row_basis(delete_col(b, coord)));
        counts.push_back(blocks.back().rows());
    }
    Matrix h = blocks[0];
    for (size_t i = 1; i < blocks.size(); ++i) h = stack_v(h, blocks[i]);
    BlockCode shortened = code_from_parity(h);
    SplitSpec ns = split_parity(shortened, counts);
    ConstructionResult res{conv_from_split(ns), {}, {}};
    res.claim.n = v.n - 1;
    res.claim.k = v.k;
    res.claim.delta = v.delta;
    res.claim.mu = v.mu;
    res.claim.field_q = v.field->size();
    res.claim.provenance = "puncture";
    res.claim.df_rel = ParamClaim::Rel::ge;
    res.claim.df_value = min_hits_coord ? dperp - 1 : dperp;
    res.info.emplace_back("d_perp_seed", std::to_string(dperp));
    res.info.emplace_back("min_weight_hits_coord", min_hits_coord ? "1" : "0");
    return res;
}

ConstructionResult extend_conv(const ConvCode& v, long budget) {
    const SplitSpec& s = require_split(v, SplitSide::generator, "extend");
    if (v.mu != 1) throw Error("extension is stated for memory 1");
    const BlockCode& c = s.source;
    EvenOddWeights eo = even_odd_min_weights(c, budget);  // throws over budget
    long d = std::min<long>(eo.even ? *eo.even : kInfiniteDistance,
                            eo.odd ? *eo.odd : kInfiniteDistance);
    bool gains = eo.odd && (!eo.even || *eo.odd < *eo.even);

    std::vector<Matrix> blocks;
    std::vector<int> counts;
    for (const Matrix& b : s.blocks) {
        blocks.push_back(append_parity_col(b));
        counts.push_back(blocks.back().rows());
    }
    Matrix g = blocks[0];
    for (size_t i = 1; i < blocks.size(); ++i) g = stack_v(g, blocks[i]);
    BlockCode ext = code_from_generator(g);
    if (ext.k != c.k) throw Error("extension lost dimension (internal)");
    BlockCode ref = extend_code(c);
    if (!same_row_space(ext.G, ref.G)) throw Error("extension disagrees (internal)");

    SplitSpec ns = split_generator(ext, counts);
    ConstructionResult res{conv_from_split(ns), {}, {}};
    res.claim.n = v.n + 1;
    res.claim.k = v.k;
    res.claim.delta = v.delta;
    res.claim.mu = v.mu;
    res.claim.field_q = v.field->size();
    res.claim.provenance = "extend";
    res.claim.df_rel = ParamClaim::Rel::ge;
    res.claim.df_value = gains ? d + 1 : d;
    res.info.emplace_back("d_even", eo.even ? std::to_string(*eo.even) : "absent");
    res.info.emplace_back("d_odd", eo.odd ? std::to_string(*eo.odd) : "absent");
    res.info.emplace_back("source_split", "generator");
    return res;
}

ConstructionResult uuv_conv(const ConvCode& a, const ConvCode& b, long budget) {
    const SplitSpec& sa = require_split(a, SplitSide::parity, "(u|u+v)");
    const SplitSpec& sb = require_split(b, SplitSide::parity, "(u|u+v)");
    require_same_field(a, b);
    if (a.n != b.n) throw Error("(u|u+v) needs equal lengths");
    if (a.mu != b.mu) throw Error("(u|u+v) needs equal memory");
    if (a.mu < 1 || a.mu > 2) throw Error("(u|u+v) is stated for memory 1 and 2");

    // The stated degree delta_1 + delta_2 presumes the two splits order their
    // block ranks the same way; with opposite strict orderings the assembled
    // matrix has a strictly smaller degree. Enforce the hypothesis up front.
    if (a.mu >= 1) {
        int combined = 0, separate = a.delta + b.delta;
        std::vector<int> merged;
        for (int i = 1; i <= a.mu; ++i)
            merged.push_back(sa.row_counts[i] + sb.row_counts[i]);
        for (size_t i = 0; i < merged.size(); ++i)
            combined += *std::max_element(merged.begin() + i, merged.end());
        if (combined != separate)
            throw Error("(u|u+v) needs compatible block-rank orderings: the combined "
                        "degree would be " + std::to_string(combined) + ", not " +
                        std::to_string(separate));
    }

    const FieldPtr& f = a.field;
    std::vector<Matrix> blocks;
    std::vector<int> counts;
    for (int i = 0; i <= a.mu; ++i) {
        const Matrix& h1 = sa.blocks[i];
        const Matrix& h2 = sb.blocks[i];
        Matrix top = stack_h(h1, Matrix(f, h1.rows(), b.n));
        Matrix bottom = stack_h(mat_neg(h2), h2);
        blocks.push_back(stack_v(top, bottom));
        counts.push_back(blocks.back().rows());
    }
    Matrix h = blocks[0];
    for (size_t i = 1; i < blocks.size(); ++i) h = stack_v(h, blocks[i]);
    BlockCode comb = code_from_parity(h);
    BlockCode ref = uuv_code(sa.source, sb.source);
    if (!same_row_space(comb.H, ref.H))
        throw Error("(u|u+v) parity disagrees with the block construction (internal)");

    SplitSpec ns = split_parity(comb, counts);
    ConstructionResult res{conv_from_split(ns), {}, {}};
    res.claim.n = 2L * a.n;
    res.claim.k = a.k + b.k;
    res.claim.delta = a.delta + b.delta;
    res.claim.mu = a.mu;
    res.claim.field_q = f->size();
    res.claim.provenance = "uuv";
    DistResult d1 = min_distance(dual(sa.source), budget);
    DistResult d2 = min_distance(dual(sb.source), budget);
    if (d1.exact && d2.exact) {
        res.claim.df_rel = ParamClaim::Rel::ge;
        res.claim.df_value = std::min<long>(2L * d2.value, d1.value);
    }
    push_dist(res.info, "d1_perp", d1);
    push_dist(res.info, "d2_perp", d2);
    return res;
}

ConstructionResult product_conv(const ConvCode& a, const ConvCode& b, long budget) {
    const SplitSpec& sa = require_split(a, SplitSide::generator, "product");
    const SplitSpec& sb = require_split(b, SplitSide::generator, "product");
    require_same_field(a, b);
    if (a.mu > 1 || b.mu > 1) throw Error("product is stated for memory 1");
    // A memory-0 factor degenerates the product to a block code: only the
    // shared coefficient indices survive the Kronecker pairing.
    int mu = std::min(a.mu, b.mu);

    Matrix m0 = kronecker(sa.blocks[0], sb.blocks[0]);
    Matrix g = m0;
    std::vector<int> counts{m0.rows()};
    if (mu == 1) {
        Matrix m1 = kronecker(sa.blocks[1], sb.blocks[1]);
        g = stack_v(m0, m1);
        counts.push_back(m1.rows());
    }
    BlockCode prod = code_from_generator(g);
    if (prod.k != g.rows()) throw Error("product generator lost rank (internal)");
    SplitSpec ns = split_generator(prod, counts);
    ConstructionResult res{conv_from_split(ns), {}, {}};
    res.claim.n = static_cast<long>(a.n) * b.n;
    res.claim.k = static_cast<long>(a.k) * b.k;
    res.claim.delta = static_cast<long>(a.delta) * b.delta;
    res.claim.mu = mu;
    res.claim.field_q = a.field->size();
    res.claim.provenance = "product";
    DistResult d1 = min_distance(sa.source, budget);
    DistResult d2 = min_distance(sb.source, budget);
    if (d1.exact && d2.exact) {
        res.claim.df_rel = ParamClaim::Rel::ge;
        res.claim.df_value = static_cast<long>(d1.value) * d2.value;
    }
    push_dist(res.info, "d1_seed", d1);
    push_dist(res.info, "d2_seed", d2);
    return res;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::match_dual: return "match-dual";
        case Verdict::bound_satisfied: return "bound-satisfied";
        case Verdict::violated: return "violated";
        case Verdict::undetermined: return "undetermined";
        default: return "unconstrained";
    }
}

namespace {

Verdict check_exact(long claimed, long measured) {
    if (claimed < 0) return Verdict::unconstrained;
    return claimed == measured ? Verdict::match : Verdict::violated;
}

Verdict check_df(const ParamClaim& c, const DistanceResult& d) {
    if (c.df_rel == ParamClaim::Rel::none) return Verdict::unconstrained;
    if (c.df_of_dual) return Verdict::undetermined;  // the dual is not searched
    long lo = d.value;
    std::optional<long> hi;
    if (d.exact())
        hi = d.value;
    else if (d.upper)
        hi = *d.upper;
    switch (c.df_rel) {
        case ParamClaim::Rel::ge:
            if (lo >= c.df_value) return Verdict::bound_satisfied;
            if (hi && *hi < c.df_value) return Verdict::violated;
            return Verdict::undetermined;
        case ParamClaim::Rel::gt:
            if (lo > c.df_value) return Verdict::bound_satisfied;
            if (hi && *hi <= c.df_value) return Verdict::violated;
            return Verdict::undetermined;
        case ParamClaim::Rel::eq:
            if (d.exact()) return lo == c.df_value ? Verdict::match : Verdict::violated;
            if (lo > c.df_value || (hi && *hi < c.df_value)) return Verdict::violated;
            return Verdict::undetermined;
        default:
            return Verdict::unconstrained;
    }
}

}  // namespace

VerifyReport verify_claim(const ConvCode& v, const ParamClaim& claim, const SearchLimits& limits,
                          long budget) {
    VerifyReport r;
    r.claim = claim;
    r.measured_n = v.n;
    r.measured_k = v.k;
    r.measured_delta = v.delta;
    r.measured_mu = v.mu;
    r.basic = v.basic;
    r.reduced = v.reduced;
    r.distance = free_distance(v, limits, budget);

    r.items.emplace_back("n", check_exact(claim.n, v.n));
    Verdict kv = check_exact(claim.k, v.k);
    if (kv == Verdict::violated && claim.k == v.n - v.k) kv = Verdict::match_dual;
    r.items.emplace_back("k", kv);
    Verdict dv = check_exact(claim.delta, v.delta);
    if (claim.delta < 0 && claim.delta_max)
        dv = v.delta <= *claim.delta_max ? Verdict::bound_satisfied : Verdict::violated;
    r.items.emplace_back("delta", dv);
    r.items.emplace_back("mu", check_exact(claim.mu, v.mu));
    r.items.emplace_back("df", check_df(claim, r.distance));

    bool any_violated = r.reduced == false || r.basic == Cert::no;
    bool any_undet = r.basic == Cert::undetermined;
    for (const auto& [name, verdict] : r.items) {
        any_violated = any_violated || verdict == Verdict::violated;
        any_undet = any_undet || verdict == Verdict::undetermined;
    }
    r.overall = any_violated ? Overall::violated
                             : (any_undet ? Overall::undetermined : Overall::ok);
    return r;
}

}  // namespace ccode
