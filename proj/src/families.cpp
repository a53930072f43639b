#include "ccode/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ccode {

namespace {
constexpr long kMaxClaimLength = Field::kMaxSize;

long checked_pow(long b, long e, const char* what) {
    long r = 1;
    for (long i = 0; i < e; ++i) {
        if (r > kMaxClaimLength / b) throw Error(std::string(what) + " exceeds the desk-scale cap");
        r *= b;
    }
    return r;
}
}  // namespace

std::string df_bound_to_string(ParamClaim::Rel rel, long value) {
    switch (rel) {
        case ParamClaim::Rel::ge: return "ge:" + std::to_string(value);
        case ParamClaim::Rel::gt: return "gt:" + std::to_string(value);
        case ParamClaim::Rel::eq: return "eq:" + std::to_string(value);
        default: return "*";
    }
}

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) {
        if (r > (1L << 60) / (n - k + i)) throw Error("binomial overflow");
        r = r * (n - k + i) / i;
    }
    return r;
}

long s_m(long m, long v) {
    long s = 0;
    for (long i = 0; i <= v; ++i) s += binomial(m, i);
    return s;
}

long lary_coefficient(long m, long i, long l) {
    // Printed alternating-sum form of the coefficient of x^i in
    // (1 + x + ... + x^(l-1))^m; C(a, b) vanishes for a < b.
    long s = 0;
    for (long k = 0; k <= m; ++k) {
        long term = binomial(m, k) * binomial(m - 1 + i - k * l, m - 1);
        s += (k % 2 == 0) ? term : -term;
    }
    return s;
}

long s_m_lary(long m, long v, long l) {
    long s = 0;
    for (long i = 0; i <= v; ++i) s += lary_coefficient(m, i, l);
    return s;
}

bool is_prime_power(long q, long* p_out, long* t_out) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            long t = 0, v = q;
            while (v % d == 0) {
                v /= d;
                ++t;
            }
            if (v != 1) return false;
            if (p_out) *p_out = d;
            if (t_out) *t_out = t;
            return true;
        }
    }
    if (p_out) *p_out = q;
    if (t_out) *t_out = 1;
    return true;
}

long ord_mod(long q, long n) {
    if (n <= 1 || std::gcd(q, n) != 1) throw Error("order undefined: gcd(n, q) != 1");
    long r = 1, x = q % n;
    while (x != 1) {
        x = (x * q) % n;
        ++r;
        if (r > n) throw Error("order computation ran away (internal)");
    }
    return r;
}

// --- seed constructors ---

namespace {

std::vector<long> coset_reps(long q, long n, const std::vector<long>& seeds, std::set<long>* all) {
    std::set<long> seen;
    std::vector<long> reps;
    for (long z : seeds) {
        z = ((z % n) + n) % n;
        if (seen.count(z)) continue;
        reps.push_back(z);
        long x = z;
        do {
            seen.insert(x);
            x = (x * q) % n;
        } while (x != z);
    }
    if (all) *all = seen;
    return reps;
}

/// Rows of the parity check contributed by the root alpha^z: the canonical
/// coordinates over fq of alpha^(z*j), j = 0..n-1.
Matrix root_block(const FieldPtr& fq, const FieldPtr& big, int alpha, long z, long n) {
    const Field& B = *big;
    int r = B.degree();
    std::vector<std::vector<int>> rows(r, std::vector<int>(n, 0));
    for (long j = 0; j < n; ++j) {
        int a = B.pow(alpha, (z * j) % n);
        std::vector<int> d = B.digits(a);
        for (int s = 0; s < r; ++s) rows[s][j] = d[s];
    }
    return Matrix::from_rows(fq, rows);
}

FieldPtr splitting_field(const FieldPtr& fq, long n, long* ord_out) {
    long r = ord_mod(fq->size(), n);
    if (ord_out) *ord_out = r;
    return r == 1 ? fq : Field::extension(fq, static_cast<int>(r));
}

}  // namespace

BlockCode bch_code(const FieldPtr& fq, int n, int b, int designed_delta) {
    long q = fq->size();
    if (n < 2) throw Error("bch: length must be at least 2");
    if (std::gcd<long>(n, q) != 1) throw Error("bch: gcd(n, q) must be 1");
    if (designed_delta < 2 || designed_delta > n) throw Error("bch: designed distance out of range");
    std::vector<long> seeds;
    for (int z = b; z <= b + designed_delta - 2; ++z) seeds.push_back(z);
    std::set<long> defining;
    std::vector<long> reps = coset_reps(q, n, seeds, &defining);

    long r = 0;
    FieldPtr big = splitting_field(fq, n, &r);
    int alpha = big->pow(big->primitive_element(), (big->size() - 1) / n);
    Matrix stacked(fq, 0, n);
    std::sort(reps.begin(), reps.end());
    for (long z : reps) stacked = stack_v(stacked, root_block(fq, big, alpha, z, n));
    Matrix H = row_basis(stacked);
    if (H.rows() != static_cast<int>(defining.size()))
        throw Error("bch: defining-set size disagrees with the parity rank (internal)");
    return code_from_parity(H);
}

BlockCode rs_code(const FieldPtr& fq, int n, int k) {
    long q = fq->size();
    if (n < 1 || n > q) throw Error("rs: need 1 <= n <= q");
    if (k < 1 || k > n) throw Error("rs: need 1 <= k <= n");
    std::vector<int> points(n);
    if ((q - 1) % n == 0) {
        int alpha = fq->pow(fq->primitive_element(), (q - 1) / n);
        int x = 1;
        for (int j = 0; j < n; ++j) {
            points[j] = x;
            x = fq->mul(x, alpha);
        }
    } else {
        for (int j = 0; j < n; ++j) points[j] = j;
    }
    std::vector<std::vector<int>> rows(k, std::vector<int>(n));
    for (int j = 0; j < n; ++j) {
        int v = 1;
        for (int i = 0; i < k; ++i) {
            rows[i][j] = v;
            v = fq->mul(v, points[j]);
        }
    }
    BlockCode c = code_from_generator(Matrix::from_rows(fq, rows));
    if (c.k != k) throw Error("rs: Vandermonde lost rank (internal)");
    c.dist = n - k + 1;
    c.dist_exact = true;
    return c;
}

BlockCode rm_code(int r, int m) {
    if (m < 0 || r < 0 || r > m) throw Error("rm: need 0 <= r <= m");
    long n = checked_pow(2, m, "rm length");
    FieldPtr f2 = Field::prime(2);
    // Monomial rows ordered by degree then subset mask; points in counting order.
    std::vector<std::vector<int>> rows;
    for (int deg = 0; deg <= r; ++deg)
        for (long mask = 0; mask < (1L << m); ++mask) {
            if (__builtin_popcountll(mask) != deg) continue;
            std::vector<int> row(n);
            for (long pt = 0; pt < n; ++pt) row[pt] = ((pt & mask) == mask) ? 1 : 0;
            rows.push_back(row);
        }
    BlockCode c = code_from_generator(Matrix::from_rows(f2, rows));
    if (c.k != s_m(m, r)) throw Error("rm: dimension disagrees with the binomial sum (internal)");
    c.dist = static_cast<int>(checked_pow(2, m - r, "rm distance"));
    c.dist_exact = true;
    return c;
}

BlockCode melas_code(const FieldPtr& fq, int m) {
    long q = fq->size();
    if (m < 2) throw Error("melas: need m >= 2");
    long n = checked_pow(q, m, "melas length") - 1;
    std::set<long> c1, cm1;
    coset_reps(q, n, {1}, &c1);
    coset_reps(q, n, {n - 1}, &cm1);
    if (static_cast<long>(c1.size()) != m || static_cast<long>(cm1.size()) != m)
        throw Error("melas: root cosets are not full size; degenerate parameters");
    for (long x : c1)
        if (cm1.count(x)) throw Error("melas: root cosets overlap; degenerate parameters");

    FieldPtr big = Field::extension(fq, m);
    int alpha = big->primitive_element();
    Matrix b0 = root_block(fq, big, alpha, 1, n);
    Matrix b1 = root_block(fq, big, alpha, n - 1, n);
    Matrix H = stack_v(b0, b1);
    if (rank_of(H) != 2 * m) throw Error("melas: stacked parity lost rank (internal)");
    return code_from_parity(H);
}

// --- table rows ---

namespace {

struct RowCtx {
    const RowParams& p;
    ParamClaim claim;
    bool ok = true;

    long get(const std::string& name) {
        auto it = p.find(name);
        if (it == p.end()) throw Error("missing row parameter " + name);
        return it->second;
    }
    void require(bool cond) { ok = ok && cond; }
};

using RowEval = ParamClaim (*)(RowCtx&);

struct RowDef {
    TableRow row;
    RowEval eval;
};

ParamClaim finish(RowCtx& c) {
    c.claim.constraints_ok = c.ok;
    if (c.claim.n > kMaxClaimLength) throw Error("row length exceeds the desk-scale cap");
    return c.claim;
}

ParamClaim make_claim(long n, long k, long delta, long mu, ParamClaim::Rel rel, long df,
                      bool df_dual, long q, std::string provenance) {
    ParamClaim c;
    c.n = n;
    c.k = k;
    c.delta = delta;
    c.mu = mu;
    c.df_rel = rel;
    c.df_value = df;
    c.df_of_dual = df_dual;
    c.field_q = q;
    c.provenance = std::move(provenance);
    return c;
}

// Scales a claim by the extension degree t, mapping the field to GF(p).
// Equalities on d_f weaken to lower bounds, matching the printed
// expanded-family rows.
ParamClaim expand_claim(ParamClaim base, long t, long p_field) {
    base.n *= t;
    if (base.k >= 0) base.k *= t;
    if (base.delta >= 0) base.delta *= t;
    if (base.delta_max) base.delta_max = *base.delta_max * t;
    if (base.df_rel == ParamClaim::Rel::eq) base.df_rel = ParamClaim::Rel::ge;
    base.field_q = p_field;
    return base;
}

const std::vector<RowDef>& row_defs();

ParamClaim eval_row(const std::string& tag, const RowParams& params) {
    for (const RowDef& d : row_defs())
        if (d.row.tag == tag) {
            RowCtx ctx{params, {}, true};
            ctx.claim.provenance = tag;
            ParamClaim c = d.eval(ctx);
            return c;
        }
    throw Error("unknown table row " + tag);
}

// Individual rows. Each writes the printed closed form and records whether
// the printed side conditions hold.

ParamClaim row_bch_hole_1(RowCtx& c) {
    long m = c.get("m");
    c.require(m >= 1);
    long pm = checked_pow(2, m, "n");
    long n = checked_pow(2, 2 * m, "n") - pm;
    c.claim = make_claim(n, n - m, m, -1, ParamClaim::Rel::eq, 3, false, 2, c.claim.provenance);
    return finish(c);
}

ParamClaim row_bch_hole_2(RowCtx& c) {
    long m = c.get("m");
    c.require(m >= 2);
    long n = checked_pow(2, 2 * m - 1, "n");
    c.claim = make_claim(n, n - m, m, -1, ParamClaim::Rel::eq, 4, false, 2, c.claim.provenance);
    return finish(c);
}

ParamClaim row_bch_hole_34(RowCtx& c, bool second) {
    long m = c.get("m"), t = c.get("t");
    c.require(m >= 3);
    c.require(2 <= t && t < checked_pow(2, (m + 1) / 2 - 1, "t bound") + 1);
    long n = checked_pow(2, m, "n") - 1;
    long k = second ? n - 1 - (t - 1) * m : n - (t - 1) * m;
    c.claim = make_claim(n, k, m, -1, ParamClaim::Rel::ge, second ? 2 * t + 2 : 2 * t + 1,
               false, 2, c.claim.provenance);
    return finish(c);
}
ParamClaim row_bch_hole_3(RowCtx& c) { return row_bch_hole_34(c, false); }
ParamClaim row_bch_hole_4(RowCtx& c) { return row_bch_hole_34(c, true); }

ParamClaim row_bch_aly(RowCtx& c) {
    long q = c.get("q"), n = c.get("n"), delta = c.get("delta");
    c.require(is_prime_power(q));
    c.require(n >= 2 && std::gcd(n, q) == 1);
    long r = ord_mod(q, n);
    long qr = checked_pow(q, r, "q^r");
    long x = checked_pow(q, (r + 1) / 2, "q^(r/2)") - 1 - (r % 2 == 1 ? q - 2 : 0);
    long delta_max = n * x / (qr - 1);
    c.require(2 <= 2 * delta && 2 * delta < delta_max);
    long k = n - r * ((delta * (q - 1) + q - 1) / q);  // n - r*ceil(delta(1-1/q))
    long gap = 2 * delta - (delta + 1);                // beta - alpha
    long dlb = gap >= 2 * q - 3 ? q + (gap + 3) / q - 2 : (gap + 3) / 2;
    c.claim = make_claim(n, k, delta, 1, ParamClaim::Rel::ge, delta + 1 + dlb, false, q,
               c.claim.provenance);
    return finish(c);
}

// Hermitian-case rows, all over GF(q^2).
ParamClaim row_bch_herm_1(RowCtx& c) {
    long q = c.get("q"), i = c.get("i");
    c.require(is_prime_power(q) && q >= 3);
    long q2 = q * q;
    c.require(3 <= i && i <= q2 - 1);
    long n = checked_pow(q, 4, "n") - 1;
    c.claim = make_claim(n, n - 2 * (i - 2) - 1, 2, -1, ParamClaim::Rel::ge, i + 1, false, q2,
               c.claim.provenance);
    return finish(c);
}

ParamClaim row_bch_herm_2(RowCtx& c) {
    long q = c.get("q"), m = c.get("m");
    c.require(is_prime_power(q) && q >= 4 && m >= 3);
    long q2 = q * q;
    long n = checked_pow(q2, m, "n") - 1;
    c.require(ord_mod(q2, n) == m);
    c.claim = make_claim(n, n - m * (2 * q2 - 3) - 1, m, -1, ParamClaim::Rel::ge, 2 * q2 + 2, false, q2,
               c.claim.provenance);
    return finish(c);
}

ParamClaim row_bch_herm_3(RowCtx& c) {
    long q = c.get("q"), m = c.get("m"), i = c.get("i");
    c.require(is_prime_power(q) && q >= 4 && m >= 3);
    long q2 = q * q;
    long n = checked_pow(q2, m, "n") - 1;
    c.require(ord_mod(q2, n) == m);
    c.require(1 <= i && i <= q2 - 2);
    c.claim = make_claim(n, n - m * i - 1, m * i, -1, ParamClaim::Rel::ge, 2 * i + 2, false, q2,
               c.claim.provenance);
    return finish(c);
}

ParamClaim row_bch_herm_4(RowCtx& c) {
    long q = c.get("q"), m = c.get("m"), i = c.get("i");
    c.require(is_prime_power(q) && q >= 4 && m >= 3);
    long q2 = q * q;
    long n = checked_pow(q2, m, "n") - 1;
    c.require(ord_mod(q2, n) == m);
    c.require(1 <= i && i < q2 - 1);
    c.claim = make_claim(n, n - m * (i - 1) - 1, m, -1, ParamClaim::Rel::ge, i + 2, false, q2,
               c.claim.provenance);
    return finish(c);
}

ParamClaim row_bch_herm_5(RowCtx& c) {
    long q = c.get("q"), m = c.get("m"), i = c.get("i");
    c.require(is_prime_power(q) && q >= 4 && m >= 3);
    long q2 = q * q;
    long n = checked_pow(q2, m, "n") - 1;
    c.require(ord_mod(q2, n) == m);
    c.require(3 <= i && i < q2 - 1);
    c.claim = make_claim(n, n - m * (i - 2) - 1, 2 * m, -1, ParamClaim::Rel::ge, i + 2, false, q2,
               c.claim.provenance);
    return finish(c);
}

ParamClaim row_bch_herm_6(RowCtx& c) {
    long q = c.get("q"), m = c.get("m"), mu = c.get("mu"), i = c.get("i");
    c.require(is_prime_power(q) && q >= 4 && m >= 3 && mu >= 3);
    long q2 = q * q;
    long n = checked_pow(q2, m, "n") - 1;
    c.require(ord_mod(q2, n) == m);
    c.require(mu + 1 <= i && i < q2 - 1);
    c.claim = make_claim(n, n - m * (i - mu) - 1, m * mu, -1, ParamClaim::Rel::ge, i - mu + 4, false, q2,
               c.claim.provenance);
    return finish(c);
}

ParamClaim row_bch_herm_7(RowCtx& c) {
    long q = c.get("q"), i = c.get("i");
    c.require(is_prime_power(q) && q >= 3);
    long q2 = q * q;
    c.require(1 <= i && 2 <= 2 * i && 2 * i <= q2 - 2);
    long n = checked_pow(q, 4, "n") - 1;
    c.claim = make_claim(n, n - 2 * i - 1, 2 * i, -1, ParamClaim::Rel::ge, 2 * i + 2, false, q2,
               c.claim.provenance);
    return finish(c);
}

void rs_conditions(RowCtx& c, long q, long n, long mu) {
    c.require(is_prime_power(q));
    c.require(n % 2 == 1 && (q * q - 1) % n == 0);
    c.require(q + 1 < n && n < q * q - 1);
    c.require(mu % 2 == 0 && 2 <= mu && mu <= n / (q + 1));
}

ParamClaim row_rs(RowCtx& c) {
    long q = c.get("q"), n = c.get("n"), mu = c.get("mu");
    rs_conditions(c, q, n, mu);
    c.claim = make_claim(n, mu / 2, mu / 2, 1, ParamClaim::Rel::gt, mu + 1, false, q, c.claim.provenance);
    return finish(c);
}

ParamClaim row_expanded_rs(RowCtx& c) {
    long p = c.get("p"), r = c.get("r"), n = c.get("n"), mu = c.get("mu");
    c.require(is_prime(p));
    long q = checked_pow(p, r, "q");
    rs_conditions(c, q, n, mu);
    c.claim = make_claim(r * n, r * mu / 2, r * mu / 2, 1, ParamClaim::Rel::gt, mu + 1, false, p,
               c.claim.provenance);
    return finish(c);
}

ParamClaim row_rm(RowCtx& c) {
    long m = c.get("m"), l = c.get("l"), r = c.get("r");
    c.require(1 <= l && l <= m);
    c.require(0 <= r && r <= (m - l - 1) / 2);
    long n = checked_pow(2, m - l, "n");
    ParamClaim& cl = c.claim;
    cl.n = n;
    cl.k = s_m(m - l, r);
    cl.delta = -1;
    cl.delta_max = checked_pow(2, l, "delta bound") - 1;
    cl.mu = -1;
    cl.df_rel = ParamClaim::Rel::eq;
    cl.df_value = checked_pow(2, m - r, "df");
    cl.field_q = 2;
    return finish(c);
}

ParamClaim row_mds_1(RowCtx& c) {
    long q = c.get("q"), n = c.get("n"), delta = c.get("delta");
    c.require(is_prime_power(q));
    c.require(0 <= delta && delta <= n - 1 && n <= q - 1);
    c.claim = make_claim(n, 1, delta, -1, ParamClaim::Rel::eq, n * (delta + 1), false, q,
               c.claim.provenance);
    return finish(c);
}

ParamClaim row_mds_2(RowCtx& c) {
    long t = c.get("t"), i = c.get("i");
    c.require(t >= 3);
    long q = checked_pow(2, t, "q");
    long n = q + 1;
    c.require(1 <= i && i <= q / 2 - 2);
    c.claim = make_claim(n, n - 2 * i, 2, 1, ParamClaim::Rel::eq, 2 * i + 3, false, q, c.claim.provenance);
    return finish(c);
}

ParamClaim row_mds_3(RowCtx& c) {
    long p = c.get("p"), t = c.get("t"), i = c.get("i");
    c.require(is_prime(p) && p % 2 == 1 && t >= 2);
    long q = checked_pow(p, t, "q");
    long n = q + 1;
    c.require(1 <= i && i <= n / 2 - 2);
    c.claim = make_claim(n, n - 2 * i + 1, 2, 1, ParamClaim::Rel::eq, 2 * i + 2, false, q,
               c.claim.provenance);
    return finish(c);
}

ParamClaim row_expanded_mds_1(RowCtx& c) {
    long p = c.get("p"), t = c.get("t"), n = c.get("n"), delta = c.get("delta");
    c.require(is_prime(p));
    long q = checked_pow(p, t, "q");
    c.require(0 <= delta && delta <= n - 1 && n <= q - 1);
    c.claim = make_claim(t * n, t, t * delta, -1, ParamClaim::Rel::ge, n * (delta + 1), false, p,
               c.claim.provenance);
    return finish(c);
}

ParamClaim row_expanded_mds_2(RowCtx& c) {
    long t = c.get("t"), i = c.get("i");
    c.require(t >= 3);
    long q = checked_pow(2, t, "q");
    long n = q + 1;
    c.require(1 <= i && i <= q / 2 - 2);
    c.claim = make_claim(t * n, t * (n - 2 * i), 2 * t, 1, ParamClaim::Rel::ge, 2 * i + 3, false, 2,
               c.claim.provenance);
    return finish(c);
}

ParamClaim row_expanded_mds_3(RowCtx& c) {
    long p = c.get("p"), t = c.get("t"), i = c.get("i");
    c.require(is_prime(p) && p % 2 == 1 && t >= 2);
    long q = checked_pow(p, t, "q");
    long n = q + 1;
    c.require(1 <= i && i <= n / 2 - 2);
    c.claim = make_claim(t * n, t * (n - 2 * i + 1), 2 * t, 1, ParamClaim::Rel::ge, 2 * i + 2, false, p,
               c.claim.provenance);
    return finish(c);
}

void char_conditions_ru(RowCtx& c, long q, long m, long r, long u) {
    long p = 0;
    c.require(is_prime_power(q, &p) && p % 2 == 1);
    c.require(m >= 3);
    c.require(0 < r && r < u && u < m);
    c.require(s_m(m, m) - s_m(m, u) > s_m(m, u) - s_m(m, r));
}

ParamClaim row_char_1(RowCtx& c) {
    long q = c.get("q"), m = c.get("m"), r = c.get("r"), u = c.get("u");
    char_conditions_ru(c, q, m, r, u);
    long n = checked_pow(2, m, "n");
    c.claim = make_claim(n, n - s_m(m, u), s_m(m, u) - s_m(m, r), 1, ParamClaim::Rel::ge,
               checked_pow(2, r + 1, "df"), false, q, c.claim.provenance);
    return finish(c);
}

ParamClaim row_char_2(RowCtx& c) {
    long q = c.get("q"), m = c.get("m"), r = c.get("r"), u = c.get("u");
    char_conditions_ru(c, q, m, r, u);
    long n = checked_pow(2, m, "n");
    c.claim = make_claim(n, s_m(m, u), s_m(m, u) - s_m(m, r), -1, ParamClaim::Rel::ge,
               checked_pow(2, m - u, "df") + 1, true, q, c.claim.provenance);
    return finish(c);
}

ParamClaim row_char_3(RowCtx& c) {
    long q = c.get("q"), m = c.get("m"), r = c.get("r"), v = c.get("v"), u = c.get("u");
    long p = 0;
    c.require(is_prime_power(q, &p) && p % 2 == 1);
    c.require(m >= 4);
    c.require(0 < r && r < v && v < u && u < m);
    long tail = s_m(m, m) - s_m(m, u);
    long mid = s_m(m, v) - s_m(m, r);
    long high = s_m(m, u) - s_m(m, v);
    c.require(tail >= mid && mid >= high);
    long n = checked_pow(2, m, "n");
    c.claim = make_claim(n, n - s_m(m, u), mid, 2, ParamClaim::Rel::ge, checked_pow(2, r + 1, "df"),
               false, q, c.claim.provenance);
    return finish(c);
}

void char4_claim(RowCtx& c, long q, long q_field, long t) {
    long l = c.get("l"), m = c.get("m"), r = c.get("r"), u = c.get("u");
    c.require(is_prime_power(q));
    c.require(m >= 3 && l >= 3);
    c.require((q - 1) % l == 0);
    c.require(0 < r && r < u && u < m * (l - 1));
    long lhs = 0, rhs = 0;
    for (long i = u + 1; i <= m; ++i) lhs += lary_coefficient(m, i, l);
    for (long i = r + 1; i <= u; ++i) rhs += lary_coefficient(m, i, l);
    c.require(lhs >= rhs);
    long a = r / (l - 1), b = r % (l - 1);
    long n = checked_pow(l, m, "n");
    c.claim = make_claim(t * n, t * (n - s_m_lary(m, u, l)), t * (s_m_lary(m, u, l) - s_m_lary(m, r, l)),
               1, ParamClaim::Rel::ge, (b + 2) * checked_pow(l, a, "df"), false,
               q_field, c.claim.provenance);
    c.claim.interpretation = "coefficient-count";
}

ParamClaim row_char_4(RowCtx& c) {
    long q = c.get("q");
    char4_claim(c, q, q, 1);
    return finish(c);
}

ParamClaim row_expanded_char_1(RowCtx& c) {
    long p = c.get("p"), t = c.get("t"), m = c.get("m"), r = c.get("r"), u = c.get("u");
    c.require(is_prime(p) && p % 2 == 1);
    long q = checked_pow(p, t, "q");
    char_conditions_ru(c, q, m, r, u);
    long n = checked_pow(2, m, "n");
    c.claim = make_claim(t * n, t * (n - s_m(m, u)), t * (s_m(m, u) - s_m(m, r)), 1, ParamClaim::Rel::ge,
               checked_pow(2, r + 1, "df"), false, p, c.claim.provenance);
    return finish(c);
}

ParamClaim row_expanded_char_2(RowCtx& c) {
    long p = c.get("p"), t = c.get("t"), m = c.get("m"), r = c.get("r"), u = c.get("u");
    c.require(is_prime(p) && p % 2 == 1);
    long q = checked_pow(p, t, "q");
    char_conditions_ru(c, q, m, r, u);
    long n = checked_pow(2, m, "n");
    c.claim = make_claim(t * n, t * s_m(m, u), t * (s_m(m, u) - s_m(m, r)), -1, ParamClaim::Rel::ge,
               checked_pow(2, m - u, "df") + 1, false, p, c.claim.provenance);
    return finish(c);
}

ParamClaim row_expanded_char_3(RowCtx& c) {
    long p = c.get("p"), t = c.get("t");
    long m = c.get("m"), r = c.get("r"), v = c.get("v"), u = c.get("u");
    c.require(is_prime(p) && p % 2 == 1);
    long q = checked_pow(p, t, "q");
    c.require(is_prime_power(q));
    c.require(m >= 4);
    c.require(0 < r && r < v && v < u && u < m);
    long tail = s_m(m, m) - s_m(m, u);
    long mid = s_m(m, v) - s_m(m, r);
    long high = s_m(m, u) - s_m(m, v);
    c.require(tail >= mid && mid >= high);
    long n = checked_pow(2, m, "n");
    c.claim = make_claim(t * n, t * (n - s_m(m, u)), t * mid, 2, ParamClaim::Rel::ge,
               checked_pow(2, r + 1, "df"), false, p, c.claim.provenance);
    return finish(c);
}

ParamClaim row_expanded_char_4(RowCtx& c) {
    long p = c.get("p"), t = c.get("t");
    c.require(is_prime(p));
    long q = checked_pow(p, t, "q");
    char4_claim(c, q, q, t);  // the printed expanded row keeps the subscript q
    return finish(c);
}

ParamClaim row_melas(RowCtx& c) {
    long q = c.get("q"), m = c.get("m");
    long p = 0;
    c.require(is_prime_power(q, &p) && p == 2 && q != 2);
    c.require(m >= 2);
    long n = checked_pow(q, m, "n") - 1;
    c.claim = make_claim(n, n - m, m, 1, ParamClaim::Rel::ge, 3, false, q, c.claim.provenance);
    return finish(c);
}

ParamClaim row_melas_binary(RowCtx& c) {
    long m = c.get("m");
    c.require(m >= 3 && m % 2 == 1);
    long n = checked_pow(2, m, "n") - 1;
    c.claim = make_claim(n, n - m, m, 1, ParamClaim::Rel::ge, 5, false, 2, c.claim.provenance);
    return finish(c);
}

ParamClaim row_expanded_melas(RowCtx& c) {
    long q = c.get("q"), m = c.get("m");
    long p = 0, t = 0;
    c.require(is_prime_power(q, &p, &t) && p == 2 && q != 2);
    c.require(m >= 2);
    long n = checked_pow(q, m, "n") - 1;
    ParamClaim base = make_claim(n, n - m, m, 1, ParamClaim::Rel::ge, 3, false, q, c.claim.provenance);
    c.claim = expand_claim(base, t, p);
    c.claim.provenance = "expanded-melas";
    return finish(c);
}

// Expanded Hermitian BCH rows: the base claim scaled by t = log_p(q^2).
template <RowEval Base>
ParamClaim row_expanded_herm(RowCtx& c) {
    RowCtx bc{c.p, {}, true};
    bc.claim.provenance = c.claim.provenance;
    ParamClaim base = Base(bc);
    c.ok = bc.ok;
    long p = 0, t = 0;
    is_prime_power(base.field_q, &p, &t);
    c.claim = expand_claim(base, t, p);
    return finish(c);
}

ParamClaim row_expanded_bch_aly(RowCtx& c) {
    ParamClaim base = row_bch_aly(c);
    c.ok = base.constraints_ok;
    long p = 0, t = 0;
    is_prime_power(base.field_q, &p, &t);
    c.claim = expand_claim(base, t, p);
    c.claim.provenance = "expanded-bch-aly";
    return finish(c);
}

const std::vector<RowDef>& row_defs() {
    static const std::vector<RowDef> defs = {
        {{"bch-hole-1", {"m"}, {{"m", 1}}, false}, row_bch_hole_1},
        {{"bch-hole-2", {"m"}, {{"m", 2}}, false}, row_bch_hole_2},
        {{"bch-hole-3", {"m", "t"}, {{"m", 3}, {"t", 2}}, false}, row_bch_hole_3},
        {{"bch-hole-4", {"m", "t"}, {{"m", 3}, {"t", 2}}, false}, row_bch_hole_4},
        {{"bch-aly", {"q", "n", "delta"}, {{"q", 2}, {"n", 15}, {"delta", 1}}, false},
         row_bch_aly},
        {{"bch-herm-1", {"q", "i"}, {{"q", 3}, {"i", 3}}, false}, row_bch_herm_1},
        {{"bch-herm-2", {"q", "m"}, {{"q", 4}, {"m", 3}}, false}, row_bch_herm_2},
        {{"bch-herm-3", {"q", "m", "i"}, {{"q", 4}, {"m", 3}, {"i", 1}}, false}, row_bch_herm_3},
        {{"bch-herm-4", {"q", "m", "i"}, {{"q", 4}, {"m", 3}, {"i", 1}}, false}, row_bch_herm_4},
        {{"bch-herm-5", {"q", "m", "i"}, {{"q", 4}, {"m", 3}, {"i", 3}}, false}, row_bch_herm_5},
        {{"bch-herm-6", {"q", "m", "mu", "i"},
          {{"q", 4}, {"m", 3}, {"mu", 3}, {"i", 4}}, false}, row_bch_herm_6},
        {{"bch-herm-7", {"q", "i"}, {{"q", 3}, {"i", 1}}, false}, row_bch_herm_7},
        {{"rs", {"q", "n", "mu"}, {{"q", 8}, {"n", 21}, {"mu", 2}}, false}, row_rs},
        {{"expanded-rs", {"p", "r", "n", "mu"},
          {{"p", 2}, {"r", 3}, {"n", 21}, {"mu", 2}}, false}, row_expanded_rs},
        {{"rm", {"m", "l", "r"}, {{"m", 2}, {"l", 1}, {"r", 0}}, false}, row_rm},
        {{"mds-1", {"q", "n", "delta"}, {{"q", 3}, {"n", 2}, {"delta", 1}}, false}, row_mds_1},
        {{"mds-2", {"t", "i"}, {{"t", 3}, {"i", 1}}, false}, row_mds_2},
        {{"mds-3", {"p", "t", "i"}, {{"p", 3}, {"t", 2}, {"i", 1}}, false}, row_mds_3},
        {{"expanded-mds-1", {"p", "t", "n", "delta"},
          {{"p", 2}, {"t", 2}, {"n", 3}, {"delta", 1}}, false}, row_expanded_mds_1},
        {{"expanded-mds-2", {"t", "i"}, {{"t", 3}, {"i", 1}}, false}, row_expanded_mds_2},
        {{"expanded-mds-3", {"p", "t", "i"}, {{"p", 3}, {"t", 2}, {"i", 1}}, false},
         row_expanded_mds_3},
        {{"char-1", {"q", "m", "r", "u"}, {{"q", 3}, {"m", 5}, {"r", 1}, {"u", 2}}, false},
         row_char_1},
        {{"char-2", {"q", "m", "r", "u"}, {{"q", 3}, {"m", 5}, {"r", 1}, {"u", 2}}, false},
         row_char_2},
        {{"char-3", {"q", "m", "r", "v", "u"},
          {{"q", 3}, {"m", 8}, {"r", 1}, {"v", 3}, {"u", 4}}, false}, row_char_3},
        {{"char-4", {"q", "l", "m", "r", "u"},
          {{"q", 4}, {"l", 3}, {"m", 3}, {"r", 1}, {"u", 2}}, false}, row_char_4},
        {{"expanded-char-1", {"p", "t", "m", "r", "u"},
          {{"p", 3}, {"t", 2}, {"m", 5}, {"r", 1}, {"u", 2}}, false}, row_expanded_char_1},
        {{"expanded-char-2", {"p", "t", "m", "r", "u"},
          {{"p", 3}, {"t", 2}, {"m", 5}, {"r", 1}, {"u", 2}}, false}, row_expanded_char_2},
        {{"expanded-char-3", {"p", "t", "m", "r", "v", "u"},
          {{"p", 3}, {"t", 2}, {"m", 8}, {"r", 1}, {"v", 3}, {"u", 4}}, false},
         row_expanded_char_3},
        {{"expanded-char-4", {"p", "t", "l", "m", "r", "u"},
          {{"p", 2}, {"t", 2}, {"l", 3}, {"m", 3}, {"r", 1}, {"u", 2}}, false},
         row_expanded_char_4},
        {{"melas", {"q", "m"}, {{"q", 4}, {"m", 2}}, true}, row_melas},
        {{"melas-binary", {"m"}, {{"m", 3}}, true}, row_melas_binary},
        {{"expanded-melas", {"q", "m"}, {{"q", 4}, {"m", 2}}, true}, row_expanded_melas},
        {{"expanded-bch-herm-1", {"q", "i"}, {{"q", 3}, {"i", 3}}, false},
         row_expanded_herm<row_bch_herm_1>},
        {{"expanded-bch-herm-2", {"q", "m"}, {{"q", 4}, {"m", 3}}, false},
         row_expanded_herm<row_bch_herm_2>},
        {{"expanded-bch-herm-3", {"q", "m", "i"}, {{"q", 4}, {"m", 3}, {"i", 1}}, false},
         row_expanded_herm<row_bch_herm_3>},
        {{"expanded-bch-herm-4", {"q", "m", "i"}, {{"q", 4}, {"m", 3}, {"i", 1}}, false},
         row_expanded_herm<row_bch_herm_4>},
        {{"expanded-bch-herm-5", {"q", "m", "i"}, {{"q", 4}, {"m", 3}, {"i", 3}}, false},
         row_expanded_herm<row_bch_herm_5>},
        {{"expanded-bch-herm-6", {"q", "m", "mu", "i"},
          {{"q", 4}, {"m", 3}, {"mu", 3}, {"i", 4}}, false},
         row_expanded_herm<row_bch_herm_6>},
        {{"expanded-bch-herm-7", {"q", "i"}, {{"q", 3}, {"i", 1}}, false},
         row_expanded_herm<row_bch_herm_7>},
        {{"expanded-bch-aly", {"q", "n", "delta"}, {{"q", 4}, {"n", 15}, {"delta", 1}}, false},
         row_expanded_bch_aly},
    };
    return defs;
}

}  // namespace

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = [] {
        std::vector<TableRow> out;
        for (const RowDef& d : row_defs()) out.push_back(d.row);
        return out;
    }();
    return rows;
}

ParamClaim table_params(const std::string& tag, const RowParams& params) {
    return eval_row(tag, params);
}

}  // namespace ccode
