#include <random>

#include "ccode/constructions.hpp"
#include "doctest.h"

using namespace ccode;

namespace {

Matrix hamming_h(const FieldPtr& f2) {
    return Matrix::from_rows(f2, {{1, 0, 1, 0, 1, 0, 1},
                                  {0, 1, 1, 0, 0, 1, 1},
                                  {0, 0, 0, 1, 1, 1, 1}});
}

BlockCode random_code(const FieldPtr& f, int n, int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> el(0, static_cast<int>(f->size()) - 1);
    while (true) {
        Matrix g(f, k, n);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) g.at(r, c) = el(rng);
        if (rank_of(g) == k) return code_from_generator(g);
    }
}

ConvCode random_parity_conv(const FieldPtr& f, int n, const std::vector<int>& counts,
                            std::mt19937& rng) {
    int total = 0;
    for (int c : counts) total += c;
    return conv_from_split(split_parity(random_code(f, n, n - total, rng), counts));
}

Verdict item(const VerifyReport& r, const std::string& name) {
    for (const auto& [k, v] : r.items)
        if (k == name) return v;
    throw Error("no item " + name);
}

}  // namespace

TEST_CASE("expansion of the Melas-derived code") {
    auto f4 = Field::make(2, 2);
    ConvCode mv = conv_from_split(split_parity(melas_code(f4, 2), {2, 2}));
    ConstructionResult res = expand_conv(mv, canonical_basis(f4));
    CHECK(res.code.n == 30);
    CHECK(res.code.k == 4);
    CHECK(res.code.delta == 4);
    CHECK(res.code.mu == 1);
    CHECK(res.code.basic == Cert::yes);
    CHECK(res.code.reduced);
    CHECK(res.claim.n == 30);
    CHECK(res.claim.k == 4);
    CHECK(res.claim.delta == 4);
    CHECK(res.claim.df_rel == ParamClaim::Rel::ge);
    CHECK(res.claim.df_value == 8);  // dual distance of the quaternary seed
    DistanceResult d = free_distance(res.code);
    CHECK(d.exact());
    CHECK(d.value == 32);  // frozen oracle value
    CHECK(d.value >= res.claim.df_value);

    // the tabulated dual-convention row matches through the verifier
    ParamClaim row = table_params("expanded-melas", {{"q", 4}, {"m", 2}});
    VerifyReport vr = verify_claim(res.code, row);
    CHECK(item(vr, "n") == Verdict::match);
    CHECK(item(vr, "k") == Verdict::match_dual);
    CHECK(item(vr, "delta") == Verdict::match);
    CHECK(item(vr, "mu") == Verdict::match);
    CHECK(item(vr, "df") == Verdict::bound_satisfied);
    CHECK(vr.overall == Overall::ok);
}

TEST_CASE("expansion through a degree-1 tower is the identity on parameters") {
    auto f4 = Field::make(2, 2);
    auto tower = Field::extension(f4, 1);
    std::mt19937 rng(211);
    BlockCode c = random_code(tower, 6, 3, rng);
    ConvCode v = conv_from_split(split_parity(c, {2, 1}));
    ConstructionResult res = expand_conv(v, canonical_basis(tower));
    CHECK(res.code.n == v.n);
    CHECK(res.code.k == v.k);
    CHECK(res.code.delta == v.delta);
}

TEST_CASE("expansion with self-dual and random bases keeps the claim") {
    auto f4 = Field::make(2, 2);
    std::mt19937 rng(223);
    for (int it = 0; it < 5; ++it) {
        BlockCode c = random_code(f4, 5, 2, rng);
        SplitSpec s = split_parity(c, {2, 1});
        if (s.ranks[0] < s.ranks[1]) continue;
        ConvCode v = conv_from_split(s);
        for (Basis beta : {canonical_basis(f4), self_dual_basis(f4)}) {
            ConstructionResult res = expand_conv(v, beta);
            CHECK(res.code.n == 2 * v.n);
            CHECK(res.code.k == 2 * v.k);
            CHECK(res.code.delta == 2 * v.delta);
            CHECK(res.code.mu == 1);
            VerifyReport vr = verify_claim(res.code, res.claim);
            CHECK(vr.overall == Overall::ok);
        }
    }
}

TEST_CASE("direct sum adds every parameter") {
    auto f2 = Field::prime(2);
    BlockCode ham = code_from_parity(hamming_h(f2));
    ConvCode v1 = conv_from_split(split_parity(ham, {2, 1}));
    ConvCode v2 = conv_from_split(split_parity(melas_code(f2, 3), {3, 3}));
    ConstructionResult res = direct_sum_conv(v1, v2);
    CHECK(res.code.n == 14);
    CHECK(res.code.k == 5);
    CHECK(res.code.delta == 4);
    CHECK(res.code.mu == 1);
    CHECK(res.code.basic == Cert::yes);
    CHECK(res.code.reduced);
    CHECK(res.claim.df_value == 2);  // min{4, 2}
    VerifyReport vr = verify_claim(res.code, res.claim);
    CHECK(vr.overall == Overall::ok);

    // self-sum doubles
    ConstructionResult twice = direct_sum_conv(v1, v1);
    CHECK(twice.code.n == 2 * v1.n);
    CHECK(twice.code.k == 2 * v1.k);
    CHECK(twice.code.delta == 2 * v1.delta);
}

TEST_CASE("direct sum dual-distance identity") {
    std::mt19937 rng(227);
    auto f3 = Field::prime(3);
    for (int it = 0; it < 8; ++it) {
        ConvCode a = random_parity_conv(f3, 5, {2, 1}, rng);
        ConvCode b = random_parity_conv(f3, 4, {1, 1}, rng);
        ConstructionResult res = direct_sum_conv(a, b);
        int d1 = min_distance(dual(a.split->source)).value;
        int d2 = min_distance(dual(b.split->source)).value;
        BlockCode sum_dual = dual(res.code.split->source);
        CHECK(min_distance(sum_dual).value == std::min(d1, d2));
    }
}

TEST_CASE("puncturing keeps parameters and picks the right branch") {
    std::mt19937 rng(229);
    auto f2 = Field::prime(2);
    int branch_hit = 0, branch_miss = 0;
    for (int it = 0; it < 40 && (branch_hit < 3 || branch_miss < 3); ++it) {
        BlockCode c = random_code(f2, 8, 4, rng);
        BlockCode cp = dual(c);
        int dperp = min_distance(cp).value;
        if (dperp <= 1) continue;
        ConvCode v = conv_from_split(split_parity(c, {2, 2}));
        int coord = std::uniform_int_distribution<int>(0, 7)(rng);
        ConstructionResult res = puncture_conv(v, coord);
        CHECK(res.code.n == 7);
        CHECK(res.code.k == v.k);
        CHECK(res.code.delta == v.delta);
        CHECK(res.code.mu == v.mu);
        // branch decision must match the punctured dual's true distance
        int dp = min_distance(dual(res.code.split->source)).value;
        bool hit = false;
        for (const auto& [key, val] : res.info)
            if (key == "min_weight_hits_coord") hit = val == "1";
        if (hit) {
            ++branch_hit;
            CHECK(res.claim.df_value == dperp - 1);
            CHECK(dp == dperp - 1);
        } else {
            ++branch_miss;
            CHECK(res.claim.df_value == dperp);
            CHECK(dp == dperp);
        }
        VerifyReport vr = verify_claim(res.code, res.claim);
        CHECK(vr.overall == Overall::ok);
    }
    CHECK(branch_hit >= 3);
    CHECK(branch_miss >= 3);
}

TEST_CASE("puncturing memory 2 and 3 keeps the degree") {
    std::mt19937 rng(233);
    auto f2 = Field::prime(2);
    for (auto counts : {std::vector<int>{2, 2, 1}, std::vector<int>{2, 1, 2, 1}}) {
        for (int it = 0; it < 10; ++it) {
            int total = 0;
            for (int c : counts) total += c;
            BlockCode c = random_code(f2, 10, 10 - total, rng);
            if (min_distance(dual(c)).value <= 1) continue;
            ConvCode v = conv_from_split(split_parity(c, counts));
            ConstructionResult res = puncture_conv(v, 3);
            CHECK(res.code.n == 9);
            CHECK(res.code.k == v.k);
            CHECK(res.code.delta == v.delta);
            CHECK(res.code.mu == v.mu);
        }
    }
}

TEST_CASE("puncturing rejects dual distance 1") {
    auto f2 = Field::prime(2);
    // a code whose dual has a weight-1 word: zero column in H^T direction
    Matrix g = Matrix::from_rows(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    BlockCode c = code_from_generator(g);
    ConvCode v = conv_from_split(split_parity(c, {1, 1}));
    CHECK_THROWS_AS(puncture_conv(v, 0), Error);
}

TEST_CASE("extension of the Hamming generator split") {
    auto f2 = Field::prime(2);
    BlockCode ham = code_from_parity(hamming_h(f2));
    ConvCode v = conv_from_split(split_generator(ham, {2, 2}));
    ConstructionResult res = extend_conv(v);
    CHECK(res.code.n == 8);
    CHECK(res.code.k == 2);
    CHECK(res.code.delta == 2);
    CHECK(res.code.mu == 1);
    CHECK(res.claim.df_value == 4);  // d_odd = 3 < d_even = 4 gains one
    for (const auto& [key, val] : res.info) {
        if (key == "d_even") CHECK(val == "4");
        if (key == "d_odd") CHECK(val == "3");
    }
    // extended blocks have zero row sums
    for (const Matrix& b : res.code.split->blocks)
        for (int r = 0; r < b.rows(); ++r) {
            int s = 0;
            for (int j = 0; j < b.cols(); ++j) s = f2->add(s, b.at(r, j));
            CHECK(s == 0);
        }
    VerifyReport vr = verify_claim(res.code, res.claim);
    CHECK(vr.overall == Overall::ok);

    // all-even-like source stays at d
    BlockCode spc = code_from_parity(Matrix::from_rows(
        f2, {{1, 1, 1, 1, 1, 1}}));  // single parity check, every word even-like
    ConvCode v2 = conv_from_split(split_generator(spc, {3, 2}));
    ConstructionResult res2 = extend_conv(v2);
    CHECK(res2.claim.df_value == min_distance(spc).value);
}

TEST_CASE("extension refuses parity-side provenance") {
    auto f2 = Field::prime(2);
    BlockCode ham = code_from_parity(hamming_h(f2));
    ConvCode v = conv_from_split(split_parity(ham, {2, 1}));
    CHECK_THROWS_AS(extend_conv(v), Error);
    CHECK_THROWS_AS(product_conv(v, v), Error);
    ConvCode g = conv_from_split(split_generator(ham, {2, 2}));
    CHECK_THROWS_AS(puncture_conv(g, 0), Error);
    CHECK_THROWS_AS(expand_conv(g, canonical_basis(Field::make(2, 2))), Error);
}

TEST_CASE("(u|u+v) memory 1 with frozen dual distances") {
    auto f2 = Field::prime(2);
    std::mt19937 rng(239);
    for (int it = 0; it < 8; ++it) {
        ConvCode a = random_parity_conv(f2, 6, {2, 1}, rng);
        ConvCode b = random_parity_conv(f2, 6, {2, 2}, rng);
        ConstructionResult res = uuv_conv(a, b);
        CHECK(res.code.n == 12);
        CHECK(res.code.k == a.k + b.k);
        CHECK(res.code.delta == a.delta + b.delta);
        CHECK(res.code.mu == 1);
        int d1 = min_distance(dual(a.split->source)).value;
        int d2 = min_distance(dual(b.split->source)).value;
        CHECK(res.claim.df_value == std::min(2 * d2, d1));
        // the proof's dual-distance identity, checked exactly
        CHECK(min_distance(dual(res.code.split->source)).value == std::min(2 * d2, d1));
        VerifyReport vr = verify_claim(res.code, res.claim);
        CHECK(vr.overall == Overall::ok);
    }
}

TEST_CASE("(u|u+v) memory 2 adds degrees") {
    auto f3 = Field::prime(3);
    std::mt19937 rng(241);
    for (int it = 0; it < 5; ++it) {
        ConvCode a = random_parity_conv(f3, 7, {2, 2, 1}, rng);
        ConvCode b = random_parity_conv(f3, 7, {1, 1, 1}, rng);
        ConstructionResult res = uuv_conv(a, b);
        CHECK(res.code.n == 14);
        CHECK(res.code.k == a.k + b.k);
        CHECK(res.code.delta == a.delta + b.delta);
        CHECK(res.code.mu == 2);
        CHECK(res.code.basic == Cert::yes);
        CHECK(res.code.reduced);
    }
    ConvCode a = random_parity_conv(f3, 7, {2, 1}, rng);
    ConvCode b = random_parity_conv(f3, 6, {2, 1}, rng);
    CHECK_THROWS_AS(uuv_conv(a, b), Error);  // length mismatch

    // opposite strict rank orderings would shrink the degree: refused
    ConvCode c = random_parity_conv(f3, 8, {2, 2, 1}, rng);
    ConvCode d = random_parity_conv(f3, 8, {2, 1, 2}, rng);
    CHECK_THROWS_AS(uuv_conv(c, d), Error);
}

TEST_CASE("product multiplies parameters") {
    auto f2 = Field::prime(2);
    std::mt19937 rng(251);
    for (int it = 0; it < 8; ++it) {
        BlockCode c1 = random_code(f2, 3, 2, rng);
        BlockCode c2 = random_code(f2, 4, 2, rng);
        ConvCode v1 = conv_from_split(split_generator(c1, {1, 1}));
        ConvCode v2 = conv_from_split(split_generator(c2, {1, 1}));
        ConstructionResult res = product_conv(v1, v2);
        CHECK(res.code.n == 12);
        CHECK(res.code.k == 1);
        CHECK(res.code.delta == 1);
        CHECK(res.code.mu == 1);
        CHECK(res.code.basic == Cert::yes);
        CHECK(res.code.reduced);
        int d1 = min_distance(c1).value, d2 = min_distance(c2).value;
        CHECK(res.claim.df_value == d1 * d2);
        VerifyReport vr = verify_claim(res.code, res.claim);
        CHECK(vr.overall == Overall::ok);
    }
}

TEST_CASE("product with a memory-0 factor degenerates to a block code") {
    auto f2 = Field::prime(2);
    std::mt19937 rng(253);
    BlockCode c1 = random_code(f2, 3, 2, rng);
    BlockCode c2 = random_code(f2, 3, 2, rng);
    ConvCode v1 = conv_from_split(split_generator(c1, {1, 1}));
    ConvCode v2 = conv_from_split(split_generator(c2, {2}));  // memory 0
    CHECK(v2.delta == 0);
    ConstructionResult res = product_conv(v1, v2);
    CHECK(res.code.n == 9);
    CHECK(res.code.k == v1.k * v2.k);
    CHECK(res.code.delta == 0);
    CHECK(res.code.mu == 0);
    CHECK(res.claim.mu == 0);
    VerifyReport vr = verify_claim(res.code, res.claim);
    CHECK(vr.overall == Overall::ok);
}

TEST_CASE("verifier: negative control and bracket awareness") {
    auto f4 = Field::make(2, 2);
    ConvCode mv = conv_from_split(split_parity(melas_code(f4, 2), {2, 2}));
    ParamClaim claim;
    claim.n = 15;
    claim.k = 2;
    claim.delta = 2;
    claim.mu = 1;
    claim.field_q = 4;
    claim.df_rel = ParamClaim::Rel::ge;
    claim.df_value = 3;
    VerifyReport ok = verify_claim(mv, claim);
    CHECK(ok.overall == Overall::ok);
    CHECK(item(ok, "k") == Verdict::match);

    ParamClaim bad = claim;
    bad.k = claim.k + 1;
    VerifyReport vr = verify_claim(mv, bad);
    CHECK(item(vr, "k") == Verdict::violated);
    CHECK(vr.overall == Overall::violated);

    // a bracket straddling the bound stays undetermined, never violated
    SearchLimits tight;
    tight.state_cap = 4;
    ParamClaim mid = claim;
    mid.df_value = 10;  // bracket is [8, 24]
    VerifyReport und = verify_claim(mv, mid, tight);
    CHECK(item(und, "df") == Verdict::undetermined);
    CHECK(und.overall == Overall::undetermined);

    // a certified upper bound below the claim is exact evidence
    ParamClaim high = claim;
    high.df_value = 1000;
    VerifyReport bad2 = verify_claim(mv, high, tight);
    CHECK(item(bad2, "df") == Verdict::violated);

    ParamClaim low = claim;
    low.df_value = 5;
    VerifyReport fine = verify_claim(mv, low, tight);
    CHECK(item(fine, "df") == Verdict::bound_satisfied);

    // unconstrained slots
    ParamClaim loose;
    loose.field_q = 4;
    VerifyReport un = verify_claim(mv, loose);
    CHECK(item(un, "n") == Verdict::unconstrained);
    CHECK(item(un, "df") == Verdict::unconstrained);
    CHECK(un.overall == Overall::ok);
}

TEST_CASE("multi-memory direct sum and expansion are tagged extrapolated") {
    auto f2 = Field::prime(2);
    std::mt19937 rng(257);
    ConvCode a = random_parity_conv(f2, 8, {2, 2, 1}, rng);
    ConvCode b = random_parity_conv(f2, 8, {2, 1, 1}, rng);
    ConstructionResult ds = direct_sum_conv(a, b);
    CHECK(ds.claim.extrapolated);
    CHECK(ds.code.mu == 2);
    CHECK(ds.code.delta == a.delta + b.delta);

    auto f4 = Field::make(2, 2);
    ConvCode c = random_parity_conv(f4, 6, {2, 1, 1}, rng);
    ConstructionResult ex = expand_conv(c, canonical_basis(f4));
    CHECK(ex.claim.extrapolated);
    CHECK(ex.code.n == 12);
    CHECK(ex.code.k == 2 * c.k);
    CHECK(ex.code.delta == 2 * c.delta);
    CHECK(ex.code.mu == 2);
}
