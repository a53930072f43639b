#include <random>

#include "ccode/blockcode.hpp"
#include "doctest.h"

using namespace ccode;

namespace {

// Standard [7,4] Hamming parity check: column j is the binary expansion of j+1.
Matrix hamming_h(const FieldPtr& f2) {
    return Matrix::from_rows(f2, {{1, 0, 1, 0, 1, 0, 1},
                                  {0, 1, 1, 0, 0, 1, 1},
                                  {0, 0, 0, 1, 1, 1, 1}});
}

// Independent oracle: minimum weight by plain enumeration of every nonzero
// message vector, no scalar-multiple shortcuts.
int brute_distance(const BlockCode& c) {
    const Field& F = *c.field;
    long q = F.size();
    long total = 1;
    for (int i = 0; i < c.k; ++i) total *= q;
    int best = c.n + 1;
    for (long msg = 1; msg < total; ++msg) {
        std::vector<int> w(c.n, 0);
        long m = msg;
        for (int r = 0; r < c.k; ++r) {
            int coef = static_cast<int>(m % q);
            m /= q;
            if (coef)
                for (int j = 0; j < c.n; ++j)
                    w[j] = F.add(w[j], F.mul(coef, c.G.at(r, j)));
        }
        best = std::min(best, vector_weight(w));
    }
    return best;
}

BlockCode random_code(const FieldPtr& f, int n, int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> el(0, static_cast<int>(f->size()) - 1);
    while (true) {
        Matrix g(f, k, n);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) g.at(r, c) = el(rng);
        if (rank_of(g) != k) continue;
        return code_from_generator(g);
    }
}

}  // namespace

TEST_CASE("make_code from generator and parity") {
    auto f2 = Field::prime(2);
    BlockCode rep = code_from_generator(Matrix::from_rows(f2, {{1, 1, 1}}));
    CHECK(rep.n == 3);
    CHECK(rep.k == 1);
    CHECK(same_row_space(rep.H, Matrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}})));

    BlockCode spc = code_from_parity(Matrix::from_rows(f2, {{1, 1, 1}}));
    CHECK(spc.k == 2);

    BlockCode ham = code_from_parity(hamming_h(f2));
    CHECK(ham.k == 4);
    CHECK(mat_mul(ham.G, transpose(ham.H)).is_zero());
}

TEST_CASE("dual swaps roles") {
    auto f2 = Field::prime(2);
    BlockCode rep = code_from_generator(Matrix::from_rows(f2, {{1, 1, 1}}));
    BlockCode d = dual(rep);
    CHECK(d.k == 2);
    CHECK(min_distance(d).value == 2);
    BlockCode dd = dual(d);
    CHECK(same_row_space(dd.G, rep.G));
    BlockCode ham = code_from_parity(hamming_h(f2));
    CHECK(min_distance(dual(ham)).value == 4);
}

TEST_CASE("minimum distance frozen values") {
    auto f2 = Field::prime(2);
    BlockCode rep = code_from_generator(Matrix::from_rows(f2, {{1, 1, 1}}));
    auto d = min_distance(rep);
    CHECK(d.value == 3);
    CHECK(d.exact);
    BlockCode ham = code_from_parity(hamming_h(f2));
    d = min_distance(ham);
    CHECK(d.value == 3);
    CHECK(d.exact);
}

TEST_CASE("minimum distance agrees with plain enumeration") {
    std::mt19937 rng(23);
    for (FieldPtr f : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
        for (int it = 0; it < 12; ++it) {
            std::uniform_int_distribution<int> nd(2, 7);
            int n = nd(rng);
            std::uniform_int_distribution<int> kd(1, n - 1);
            int k = kd(rng);
            BlockCode c = random_code(f, n, k, rng);
            CHECK(min_distance(c).value == brute_distance(c));
        }
    }
}

TEST_CASE("budget truncation is flagged inexact") {
    auto f2 = Field::prime(2);
    std::mt19937 rng(29);
    BlockCode c = random_code(f2, 12, 9, rng);
    auto d = min_distance(c, 64);
    CHECK_FALSE(d.exact);
    CHECK(d.value >= min_distance(c).value);
}

TEST_CASE("even and odd minimum weights") {
    auto f2 = Field::prime(2);
    BlockCode parity3 = code_from_parity(Matrix::from_rows(f2, {{1, 1, 1}}));
    auto eo = even_odd_min_weights(parity3);
    CHECK(eo.even == 2);
    CHECK_FALSE(eo.odd.has_value());

    BlockCode rep = code_from_generator(Matrix::from_rows(f2, {{1, 1, 1}}));
    eo = even_odd_min_weights(rep);
    CHECK_FALSE(eo.even.has_value());
    CHECK(eo.odd == 3);

    BlockCode ham = code_from_parity(hamming_h(f2));
    eo = even_odd_min_weights(ham);
    CHECK(eo.even == 4);
    CHECK(eo.odd == 3);
}

TEST_CASE("expansion of the quaternary repetition code") {
    auto f4 = Field::make(2, 2);
    BlockCode rep = code_from_generator(Matrix::from_rows(f4, {{1, 1, 1}}));
    Basis beta = canonical_basis(f4);
    BlockCode e = expand_code(rep, beta);
    CHECK(e.n == 6);
    CHECK(e.k == 2);
    CHECK(min_distance(e).value == 3);  // brute force over 4 codewords
    // degree-1 tower expansion is the identity transform (back over GF(4))
    auto f4_over_f4 = Field::extension(f4, 1);
    BlockCode rep2 = code_from_generator(Matrix::from_rows(f4_over_f4, {{1, 1, 1}}));
    BlockCode e2 = expand_code(rep2, canonical_basis(f4_over_f4));
    CHECK(e2.n == 3);
    CHECK(e2.k == 1);
    CHECK(e2.field->same_as(*f4));
    CHECK(same_row_space(e2.G, rep.G));
}

TEST_CASE("expansion dual identity (dual of expansion = expansion of dual)") {
    std::mt19937 rng(31);
    for (FieldPtr f : {Field::make(2, 2), Field::make(3, 2)}) {
        std::uniform_int_distribution<int> el(0, static_cast<int>(f->size()) - 1);
        for (int it = 0; it < 10; ++it) {
            std::uniform_int_distribution<int> nd(2, 5);
            int n = nd(rng);
            std::uniform_int_distribution<int> kd(1, n - 1);
            BlockCode c = random_code(f, n, kd(rng), rng);
            Basis beta{f, {}};
            do {
                beta.elements.clear();
                for (int i = 0; i < f->degree(); ++i) beta.elements.push_back(el(rng));
            } while (!is_basis(beta));
            BlockCode lhs = dual(expand_code(c, beta));
            BlockCode rhs = expand_code(dual(c), dual_basis(beta));
            CHECK(same_row_space(lhs.G, rhs.G));
        }
    }
}

TEST_CASE("expansion never lowers the minimum distance") {
    std::mt19937 rng(37);
    auto f4 = Field::make(2, 2);
    for (int it = 0; it < 10; ++it) {
        std::uniform_int_distribution<int> nd(2, 5);
        int n = nd(rng);
        std::uniform_int_distribution<int> kd(1, n - 1);
        BlockCode c = random_code(f4, n, kd(rng), rng);
        BlockCode e = expand_code(c, canonical_basis(f4));
        CHECK(min_distance(e).value >= min_distance(c).value);
    }
}

TEST_CASE("puncture and shorten") {
    auto f2 = Field::prime(2);
    BlockCode ham = code_from_parity(hamming_h(f2));
    auto p = puncture_code(ham, 0);
    CHECK(p.code.n == 6);
    CHECK(p.code.k == 4);
    CHECK_FALSE(p.k_dropped);
    auto s = shorten_code(ham, 0);
    CHECK(s.code.n == 6);
    CHECK(s.code.k == 3);
    CHECK_THROWS_AS(puncture_code(ham, 9), Error);
}

TEST_CASE("puncture/shorten duality and distance drop") {
    std::mt19937 rng(41);
    for (FieldPtr f : {Field::prime(2), Field::prime(3)}) {
        for (int it = 0; it < 15; ++it) {
            std::uniform_int_distribution<int> nd(3, 7);
            int n = nd(rng);
            std::uniform_int_distribution<int> kd(1, n - 1);
            BlockCode c = random_code(f, n, kd(rng), rng);
            std::uniform_int_distribution<int> cd(0, n - 1);
            int i = cd(rng);
            // (C punctured at i)^perp = C^perp shortened at i
            BlockCode lhs = dual(puncture_code(c, i).code);
            BlockCode rhs = shorten_code(dual(c), i).code;
            CHECK(same_row_space(lhs.G, rhs.G));
            // d drops by at most one, and only when a minimum-weight word hits i
            int d = min_distance(c).value;
            if (d >= 2 && !puncture_code(c, i).k_dropped) {
                int dp = min_distance(puncture_code(c, i).code).value;
                CHECK((dp == d || dp == d - 1));
            }
        }
    }
}

TEST_CASE("extension zeroes every row sum") {
    std::mt19937 rng(43);
    for (FieldPtr f : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
        BlockCode c = random_code(f, 5, 3, rng);
        BlockCode e = extend_code(c);
        CHECK(e.n == 6);
        CHECK(e.k == 3);
        for (int r = 0; r < e.k; ++r) {
            int s = 0;
            for (int j = 0; j < e.n; ++j) s = f->add(s, e.G.at(r, j));
            CHECK(s == 0);
        }
    }
}

TEST_CASE("combination constructions match their parameter formulas") {
    auto f2 = Field::prime(2);
    BlockCode rep = code_from_generator(Matrix::from_rows(f2, {{1, 1, 1}}));
    BlockCode spc = code_from_parity(Matrix::from_rows(f2, {{1, 1, 1}}));
    rep.dist = 3;
    rep.dist_exact = true;
    spc.dist = 2;
    spc.dist_exact = true;

    BlockCode ds = direct_sum_code(rep, spc);
    CHECK(ds.n == 6);
    CHECK(ds.k == 3);
    CHECK(ds.dist == 2);
    CHECK(min_distance(ds).value == 2);

    BlockCode uv = uuv_code(spc, rep);  // [6,3] with d = min{2*2, 3} = 3
    CHECK(uv.n == 6);
    CHECK(uv.k == 3);
    CHECK(uv.dist == 3);
    CHECK(min_distance(uv).value == 3);

    BlockCode pr = product_code(rep, rep);
    CHECK(pr.n == 9);
    CHECK(pr.k == 1);
    CHECK(pr.dist == 9);
    CHECK(min_distance(pr).value == 9);
}

TEST_CASE("uuv and product distance identities on random codes") {
    std::mt19937 rng(47);
    for (FieldPtr f : {Field::prime(2), Field::prime(3)}) {
        for (int it = 0; it < 10; ++it) {
            std::uniform_int_distribution<int> nd(2, 5);
            int n = nd(rng);
            std::uniform_int_distribution<int> kd(1, n - 1);
            BlockCode a = random_code(f, n, kd(rng), rng);
            BlockCode b = random_code(f, n, kd(rng), rng);
            int da = min_distance(a).value, db = min_distance(b).value;
            CHECK(min_distance(uuv_code(a, b)).value == std::min(2 * da, db));
            if (size_capped(f->size(), a.k * b.k, 1 << 16) <= (1 << 16))
                CHECK(min_distance(product_code(a, b)).value == da * db);
        }
    }
}
