#pragma once

#include <optional>

#include "ccode/blockcode.hpp"
#include "ccode/poly.hpp"

namespace ccode {

enum class SplitSide { parity, generator };

/// A validated partition of a block code's parity-check (or generator)
/// matrix into consecutive row blocks M_0 .. M_mu. Every block of a valid
/// split has independent rows, M_0 carries the most rows, and the stacked
/// blocks are exactly the split matrix of the source code.
struct SplitSpec {
    BlockCode source;
    SplitSide side = SplitSide::parity;
    std::vector<int> row_counts;
    std::vector<Matrix> blocks;
    int kappa = 0;            // rank of M_0
    std::vector<int> ranks;   // rank of each block

    /// The code whose parity check was split: source itself for parity-side
    /// splits, its dual for generator-side splits.
    BlockCode effective_source() const;
    int memory() const { return static_cast<int>(blocks.size()) - 1; }
};

SplitSpec split_parity(const BlockCode& c, const std::vector<int>& row_counts);
SplitSpec split_generator(const BlockCode& c, const std::vector<int>& row_counts);

enum class Cert { yes, no, undetermined };
const char* cert_name(Cert c);

/// A convolutional code given by the polynomial generator matrix
/// sum coeff[i] D^i with k rows and n columns.
struct ConvCode {
    FieldPtr field;
    int n = 0;
    int k = 0;
    int delta = 0;
    int mu = 0;
    std::vector<Matrix> coeff;  // mu+1 matrices, k x n each
    std::vector<int> row_degrees;
    Cert basic = Cert::undetermined;
    bool reduced = false;
    std::optional<SplitSpec> split;  // provenance when split-built

    Poly entry(int r, int c) const;  // g_rc as a polynomial in D
};

/// Builds the code of a split: blocks are padded with zero rows to kappa
/// rows, flags are certified and cross-checked against the construction.
ConvCode conv_from_split(const SplitSpec& s);
/// Wraps externally supplied coefficient matrices; flags are certified but a
/// failed certificate is reported rather than rejected.
ConvCode conv_from_coeffs(FieldPtr f, std::vector<Matrix> coeff);

struct Degrees {
    int delta = 0;
    int mu = 0;
    std::vector<int> row_degrees;
};
/// Row degrees read off the assembled polynomial matrix (never inferred from
/// block ranks).
Degrees degree_of(const ConvCode& v);

struct BasicCert {
    Cert verdict = Cert::undetermined;
    Poly gcd;               // gcd of the examined k x k minors
    long minors_examined = 0;
    bool sampled = false;   // true when the minor budget forced sampling
};
/// Basic iff the gcd of all k x k minors of G(D) is a nonzero constant.
/// Beyond minor_budget exhaustive minors, samples random column subsets;
/// sampling can only prove "yes", never "no".
BasicCert is_basic(const ConvCode& v, long minor_budget = 1000000, int samples = 10000);

/// Reduced iff the matrix of row-degree leading coefficients has full rank.
bool is_reduced(const ConvCode& v);

struct SearchLimits {
    long state_cap = 1L << 12;
    long branch_cap = 1L << 12;
    long horizon = -1;  // bracket-mode input degree; -1 picks a default
};

struct DistanceResult {
    enum class Mode { exact, lower_bound, bracket } mode = Mode::lower_bound;
    int value = 0;              // exact distance, or certified lower bound
    std::optional<int> upper;   // certified upper bound in bracket mode
    long states = 0;
    long edges = 0;
    long horizon_used = 0;

    bool exact() const { return mode == Mode::exact; }
};

/// Exact free distance by lowest-accumulated-weight-first search on the
/// encoder state graph when the state and branch counts fit the limits;
/// otherwise a certified bracket.
DistanceResult free_distance(const ConvCode& v, const SearchLimits& limits = {},
                             long budget = kDefaultBudget);

struct TheoremABounds {
    DistResult d;        // distance of the effective source code
    DistResult d_perp;   // distance of its dual: the free-distance lower bound
    DistResult d0;       // distance of the kernel of the first block
    DistResult dmu;      // distance of the kernel of the last block
    int dual_window_lo = 0;  // min(d0 + dmu, d) <= d_f of the dual code
    int dual_window_hi = 0;  // <= d
};
TheoremABounds theorem_a_bounds(const SplitSpec& s, long budget = kDefaultBudget);

}  // namespace ccode
