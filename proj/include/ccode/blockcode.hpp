#pragma once

#include <functional>
#include <optional>

#include "ccode/matrix.hpp"

namespace ccode {

/// Default cap on q^k for exact weight enumeration; override with the
/// CCODE_BUDGET environment variable (CLI) or an explicit argument.
constexpr long kDefaultBudget = 1L << 22;

/// Sentinel distance of the zero code (minimum over an empty set).
constexpr int kInfiniteDistance = 1 << 28;

/// A linear [n, k] code held by a full-rank generator/parity-check pair
/// with G H^T = 0. The cached distance is only trusted when dist_exact.
struct BlockCode {
    FieldPtr field;
    int n = 0;
    int k = 0;
    Matrix G;  // k x n
    Matrix H;  // (n-k) x n
    std::optional<int> dist;
    bool dist_exact = false;

    bool degenerate() const { return k == 0 || k == n; }
};

/// Builds a code from a generator matrix; rows are reduced to a basis when
/// dependent, H comes from the kernel.
BlockCode code_from_generator(const Matrix& g);
BlockCode code_from_parity(const Matrix& h);
BlockCode dual(const BlockCode& c);

struct DistResult {
    int value = 0;   // exact minimum weight, or best found when !exact
    bool exact = false;
    long enumerated = 0;
};

/// Exact minimum distance by enumerating nonzero codewords (scalar multiples
/// skipped). When q^k exceeds the budget the enumeration is truncated and the
/// result is flagged inexact.
DistResult min_distance(const BlockCode& c, long budget = kDefaultBudget);

struct EvenOddWeights {
    std::optional<int> even;  // min weight over nonzero codewords with zero coordinate sum
    std::optional<int> odd;
};
EvenOddWeights even_odd_min_weights(const BlockCode& c, long budget = kDefaultBudget);

/// The base-field expansion of a code over an extension field: coordinates
/// are replaced blockwise by their basis coordinates, giving an [mn, mk] code.
BlockCode expand_code(const BlockCode& c, const Basis& beta);

struct CoordChange {
    BlockCode code;
    bool k_dropped = false;  // dimension collapsed (reported, not an error)
};
CoordChange puncture_code(const BlockCode& c, int coord);
CoordChange shorten_code(const BlockCode& c, int coord);
BlockCode extend_code(const BlockCode& c);
BlockCode direct_sum_code(const BlockCode& a, const BlockCode& b);
/// {(u, u+v)} with u from a, v from b; lengths must agree.
BlockCode uuv_code(const BlockCode& a, const BlockCode& b);
BlockCode product_code(const BlockCode& a, const BlockCode& b);

struct EnumStats {
    long visited = 0;
    bool complete = true;  // false when max_words cut the walk short
};

/// Applies fn to nonzero codewords up to scalar multiples (first nonzero
/// message coordinate fixed to 1), stopping after max_words codewords or when
/// fn returns false. fn returning false still counts as a complete walk.
EnumStats for_each_codeword(const BlockCode& c, long max_words,
                            const std::function<bool(const std::vector<int>&)>& fn);

/// q^k clamped to the given ceiling (avoids overflow on large k).
long size_capped(long q, int k, long cap);

}  // namespace ccode
