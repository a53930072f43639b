#pragma once

#include "ccode/convcode.hpp"
#include "ccode/families.hpp"

namespace ccode {

/// A constructed code together with the predicted parameter tuple and any
/// extra measured values worth reporting (ordered key=value pairs).
struct ConstructionResult {
    ConvCode code;
    ParamClaim claim;
    std::vector<std::pair<std::string, std::string>> info;
};

/// Base-field expansion of a split-built code: the source's dual is expanded
/// in the dual basis, re-split with ranks (mk, m delta), and reassembled.
/// Memory above 1 is accepted but the claim is tagged extrapolated.
ConstructionResult expand_conv(const ConvCode& v, const Basis& beta,
                               long budget = kDefaultBudget);

/// Block-diagonal direct sum of two parity-split codes of equal memory.
/// Memory above 1 is accepted but the claim is tagged extrapolated.
ConstructionResult direct_sum_conv(const ConvCode& a, const ConvCode& b,
                                   long budget = kDefaultBudget);

/// Deletes one coordinate from every block of a parity-split code of memory
/// 1..3; the claimed distance bound depends on whether some minimum-weight
/// dual codeword is nonzero there (decided by exact enumeration).
ConstructionResult puncture_conv(const ConvCode& v, int coord, long budget = kDefaultBudget);

/// Appends the zero-sum parity coordinate to every block of a generator-split
/// memory-1 code; the claimed bound gains one exactly when the odd-like
/// minimum weight is the smaller one.
ConstructionResult extend_conv(const ConvCode& v, long budget = kDefaultBudget);

/// The (u|u+v) combination of two parity-split codes of equal length and
/// memory 1 or 2.
ConstructionResult uuv_conv(const ConvCode& a, const ConvCode& b,
                            long budget = kDefaultBudget);

/// Coefficient-wise Kronecker product of two generator-split memory-1 codes.
ConstructionResult product_conv(const ConvCode& a, const ConvCode& b,
                                long budget = kDefaultBudget);

enum class Verdict { match, match_dual, bound_satisfied, violated, undetermined, unconstrained };
const char* verdict_name(Verdict v);

enum class Overall { ok, violated, undetermined };

struct VerifyReport {
    ParamClaim claim;
    long measured_n = 0, measured_k = 0, measured_delta = 0, measured_mu = 0;
    Cert basic = Cert::undetermined;
    bool reduced = false;
    DistanceResult distance;
    std::vector<std::pair<std::string, Verdict>> items;  // n, k, delta, mu, df
    Overall overall = Overall::ok;
};

/// Compares measured parameters, certificates and the distance result against
/// a claim. "violated" is only emitted on exact evidence: a bracket that
/// straddles a bound stays undetermined. A claim dimension matching n - k
/// instead of k reports match_dual (the dual-convention check).
VerifyReport verify_claim(const ConvCode& v, const ParamClaim& claim,
                          const SearchLimits& limits = {}, long budget = kDefaultBudget);

}  // namespace ccode
