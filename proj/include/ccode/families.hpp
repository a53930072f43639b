#pragma once

#include <map>
#include <optional>
#include <string>

#include "ccode/blockcode.hpp"

namespace ccode {

/// A predicted parameter tuple (n, k, delta; mu, d_f) with an inequality
/// bound on the free distance, checkable against a constructed code.
/// -1 stands for "unconstrained" in the integer slots.
struct ParamClaim {
    long n = -1;
    long k = -1;
    long delta = -1;
    long mu = -1;
    enum class Rel { none, ge, gt, eq } df_rel = Rel::none;
    long df_value = 0;
    bool df_of_dual = false;  // the bound addresses the dual code's distance
    long field_q = 0;
    std::string provenance;
    bool constraints_ok = true;
    bool extrapolated = false;           // produced by an unverified multi-memory mode
    std::optional<long> delta_max;       // rows that only bound the degree
    std::string interpretation;          // nonempty when a symbol needed a reading
};

std::string df_bound_to_string(ParamClaim::Rel rel, long value);

// --- seed code constructors ---

/// Cyclic BCH code over fq with defining set {b, .., b+designed_delta-2}
/// closed under q-cyclotomic cosets; H rows are root powers expanded over fq.
BlockCode bch_code(const FieldPtr& fq, int n, int b, int designed_delta);

/// Reed-Solomon code; evaluation points are the powers of an order-n element
/// when n | q-1, otherwise the first n field elements by encoding.
BlockCode rs_code(const FieldPtr& fq, int n, int k);

/// Binary Reed-Muller code RM(r, m).
BlockCode rm_code(int r, int m);

/// Cyclic code of length q^m - 1 whose zeros are a primitive root and its
/// inverse. The parity check keeps the two root blocks stacked in order, so
/// the (m, m) split needs no further choice.
BlockCode melas_code(const FieldPtr& fq, int m);

// --- table formulas ---

using RowParams = std::map<std::string, long>;

struct TableRow {
    std::string tag;
    std::vector<std::string> param_names;
    RowParams smallest;         // canonical smallest legal instantiation
    bool constructible = false; // cmd_table can also build and verify this row
};

const std::vector<TableRow>& table_rows();

/// Evaluates a table row's printed closed forms. Side-condition violations
/// set constraints_ok = false but the formulas are still evaluated.
ParamClaim table_params(const std::string& tag, const RowParams& params);

// shared combinatorics
long binomial(long n, long k);
long s_m(long m, long v);                 // sum of binomials C(m, i), i <= v
long lary_coefficient(long m, long i, long l);  // printed alternating-sum form
long s_m_lary(long m, long v, long l);    // S_m(v) for the l-ary rows
bool is_prime_power(long q, long* p_out = nullptr, long* t_out = nullptr);
long ord_mod(long q, long n);             // multiplicative order of q mod n

}  // namespace ccode
