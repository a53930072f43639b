#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccode {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A concrete finite field GF(p^m), possibly built as a relative extension
/// of another Field (the tower keeps subfield embeddings unambiguous: the
/// elements of the base field are exactly the encodings below base->size()).
///
/// Elements are encoded as integers in [0, q): the element sum c_i x^i has
/// encoding sum enc(c_i) * q0^i where q0 is the base field size. For fields
/// over the prime field this is the usual base-p positional encoding.
class Field : public std::enable_shared_from_this<Field> {
public:
    // Fields larger than this are rejected; everything here is meant to be
    // exhaustively checkable on a desk.
    static constexpr long kMaxSize = 1L << 20;

    static FieldPtr prime(long p);
    /// GF(p^m) over the prime field. Empty modulus selects the canonical one
    /// (least monic irreducible by integer encoding).
    static FieldPtr make(long p, int m, std::vector<int> modulus = {});
    /// Degree-m extension of an arbitrary base field.
    static FieldPtr extension(FieldPtr base, int m, std::vector<int> modulus = {});

    long size() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return m_; }  // over the base field
    int degree_over_prime() const;
    FieldPtr base() const { return base_; }  // null for the prime field
    const std::vector<int>& modulus() const { return modulus_; }  // low-to-high, monic
    std::string name() const;

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const {
        return (a == 0 || b == 0) ? 0 : exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    int inv(int a) const;
    int pow(int a, long e) const;
    /// Least generator of the multiplicative group.
    int primitive_element() const { return generator_; }
    long element_order(int a) const;

    /// Relative trace sum a^(q0^i), i = 0..m-1; lands in the base field.
    int trace_to_base(int a) const;

    /// Canonical coordinates of a over the base field (the base-q0 digits).
    std::vector<int> digits(int a) const;
    int from_digits(const std::vector<int>& d) const;

    /// Structural equality of the whole tower.
    bool same_as(const Field& other) const;

    void check_element(int a) const {
        if (a < 0 || a >= q_) throw Error("element " + std::to_string(a) + " out of range for " + name());
    }

private:
    Field() = default;
    void build_tables();
    int slow_mul(int a, int b) const;
    int slow_pow(int a, long e) const;

    long p_ = 0;   // characteristic
    int m_ = 0;    // degree over base
    long q0_ = 0;  // base field size
    long q_ = 0;   // total size
    FieldPtr base_;               // null for prime fields
    std::vector<int> modulus_;    // size m_+1, encodings over base
    std::vector<int> exp_, log_;  // discrete exp/log w.r.t. generator_
    std::vector<int> neg_;
    std::vector<int> add_;        // full add table when q_ is small, else empty
    int generator_ = 0;
};

/// A basis of a field extension over its base field.
struct Basis {
    FieldPtr field;             // the extension
    std::vector<int> elements;  // field->degree() many, independent over base
};

Basis canonical_basis(const FieldPtr& f);  // {1, x, x^2, ...}
bool is_basis(const Basis& b);
/// The unique basis b* with tr(b_i b*_j) = delta_ij, obtained by inverting
/// the trace matrix; verified post-hoc.
Basis dual_basis(const Basis& b);
/// Deterministic depth-first search for a basis equal to its own dual.
/// Throws when the search space is exhausted without a hit.
Basis self_dual_basis(const FieldPtr& f);

/// Coordinates of a in the basis beta, extracted as c_j = tr(a * b*_j).
std::vector<int> expand_element(int a, const Basis& beta);
int fold_element(const std::vector<int>& coords, const Basis& beta);

std::vector<long> prime_factors(long n);
bool is_prime(long n);

}  // namespace ccode
