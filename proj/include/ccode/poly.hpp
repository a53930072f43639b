#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ccode/galois.hpp"

namespace ccode {

/// Dense univariate polynomial over a field, coefficients low-to-high.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<int> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }
    static Poly constant(FieldPtr f, int v) { return Poly(std::move(f), {v}); }
    static Poly x(FieldPtr f) { return Poly(std::move(f), {0, 1}); }

    const FieldPtr& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
    const std::vector<int>& coeffs() const { return c_; }
    int leading() const { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly monic() const;
    int eval(int x) const;
    std::string to_string() const;  // "c0,c1,..." low-to-high; "0" for zero

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    FieldPtr f_;
    std::vector<int> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Division that must be exact; throws if a remainder appears.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic greatest common divisor.
Poly poly_gcd(Poly a, Poly b);

}  // namespace ccode
