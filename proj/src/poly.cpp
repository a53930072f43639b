#include "ccode/poly.hpp"

#include <algorithm>

namespace ccode {

namespace {
const FieldPtr& pick_field(const Poly& a, const Poly& b) {
    if (a.field()) return a.field();
    return b.field();
}
}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    const FieldPtr& f = pick_field(a, b);
    const Field& F = *f;
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    const FieldPtr& f = pick_field(a, b);
    const Field& F = *f;
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    const FieldPtr& f = pick_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(f);
    const Field& F = *f;
    std::vector<int> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        int av = a.coeffs()[i];
        if (av == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(av, b.coeffs()[j]));
    }
    return Poly(f, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    const FieldPtr& f = pick_field(a, b);
    const Field& F = *f;
    std::vector<int> rem = a.coeffs();
    int db = b.degree();
    int lead_inv = F.inv(b.leading());
    std::vector<int> quot(a.degree() >= db ? a.degree() - db + 1 : 0, 0);
    for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
        if (rem[d] == 0) continue;
        int c = F.mul(rem[d], lead_inv);
        quot[d - db] = c;
        for (int i = 0; i <= db; ++i)
            rem[d - db + i] = F.sub(rem[d - db + i], F.mul(c, b.coeff(i)));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    const Field& F = *f_;
    int iv = F.inv(leading());
    std::vector<int> c = c_;
    for (int& v : c) v = F.mul(iv, v);
    return Poly(f_, std::move(c));
}

int Poly::eval(int x) const {
    const Field& F = *f_;
    int acc = 0;
    for (int i = degree(); i >= 0; --i) acc = F.add(F.mul(acc, x), c_[i]);
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i]);
    }
    return s;
}

}  // namespace ccode
