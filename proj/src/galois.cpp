#include "ccode/galois.hpp"

#include <algorithm>
#include <numeric>

namespace ccode {

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            if (fs.empty() || fs.back() != d) fs.push_back(d);
            n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Dense polynomial helpers over a base field, used only while constructing
// extensions (element arithmetic proper goes through the exp/log tables).
using PolyVec = std::vector<int>;

int pdeg(const PolyVec& a) {
    int d = static_cast<int>(a.size()) - 1;
    while (d >= 0 && a[d] == 0) --d;
    return d;
}

PolyVec pmul_mod(const Field& bf, const PolyVec& a, const PolyVec& b, const PolyVec& mod) {
    PolyVec r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = bf.add(r[i + j], bf.mul(a[i], b[j]));
        }
    }
    int dm = pdeg(mod);
    int lead_inv = bf.inv(mod[dm]);
    for (int d = pdeg(r); d >= dm; d = pdeg(r)) {
        int c = bf.mul(r[d], lead_inv);
        int off = d - dm;
        for (int i = 0; i <= dm; ++i) r[off + i] = bf.sub(r[off + i], bf.mul(c, mod[i]));
    }
    r.resize(dm, 0);
    r.resize(dm > 0 ? dm : 1, 0);
    return r;
}

PolyVec ppow_mod(const Field& bf, PolyVec a, long e, const PolyVec& mod) {
    PolyVec r{1};
    r.resize(std::max<size_t>(1, mod.size() - 1), 0);
    a = pmul_mod(bf, a, {1}, mod);
    while (e > 0) {
        if (e & 1) r = pmul_mod(bf, r, a, mod);
        a = pmul_mod(bf, a, a, mod);
        e >>= 1;
    }
    return r;
}

PolyVec pgcd(const Field& bf, PolyVec a, PolyVec b) {
    while (pdeg(b) >= 0) {
        // a mod b
        int db = pdeg(b);
        int lead_inv = bf.inv(b[db]);
        while (pdeg(a) >= db) {
            int da = pdeg(a);
            int c = bf.mul(a[da], lead_inv);
            int off = da - db;
            for (int i = 0; i <= db; ++i) a[off + i] = bf.sub(a[off + i], bf.mul(c, b[i]));
        }
        std::swap(a, b);
    }
    a.resize(pdeg(a) + 1);
    return a;
}

// Rabin irreducibility test for a monic degree-m polynomial over bf.
bool is_irreducible(const Field& bf, const PolyVec& mod) {
    int m = pdeg(mod);
    if (m <= 0) return false;
    if (m == 1) return true;
    long q0 = bf.size();
    PolyVec x{0, 1};
    // x^(q0^m) must reduce to x
    PolyVec t = x;
    for (int i = 0; i < m; ++i) t = ppow_mod(bf, t, q0, mod);
    PolyVec xr = pmul_mod(bf, x, {1}, mod);
    if (pdeg(t) != pdeg(xr)) return false;
    for (int i = 0; i <= pdeg(t); ++i)
        if (t[i] != xr[i]) return false;
    // gcd(x^(q0^(m/l)) - x, mod) must be constant for each prime l | m
    for (long l : prime_factors(m)) {
        PolyVec u = x;
        for (int i = 0; i < m / l; ++i) u = ppow_mod(bf, u, q0, mod);
        PolyVec diff = u;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = bf.sub(diff[1], 1);
        if (pdeg(pgcd(bf, mod, diff)) != 0) return false;
    }
    return true;
}

}  // namespace

FieldPtr Field::prime(long p) {
    if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
    if (p > kMaxSize) throw Error("field size exceeds the desk-scale cap");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = 1;
    f->q0_ = p;
    f->q_ = p;
    f->modulus_ = {0, 1};  // x, by convention
    f->build_tables();
    return f;
}

FieldPtr Field::make(long p, int m, std::vector<int> modulus) {
    if (m < 1) throw Error("extension degree must be positive");
    if (m == 1 && modulus.empty()) return prime(p);
    return extension(prime(p), m, std::move(modulus));
}

FieldPtr Field::extension(FieldPtr base, int m, std::vector<int> modulus) {
    if (!base) throw Error("null base field");
    if (m < 1) throw Error("extension degree must be positive");
    long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= base->size();
        if (q > kMaxSize) throw Error("field size exceeds the desk-scale cap");
    }
    if (m == 1 && modulus.empty()) modulus = {0, 1};
    if (modulus.empty()) {
        // Canonical choice: least monic irreducible by the integer encoding
        // of the non-leading coefficients.
        for (long t = 0;; ++t) {
            if (t >= q) throw Error("no irreducible modulus found");  // cannot happen
            PolyVec cand(m + 1, 0);
            long x = t;
            for (int i = 0; i < m; ++i) {
                cand[i] = static_cast<int>(x % base->size());
                x /= base->size();
            }
            cand[m] = 1;
            if (is_irreducible(*base, cand)) {
                modulus = cand;
                break;
            }
        }
    } else {
        if (static_cast<int>(modulus.size()) != m + 1)
            throw Error("modulus must have degree " + std::to_string(m));
        for (int c : modulus)
            if (c < 0 || c >= base->size()) throw Error("modulus coefficient out of range");
        if (modulus[m] != 1) throw Error("modulus must be monic");
        if (m > 1 && !is_irreducible(*base, modulus))
            throw Error("modulus is reducible over " + base->name());
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = base->characteristic();
    f->m_ = m;
    f->q0_ = base->size();
    f->q_ = q;
    f->base_ = std::move(base);
    f->modulus_ = std::move(modulus);
    f->build_tables();
    return f;
}

int Field::slow_mul(int a, int b) const {
    if (m_ == 1 && !base_) return static_cast<int>((static_cast<long>(a) * b) % p_);
    PolyVec da = digits(a), db = digits(b);
    PolyVec r = pmul_mod(*base_, da, db, modulus_);
    r.resize(m_, 0);
    return from_digits(r);
}

int Field::slow_pow(int a, long e) const {
    int r = 1, x = a;
    while (e > 0) {
        if (e & 1) r = slow_mul(r, x);
        x = slow_mul(x, x);
        e >>= 1;
    }
    return r;
}

void Field::build_tables() {
    // Find the least generator of the multiplicative group by order testing.
    long n = q_ - 1;
    auto fs = prime_factors(n);
    generator_ = 0;
    for (int g = 1; g < q_; ++g) {
        bool ok = true;
        for (long f : fs)
            if (slow_pow(g, n / f) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            generator_ = g;
            break;
        }
    }
    if (generator_ == 0 && q_ > 1) {
        if (q_ == 2)
            generator_ = 1;
        else
            throw Error("no generator found (internal)");
    }
    exp_.assign(q_, 0);
    log_.assign(q_, 0);
    int x = 1;
    for (long i = 0; i < n; ++i) {
        exp_[i] = x;
        log_[x] = static_cast<int>(i);
        x = slow_mul(x, generator_);
    }
    neg_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        // Negation is digitwise mod p on the base-p expansion.
        long v = a, out = 0, mult = 1;
        while (v > 0) {
            long d = v % p_;
            out += ((p_ - d) % p_) * mult;
            mult *= p_;
            v /= p_;
        }
        neg_[a] = static_cast<int>(out);
    }
    if (p_ != 2 && q_ <= 1024) {
        add_.assign(q_ * q_, 0);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                long va = a, vb = b, out = 0, mult = 1;
                while (va > 0 || vb > 0) {
                    out += ((va % p_ + vb % p_) % p_) * mult;
                    mult *= p_;
                    va /= p_;
                    vb /= p_;
                }
                add_[static_cast<size_t>(a) * q_ + b] = static_cast<int>(out);
            }
    }
}

int Field::add(int a, int b) const {
    if (p_ == 2) return a ^ b;
    if (!add_.empty()) return add_[static_cast<size_t>(a) * q_ + b];
    long va = a, vb = b, out = 0, mult = 1;
    while (va > 0 || vb > 0) {
        out += ((va % p_ + vb % p_) % p_) * mult;
        mult *= p_;
        va /= p_;
        vb /= p_;
    }
    return static_cast<int>(out);
}

int Field::neg(int a) const { return neg_[a]; }

int Field::sub(int a, int b) const { return add(a, neg_[b]); }

int Field::inv(int a) const {
    if (a == 0) throw Error("division by zero in " + name());
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int Field::pow(int a, long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw Error("division by zero in " + name());
        return 0;
    }
    long le = log_[a];
    long n = q_ - 1;
    long idx = ((e % n) * (le % n)) % n;
    if (idx < 0) idx += n;
    return exp_[idx];
}

long Field::element_order(int a) const {
    check_element(a);
    if (a == 0) throw Error("zero has no multiplicative order");
    long n = q_ - 1;
    long g = std::gcd(static_cast<long>(log_[a]), n);
    return n / g;
}

int Field::trace_to_base(int a) const {
    check_element(a);
    if (!base_) return a;
    int s = 0, x = a;
    for (int i = 0; i < m_; ++i) {
        s = add(s, x);
        x = pow(x, q0_);
    }
    if (s >= q0_) throw Error("trace left the base field (internal)");
    return s;
}

std::vector<int> Field::digits(int a) const {
    std::vector<int> d(m_);
    long v = a;
    for (int i = 0; i < m_; ++i) {
        d[i] = static_cast<int>(v % q0_);
        v /= q0_;
    }
    return d;
}

int Field::from_digits(const std::vector<int>& d) const {
    long e = 0;
    for (int i = m_ - 1; i >= 0; --i) e = e * q0_ + d[i];
    return static_cast<int>(e);
}

int Field::degree_over_prime() const {
    int d = m_;
    for (const Field* f = base_.get(); f; f = f->base_.get()) d *= f->m_;
    return d;
}

bool Field::same_as(const Field& other) const {
    if (p_ != other.p_ || m_ != other.m_ || q_ != other.q_ || modulus_ != other.modulus_)
        return false;
    if (!base_ && !other.base_) return true;
    if (!base_ || !other.base_) return false;
    return base_->same_as(*other.base_);
}

std::string Field::name() const {
    if (!base_) return "GF(" + std::to_string(q_) + ")";
    return "GF(" + std::to_string(q_) + ")/" + base_->name();
}

// --- bases ---

Basis canonical_basis(const FieldPtr& f) {
    if (!f->base()) throw Error("canonical basis needs an extension field");
    Basis b;
    b.field = f;
    long x = 1;
    for (int i = 0; i < f->degree(); ++i) {
        b.elements.push_back(static_cast<int>(x));
        x *= f->base()->size();
    }
    return b;
}

namespace {

// Row-reduces the coordinate matrix of the basis elements over the base
// field; a basis must have full rank m.
int coord_rank(const Basis& b) {
    const Field& F = *b.field;
    const Field& B = *F.base();
    int m = F.degree();
    std::vector<std::vector<int>> rows;
    for (int e : b.elements) rows.push_back(F.digits(e));
    int rank = 0;
    for (int c = 0; c < m && rank < static_cast<int>(rows.size()); ++c) {
        int pr = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        int iv = B.inv(rows[rank][c]);
        for (int j = 0; j < m; ++j) rows[rank][j] = B.mul(iv, rows[rank][j]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            int f = rows[r][c];
            for (int j = 0; j < m; ++j) rows[r][j] = B.sub(rows[r][j], B.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

bool is_basis(const Basis& b) {
    if (!b.field || !b.field->base()) return false;
    if (static_cast<int>(b.elements.size()) != b.field->degree()) return false;
    for (int e : b.elements) b.field->check_element(e);
    return coord_rank(b) == b.field->degree();
}

Basis dual_basis(const Basis& b) {
    if (!is_basis(b)) throw Error("not a basis");
    const Field& F = *b.field;
    const Field& B = *F.base();
    int m = F.degree();
    // Solve tr(b_i * x) = delta_ij for x written in canonical coordinates:
    // T[i][s] = tr(b_i x^s), then T y_j = e_j.
    std::vector<std::vector<int>> T(m, std::vector<int>(2 * m, 0));
    long xs = 1;
    for (int s = 0; s < m; ++s) {
        for (int i = 0; i < m; ++i)
            T[i][s] = F.trace_to_base(F.mul(b.elements[i], static_cast<int>(xs)));
        xs *= B.size();
    }
    for (int i = 0; i < m; ++i) T[i][m + i] = 1;  // augment with identity
    // Gauss-Jordan over the base field.
    int rank = 0;
    for (int c = 0; c < m; ++c) {
        int pr = -1;
        for (int r = rank; r < m; ++r)
            if (T[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(T[rank], T[pr]);
        int iv = B.inv(T[rank][c]);
        for (int j = 0; j < 2 * m; ++j) T[rank][j] = B.mul(iv, T[rank][j]);
        for (int r = 0; r < m; ++r) {
            if (r == rank || T[r][c] == 0) continue;
            int f = T[r][c];
            for (int j = 0; j < 2 * m; ++j) T[r][j] = B.sub(T[r][j], B.mul(f, T[rank][j]));
        }
        ++rank;
    }
    if (rank != m) throw Error("singular trace matrix: input is not a basis");
    Basis out;
    out.field = b.field;
    for (int j = 0; j < m; ++j) {
        std::vector<int> coords(m);
        for (int s = 0; s < m; ++s) coords[s] = T[s][m + j];
        out.elements.push_back(F.from_digits(coords));
    }
    // Post-hoc verification of the defining identity.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int t = F.trace_to_base(F.mul(b.elements[i], out.elements[j]));
            if (t != (i == j ? 1 : 0)) throw Error("dual basis verification failed (internal)");
        }
    return out;
}

Basis self_dual_basis(const FieldPtr& f) {
    if (!f->base()) throw Error("self-dual basis needs an extension field");
    const Field& F = *f;
    int m = F.degree();
    long q = F.size();
    // Candidates must satisfy tr(a^2) = 1; extend partial tuples in encoding
    // order so the result is deterministic.
    std::vector<int> cand;
    for (int a = 1; a < q; ++a)
        if (F.trace_to_base(F.mul(a, a)) == 1) cand.push_back(a);
    std::vector<int> chosen;
    std::vector<size_t> pos;
    size_t start = 0;
    while (true) {
        bool advanced = false;
        for (size_t idx = start; idx < cand.size(); ++idx) {
            int a = cand[idx];
            bool ok = true;
            for (int c : chosen)
                if (F.trace_to_base(F.mul(a, c)) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(a);
            pos.push_back(idx);
            if (static_cast<int>(chosen.size()) == m) {
                Basis b{f, chosen};
                if (is_basis(b)) return b;
                chosen.pop_back();
                pos.pop_back();
                continue;
            }
            start = idx + 1;
            advanced = true;
            break;
        }
        if (!advanced) {
            if (chosen.empty()) throw Error("no self-dual basis found for " + f->name());
            start = pos.back() + 1;
            chosen.pop_back();
            pos.pop_back();
        }
    }
}

std::vector<int> expand_element(int a, const Basis& beta) {
    const Field& F = *beta.field;
    F.check_element(a);
    Basis dual = dual_basis(beta);
    std::vector<int> coords(F.degree());
    for (int j = 0; j < F.degree(); ++j)
        coords[j] = F.trace_to_base(F.mul(a, dual.elements[j]));
    return coords;
}

int fold_element(const std::vector<int>& coords, const Basis& beta) {
    const Field& F = *beta.field;
    if (static_cast<int>(coords.size()) != F.degree()) throw Error("coordinate count mismatch");
    int acc = 0;
    for (int j = 0; j < F.degree(); ++j) {
        F.base()->check_element(coords[j]);
        acc = F.add(acc, F.mul(coords[j], beta.elements[j]));
    }
    return acc;
}

}  // namespace ccode
