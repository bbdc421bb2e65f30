#include "copbench/gf.hpp"

#include <algorithm>

#include "copbench/errors.hpp"

namespace copbench {

bool is_prime_power(int q, int* p_out, int* e_out) {
    if (q < 2) return false;
    int p = 0;
    for (int c = 2; c * c <= q; ++c)
        if (q % c == 0) {
            p = c;
            break;
        }
    if (p == 0) p = q; // q itself prime
    int e = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) return false;
    if (p_out) *p_out = p;
    if (e_out) *e_out = e;
    return true;
}

namespace {

using Poly = std::vector<int>; // coefficients, constant term first

Poly decode(int x, int len, int p) {
    Poly c(len);
    for (int i = 0; i < len; ++i) {
        c[i] = x % p;
        x /= p;
    }
    return c;
}

int encode(const Poly& c, int p) {
    int x = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) x = x * p + c[i];
    return x;
}

// remainder of a by monic b, both coefficient vectors over GF(p)
Poly poly_rem(Poly a, const Poly& b, int p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    a.resize(db);
    for (int& x : a) x = ((x % p) + p) % p;
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

bool divides(const Poly& g, const Poly& m, int p) {
    Poly r = poly_rem(m, g, p);
    return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

bool is_irreducible(const Poly& m, int p, int e) {
    for (int d = 1; d <= e / 2; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int gi = 0; gi < count; ++gi) {
            Poly g = decode(gi, d, p);
            g.push_back(1); // monic of degree d
            if (divides(g, m, p)) return false;
        }
    }
    return true;
}

} // namespace

GaloisField::GaloisField(int q) : q_(q) {
    if (!is_prime_power(q, &p_, &e_))
        fail(Err::NotAPrimePower, std::to_string(q) + " is not a prime power");
    if (e_ == 1) {
        irred_ = {0, 1}; // x, unused for prime fields
    } else {
        // smallest integer-encoded monic irreducible of degree e
        int count = 1;
        for (int i = 0; i < e_; ++i) count *= p_;
        for (int mi = 0; mi < count; ++mi) {
            Poly m = decode(mi, e_, p_);
            m.push_back(1);
            if (is_irreducible(m, p_, e_)) {
                irred_ = m;
                break;
            }
        }
        check(!irred_.empty(), "no irreducible polynomial found");
    }
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) {
            if (e_ == 1) {
                add_[a * q_ + b] = (a + b) % p_;
                mul_[a * q_ + b] = (a * b) % p_;
            } else {
                Poly pa = decode(a, e_, p_), pb = decode(b, e_, p_);
                Poly s(e_);
                for (int i = 0; i < e_; ++i) s[i] = (pa[i] + pb[i]) % p_;
                add_[a * q_ + b] = encode(s, p_);
                Poly prod = poly_rem(poly_mul(pa, pb, p_), irred_, p_);
                mul_[a * q_ + b] = encode(prod, p_);
            }
        }
}

int GaloisField::neg(int a) const {
    for (int b = 0; b < q_; ++b)
        if (add(a, b) == 0) return b;
    fail(Err::InternalCheckFailed, "no additive inverse");
}

int GaloisField::inv(int a) const {
    check(a != 0, "inverse of zero");
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    fail(Err::InternalCheckFailed, "no multiplicative inverse");
}

} // namespace copbench
