#include "copbench/rational.hpp"

#include "copbench/errors.hpp"

namespace copbench {

bool le_log2(const Rational& ratio, const BigInt& d) {
    check(d >= 1, "le_log2 needs d >= 1");
    BigInt p = numerator(ratio);
    BigInt q = denominator(ratio); // > 0
    if (p <= 0) return true;       // log2(d) >= 0
    // p/q <= log2 d  <=>  2^p <= d^q  (both sides positive)
    if (d == 1) return false; // p > 0, log2(1) = 0
    // Guard absurd exponents; both stay small for desk-scale inputs.
    check(p < 2'000'000 && q < 2'000'000, "le_log2 exponent too large");
    BigInt lhs = BigInt(1) << static_cast<unsigned>(p);
    BigInt rhs = boost::multiprecision::pow(d, static_cast<unsigned>(q));
    return lhs <= rhs;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace copbench
