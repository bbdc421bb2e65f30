#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace copbench {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Exact test for p/q <= log2(d) with d >= 1, i.e. 2^p <= d^q.
bool le_log2(const Rational& ratio, const BigInt& d);

// Exact test for r <= 1 + log2(d).
inline bool le_one_plus_log2(const Rational& r, const BigInt& d) { return le_log2(r - 1, d); }

BigInt binomial(long long n, long long k);

} // namespace copbench
