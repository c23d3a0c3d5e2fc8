#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>

namespace suspzeta {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational rational(long long num, long long den = 1) {
    return BigRational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

inline long long ll_gcd(long long a, long long b) { return std::gcd(a, b); }
inline long long ll_lcm(long long a, long long b) { return std::lcm(a, b); }

inline std::string to_string(const BigInt& n) { return n.str(); }

inline std::string to_string(const BigRational& q) {
    if (denominator_of(q) == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

} // namespace suspzeta
