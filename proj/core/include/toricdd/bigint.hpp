#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>

namespace toricdd {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long long n, long long k);

BigInt factorial(unsigned n);

/// (sum parts)! / prod(parts!). Every part must be nonnegative.
BigInt multinomial(std::span<const int> parts);

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace toricdd
