#include "toricdd/bigint.hpp"

#include <stdexcept>

namespace toricdd {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigInt multinomial(std::span<const int> parts) {
  long long total = 0;
  BigInt result = 1;
  for (int part : parts) {
    if (part < 0) {
      throw std::invalid_argument("multinomial: negative part");
    }
    total += part;
    result *= binomial(total, part);
  }
  return result;
}

}  // namespace toricdd
