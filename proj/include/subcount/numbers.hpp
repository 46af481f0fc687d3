#pragma once

#include <string>
#include <utility>
#include <vector>

namespace subcount {

using i64 = long long;

bool is_prime(i64 n);
std::vector<i64> primes_up_to(i64 limit);
std::vector<i64> divisors(i64 n);
i64 divisor_count(i64 n);
i64 divisor_sum(i64 n);

// Power with overflow detection; throws arithmetic_error if the result does
// not fit in a signed 64-bit integer.
i64 pow_ll(i64 base, int exp);

// A factored positive integer: (prime, exponent) pairs, primes strictly
// increasing, exponents >= 1.
struct FactoredOrder {
  std::vector<std::pair<i64, int>> factors;

  static FactoredOrder of(i64 n);                    // by trial division
  static FactoredOrder parse(const std::string& s);  // "2^3*3*5^2"
  i64 value() const;
  int num_primes() const { return static_cast<int>(factors.size()); }
  void validate() const;  // throws error when malformed
  std::string str() const;
};

}  // namespace subcount
