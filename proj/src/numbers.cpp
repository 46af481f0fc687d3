#include "subcount/numbers.hpp"

#include <algorithm>
#include <cctype>

#include "subcount/errors.hpp"

namespace subcount {

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<i64> primes_up_to(i64 limit) {
  std::vector<i64> out;
  for (i64 n = 2; n <= limit; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> small, large;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

i64 divisor_count(i64 n) {
  i64 c = 1;
  for (const auto& [p, a] : FactoredOrder::of(n).factors) {
    (void)p;
    c *= a + 1;
  }
  return c;
}

i64 divisor_sum(i64 n) {
  i64 s = 1;
  for (const auto& [p, a] : FactoredOrder::of(n).factors) {
    i64 term = 1, pk = 1;
    for (int i = 0; i < a; ++i) {
      pk *= p;
      term += pk;
    }
    s *= term;
  }
  return s;
}

i64 pow_ll(i64 base, int exp) {
  if (exp < 0) throw arithmetic_error("pow_ll: negative exponent");
  __int128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > __int128(9'000'000'000'000'000'000LL) ||
        acc < -__int128(9'000'000'000'000'000'000LL))
      throw arithmetic_error("pow_ll: overflow");
  }
  return static_cast<i64>(acc);
}

FactoredOrder FactoredOrder::of(i64 n) {
  if (n < 1) throw error("FactoredOrder::of: order must be positive");
  FactoredOrder f;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    f.factors.emplace_back(p, a);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

FactoredOrder FactoredOrder::parse(const std::string& s) {
  FactoredOrder f;
  std::size_t i = 0;
  auto read_int = [&](const char* what) -> i64 {
    std::size_t start = i;
    i64 v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1'000'000'000'000LL) throw parse_error("number too large", start);
      ++i;
    }
    if (i == start) throw parse_error(std::string("expected ") + what, start);
    return v;
  };
  while (true) {
    i64 p = read_int("prime");
    int a = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      i64 e = read_int("exponent");
      if (e < 1 || e > 62) throw parse_error("exponent out of range", i);
      a = static_cast<int>(e);
    }
    f.factors.emplace_back(p, a);
    if (i == s.size()) break;
    if (s[i] != '*') throw parse_error("expected '*'", i);
    ++i;
  }
  f.validate();
  return f;
}

i64 FactoredOrder::value() const {
  i64 v = 1;
  for (const auto& [p, a] : factors) {
    i64 pk = pow_ll(p, a);
    __int128 prod = __int128(v) * pk;
    if (prod > __int128(9'000'000'000'000'000'000LL))
      throw arithmetic_error("FactoredOrder::value: overflow");
    v = static_cast<i64>(prod);
  }
  return v;
}

void FactoredOrder::validate() const {
  i64 prev = 1;
  for (const auto& [p, a] : factors) {
    if (!is_prime(p)) throw error("FactoredOrder: " + std::to_string(p) + " is not prime");
    if (p <= prev) throw error("FactoredOrder: primes must be strictly increasing");
    if (a < 1) throw error("FactoredOrder: exponents must be at least 1");
    prev = p;
  }
}

std::string FactoredOrder::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += std::to_string(factors[i].first);
    if (factors[i].second > 1) out += "^" + std::to_string(factors[i].second);
  }
  return out.empty() ? "1" : out;
}

}  // namespace subcount
