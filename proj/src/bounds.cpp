#include "subcount/bounds.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "subcount/abelian.hpp"
#include "subcount/errors.hpp"

namespace subcount {

namespace {

void require_prime(i64 p, const char* who) {
  if (!is_prime(p))
    throw arithmetic_error(std::string(who) + ": " + std::to_string(p) +
                           " is not prime");
}

void require_exponent(int e, const char* who) {
  if (e < 1)
    throw arithmetic_error(std::string(who) + ": exponent must be >= 1, got " +
                           std::to_string(e));
}

}  // namespace

i64 bound_two_prime(i64 p, i64 q, int a, int b) {
  require_prime(p, "bound_two_prime");
  require_prime(q, "bound_two_prime");
  require_exponent(a, "bound_two_prime");
  require_exponent(b, "bound_two_prime");
  if (p >= q)
    throw arithmetic_error("bound_two_prime: requires p < q, got p=" +
                           std::to_string(p) + ", q=" + std::to_string(q));

  i64 best = b * q + i64(a) * b + a + 1;
  if (b > 1) {
    i64 term2 = b * (q + 1) + 2 * a + i64(a - 1) * std::min<i64>(p, b);
    best = std::min(best, term2);
  }
  if (a > 1) {
    i64 m_p = min_noncyclic_pgroup_count(p, a);
    i64 term3 = b + q + 1 + i64(b - 1) * std::min<i64>(a, q) + m_p;
    best = std::min(best, term3);
  }
  return best;
}

i64 bound_three_prime(i64 p, i64 q, i64 r, int a, int b, int c) {
  require_prime(p, "bound_three_prime");
  require_prime(q, "bound_three_prime");
  require_prime(r, "bound_three_prime");
  require_exponent(a, "bound_three_prime");
  require_exponent(b, "bound_three_prime");
  require_exponent(c, "bound_three_prime");
  if (!(p < q && q < r))
    throw arithmetic_error("bound_three_prime: requires p < q < r");

  // Smallest prime powers reaching r + 1.
  i64 pi = 1;
  while (pi < r + 1) pi *= p;
  i64 qj = 1;
  while (qj < r + 1) qj *= q;

  i64 base = i64(a) + b + c + i64(a - 1) * std::min<i64>(b + 1, p) +
             i64(b - 1) * std::min<i64>(c + 1, q) +
             i64(c - 1) * std::min<i64>(a + 1, r);
  i64 tail1 = p + q + r + 2;
  i64 tail2 = q + 2 + std::min({pi + 1, qj, 2 * r + 1});
  i64 tail3 = std::min(r + 1, 2 * q + 2) + std::min(r + 1, 2 * q);
  return base + std::min({tail1, tail2, tail3});
}

i64 bound_pqr(i64 p, i64 q, i64 r) {
  require_prime(p, "bound_pqr");
  require_prime(q, "bound_pqr");
  require_prime(r, "bound_pqr");
  if (!(p < q && q < r))
    throw arithmetic_error("bound_pqr: requires p < q < r");
  return r + 4 + std::min(r + 1, 2 * q);
}

i64 bound_four_or_more() { return 20; }

i64 bound_for_order(const FactoredOrder& shape) {
  const auto& f = shape.factors;
  switch (f.size()) {
    case 0:
      return 1;  // trivial group
    case 1:
      return f[0].second >= 2
                 ? min_noncyclic_pgroup_count(f[0].first, f[0].second)
                 : 2;
    case 2:
      return bound_two_prime(f[0].first, f[1].first, f[0].second,
                             f[1].second);
    case 3:
      if (f[0].second == 1 && f[1].second == 1 && f[2].second == 1)
        return bound_pqr(f[0].first, f[1].first, f[2].first);
      return bound_three_prime(f[0].first, f[1].first, f[2].first,
                               f[0].second, f[1].second, f[2].second);
    default:
      return bound_four_or_more();
  }
}

std::string bound_theorem_tag(const FactoredOrder& shape) {
  const auto& f = shape.factors;
  switch (f.size()) {
    case 0:
      return "trivial order";
    case 1:
      return f[0].second >= 2 ? "noncyclic p-group minimum"
                              : "prime order";
    case 2:
      return "two-prime lower bound";
    case 3:
      if (f[0].second == 1 && f[1].second == 1 && f[2].second == 1)
        return "squarefree three-prime lower bound";
      return "three-prime lower bound";
    default:
      return "four-or-more-prime floor";
  }
}

namespace {

// "p^3q^2" style pattern from symbolic prime letters and exponents.
std::string symbolic_pattern(const std::vector<int>& exps) {
  static const char* letters[] = {"p", "q", "r"};
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    out += letters[i];
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

std::string join_primes(const std::vector<i64>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

// Constraint on the last prime alone: "x = 3", "x <= 7", or "x in {...}".
// `start` is the smallest prime the variable could take (3 for the larger of
// two primes, 5 for the largest of three).
std::string last_prime_clause(char var, const std::vector<i64>& values,
                              i64 start) {
  if (values.size() == 1)
    return std::string(1, var) + " = " + std::to_string(values[0]);
  // A gap-free run of primes from `start` renders as an upper bound.
  std::vector<i64> prefix;
  for (i64 q = start; q <= values.back(); q += 2)
    if (is_prime(q)) prefix.push_back(q);
  if (prefix == values)
    return std::string(1, var) + " <= " + std::to_string(values.back());
  return std::string(1, var) + " in " + join_primes(values);
}

}  // namespace

std::string BoundReport::pattern() const {
  switch (kind) {
    case Kind::pgroup:
      return std::to_string(prime) + "^a";
    case Kind::four_plus:
      return "four or more primes";
    default:
      return symbolic_pattern(exponents);
  }
}

std::string BoundReport::constraint() const {
  if (kind == Kind::pgroup) {
    if (exp_min == exp_max) return "a = " + std::to_string(exp_min);
    return std::to_string(exp_min) + " <= a <= " + std::to_string(exp_max);
  }
  if (kind == Kind::four_plus) return "not excluded";

  const char last_var = exponents.size() == 2 ? 'q' : 'r';
  const std::size_t width = exponents.size();

  std::vector<i64> last_values;
  for (const auto& tup : admitted)
    if (last_values.empty() || last_values.back() != tup.back())
      last_values.push_back(tup.back());

  // Are the leading primes unrestricted (every choice below the last prime
  // admitted)? If not, do they at least form a fixed set across the family?
  auto leading_for = [&](i64 last) {
    std::set<std::vector<i64>> got;
    for (const auto& tup : admitted)
      if (tup.back() == last)
        got.insert(std::vector<i64>(tup.begin(), tup.end() - 1));
    return got;
  };
  auto all_leading = [&](i64 last) {
    std::set<std::vector<i64>> all;
    auto ps = primes_up_to(last - 1);
    if (width == 2) {
      for (i64 p : ps) all.insert({p});
    } else {
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
          all.insert({ps[i], ps[j]});
    }
    return all;
  };

  bool unrestricted = true;
  for (i64 last : last_values)
    if (leading_for(last) != all_leading(last)) {
      unrestricted = false;
      break;
    }
  if (unrestricted) return last_prime_clause(last_var, last_values, exponents.size() == 2 ? 3 : 5);

  if (width == 2) {
    // Try "p in P" with the same P filtered by p < q everywhere.
    std::set<i64> pset;
    for (const auto& tup : admitted) pset.insert(tup[0]);
    bool regular = true;
    for (i64 q : last_values) {
      std::set<std::vector<i64>> expect;
      for (i64 p : pset)
        if (p < q) expect.insert({p});
      if (leading_for(q) != expect) {
        regular = false;
        break;
      }
    }
    if (regular) {
      std::vector<i64> ps(pset.begin(), pset.end());
      std::string clause =
          ps.size() == 1 ? "p = " + std::to_string(ps[0])
                         : "p in " + join_primes(ps);
      return clause + ", " + last_prime_clause(last_var, last_values, exponents.size() == 2 ? 3 : 5);
    }
  }

  // Fall back to the explicit admitted tuples.
  std::string out = "(";
  for (std::size_t i = 0; i < width; ++i) {
    if (i) out += ", ";
    out += std::string(1, "pqr"[i]);
  }
  out += ") in {";
  for (std::size_t i = 0; i < admitted.size(); ++i) {
    if (i) out += ", ";
    out += "(";
    for (std::size_t j = 0; j < admitted[i].size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(admitted[i][j]);
    }
    out += ")";
  }
  return out + "}";
}

std::string BoundReport::render() const {
  std::ostringstream os;
  os << pattern() << " with " << constraint() << "  [bound >= " << min_bound
     << ", " << theorem << "]";
  return os.str();
}

std::vector<BoundReport> candidate_orders(i64 k) {
  if (k > 30)
    throw size_error("candidate_orders: search window supports K <= 30, got " +
                     std::to_string(k));

  const std::vector<i64> primes = primes_up_to(50);
  std::vector<BoundReport> out;

  // Prime-power orders: non-abelian groups need exponent >= 3.
  for (i64 p : primes) {
    int amax = 0;
    for (int a = 3;; ++a) {
      if (min_noncyclic_pgroup_count(p, a) > k) break;
      amax = a;
    }
    if (amax >= 3) {
      BoundReport r;
      r.kind = BoundReport::Kind::pgroup;
      r.prime = p;
      r.exp_min = 3;
      r.exp_max = amax;
      r.min_bound = min_noncyclic_pgroup_count(p, 3);
      r.theorem = "noncyclic p-group minimum";
      out.push_back(std::move(r));
    }
  }

  // Two-prime exponent patterns. term1 = bq + ab + a + 1 at q = 3 already
  // exceeds 30 well before a or b reaches 30, so the loop bounds are safe.
  for (int a = 1; a <= 30; ++a) {
    for (int b = 1; b <= 30; ++b) {
      if (3 * b + i64(a) * b + a + 1 > k &&
          b * 4 + 2 * a > k &&  // cheap underestimates of terms 2 and 3
          b + 4 > k)
        continue;
      BoundReport r;
      r.kind = BoundReport::Kind::two_prime;
      r.exponents = {a, b};
      r.theorem = "two-prime lower bound";
      r.min_bound = 0;
      for (i64 q : primes) {
        if (q < 3) continue;
        for (i64 p : primes) {
          if (p >= q) break;
          i64 bound = bound_two_prime(p, q, a, b);
          if (bound <= k) {
            r.admitted.push_back({p, q});
            if (r.min_bound == 0 || bound < r.min_bound) r.min_bound = bound;
          }
        }
      }
      if (!r.admitted.empty()) {
        std::sort(r.admitted.begin(), r.admitted.end(),
                  [](const std::vector<i64>& x, const std::vector<i64>& y) {
                    return x.back() != y.back() ? x.back() < y.back()
                                                : x < y;
                  });
        out.push_back(std::move(r));
      }
    }
  }

  // Three-prime exponent patterns. Base already contributes a+b+c and the
  // tail is at least 12, so exponents beyond 8 cannot survive K <= 30.
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      for (int c = 1; c <= 8; ++c) {
        BoundReport r;
        r.kind = BoundReport::Kind::three_prime;
        r.exponents = {a, b, c};
        bool squarefree = (a == 1 && b == 1 && c == 1);
        r.theorem = squarefree ? "squarefree three-prime lower bound"
                               : "three-prime lower bound";
        r.min_bound = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
          for (std::size_t j = i + 1; j < primes.size(); ++j)
            for (std::size_t l = j + 1; l < primes.size(); ++l) {
              i64 p = primes[i], q = primes[j], rr = primes[l];
              i64 bound = squarefree ? bound_pqr(p, q, rr)
                                     : bound_three_prime(p, q, rr, a, b, c);
              if (bound <= k) {
                r.admitted.push_back({p, q, rr});
                if (r.min_bound == 0 || bound < r.min_bound)
                  r.min_bound = bound;
              }
            }
        if (!r.admitted.empty()) {
          std::sort(r.admitted.begin(), r.admitted.end(),
                    [](const std::vector<i64>& x, const std::vector<i64>& y) {
                      return x.back() != y.back() ? x.back() < y.back()
                                                  : x < y;
                    });
          out.push_back(std::move(r));
        }
      }
    }
  }

  // Orders with four or more distinct primes carry a constant floor of 20.
  if (k >= bound_four_or_more()) {
    BoundReport r;
    r.kind = BoundReport::Kind::four_plus;
    r.min_bound = bound_four_or_more();
    r.theorem = "four-or-more-prime floor";
    out.push_back(std::move(r));
  }

  return out;
}

}  // namespace subcount
