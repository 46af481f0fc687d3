#include "doctest.h"

#include <algorithm>
#include <set>

#include "subcount/bounds.hpp"
#include "subcount/errors.hpp"

using namespace subcount;

TEST_CASE("two-prime bound values") {
  CHECK(bound_two_prime(2, 3, 1, 1) == 6);
  CHECK(bound_two_prime(2, 3, 2, 1) == 8);
  CHECK(bound_two_prime(2, 3, 3, 1) == 10);
  CHECK(bound_two_prime(2, 3, 7, 1) == 18);
  CHECK(bound_two_prime(2, 5, 7, 1) == 20);
  CHECK(bound_two_prime(2, 3, 1, 2) == 10);
  CHECK(bound_two_prime(2, 3, 2, 2) == 13);
  CHECK(bound_two_prime(2, 3, 3, 2) == 15);
  CHECK(bound_two_prime(2, 3, 4, 2) == 19);
  CHECK(bound_two_prime(2, 5, 2, 2) == 15);
  CHECK(bound_two_prime(3, 5, 2, 2) == 16);
  CHECK(bound_two_prime(2, 7, 3, 2) == 19);

  CHECK_THROWS_AS(bound_two_prime(3, 2, 1, 1), arithmetic_error);
  CHECK_THROWS_AS(bound_two_prime(2, 2, 1, 1), arithmetic_error);
  CHECK_THROWS_AS(bound_two_prime(2, 9, 1, 1), arithmetic_error);
  CHECK_THROWS_AS(bound_two_prime(2, 3, 0, 1), arithmetic_error);
}

TEST_CASE("squarefree three-prime bound values") {
  CHECK(bound_pqr(2, 3, 5) == 15);
  CHECK(bound_pqr(2, 3, 7) == 17);
  CHECK(bound_pqr(2, 3, 11) == 21);
  CHECK(bound_pqr(2, 5, 7) == 19);
  CHECK(bound_pqr(3, 5, 7) == 19);
  CHECK_THROWS_AS(bound_pqr(2, 5, 3), arithmetic_error);
}

TEST_CASE("general three-prime bound values") {
  CHECK(bound_three_prime(2, 3, 5, 1, 1, 1) == 15);
  CHECK(bound_three_prime(2, 3, 5, 2, 1, 1) == 18);
  CHECK(bound_three_prime(2, 3, 5, 1, 2, 1) == 18);
  CHECK(bound_three_prime(2, 3, 5, 1, 1, 2) == 18);
  CHECK(bound_three_prime(2, 3, 7, 2, 1, 1) == 20);
  // All exponents 1 reduces to the squarefree bound.
  CHECK(bound_three_prime(2, 3, 5, 1, 1, 1) == bound_pqr(2, 3, 5));
  CHECK(bound_three_prime(2, 3, 7, 1, 1, 1) == bound_pqr(2, 3, 7));
  CHECK_THROWS_AS(bound_three_prime(2, 5, 3, 1, 1, 1), arithmetic_error);
}

TEST_CASE("remark reproduction: exponent > 1 pushes three-prime bounds up") {
  for (i64 p : {2LL, 3LL, 5LL, 7LL})
    for (i64 q : {3LL, 5LL, 7LL, 11LL, 13LL})
      for (i64 r : {5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL,
                    37LL, 41LL, 43LL, 47LL}) {
        if (!(p < q && q < r)) continue;
        for (int a = 1; a <= 4; ++a)
          for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
              if (a == 1 && b == 1 && c == 1) continue;
              i64 bound = bound_three_prime(p, q, r, a, b, c);
              if (r >= 7) CHECK(bound >= 20);
              if (r == 5) CHECK(bound >= 18);
            }
      }
}

TEST_CASE("two-prime bound monotone in the larger prime") {
  for (i64 p : {2LL, 3LL, 5LL})
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        i64 prev = 0;
        for (i64 q : primes_up_to(47)) {
          if (q <= p) continue;
          i64 bound = bound_two_prime(p, q, a, b);
          CHECK(bound >= prev);
          prev = bound;
        }
      }
}

TEST_CASE("bound floor for four or more primes") {
  CHECK(bound_four_or_more() == 20);
}

TEST_CASE("bound dispatch by factored order") {
  CHECK(bound_for_order(FactoredOrder::parse("2^3*3")) == 10);
  CHECK(bound_for_order(FactoredOrder::parse("2*3*5")) == 15);
  CHECK(bound_for_order(FactoredOrder::parse("2^2*3^2*5")) == 21);
  CHECK(bound_for_order(FactoredOrder::parse("2*3*5*7")) == 20);
  CHECK(bound_for_order(FactoredOrder::parse("2^3")) == 6);
  CHECK(bound_for_order(FactoredOrder::parse("7")) == 2);
  CHECK(bound_for_order(FactoredOrder::parse("7^2")) == 10);
  CHECK(bound_theorem_tag(FactoredOrder::parse("2^3*3")) ==
        "two-prime lower bound");
  CHECK(bound_theorem_tag(FactoredOrder::parse("2*3*5")) ==
        "squarefree three-prime lower bound");
}

namespace {

std::set<std::string> family_renders(i64 k) {
  std::set<std::string> out;
  for (const auto& r : candidate_orders(k)) out.insert(r.render());
  return out;
}

}  // namespace

TEST_CASE("candidate families at budget 19") {
  auto reports = candidate_orders(19);
  // 4 p-group families, 16 two-prime patterns, 4 three-prime patterns.
  CHECK(reports.size() == 24);

  std::set<std::string> rendered;
  for (const auto& r : reports)
    rendered.insert(r.pattern() + " with " + r.constraint());

  const char* expected[] = {
      "2^a with 3 <= a <= 6",
      "3^a with 3 <= a <= 5",
      "5^a with a = 3",
      "7^a with a = 3",
      "pq with q <= 13",
      "p^2q with q <= 13",
      "p^3q with q <= 11",
      "p^4q with q <= 7",
      "p^5q with q <= 7",
      "p^6q with q <= 5",
      "p^7q with q = 3",
      "pq^2 with q <= 7",
      "pq^3 with q = 3",
      "pq^4 with q = 3",
      "p^2q^2 with p in {2, 3}, q <= 7",
      "p^2q^3 with q <= 5",
      "p^2q^4 with q = 3",
      "p^3q^2 with p = 2, q <= 7",
      "p^3q^3 with q = 3",
      "p^4q^2 with q = 3",
      "pqr with r <= 7",
      "p^2qr with r = 5",
      "pq^2r with r = 5",
      "pqr^2 with r = 5",
  };
  std::set<std::string> want(std::begin(expected), std::end(expected));
  CHECK(rendered == want);
}

TEST_CASE("candidate search edges") {
  CHECK(candidate_orders(5).empty());
  CHECK_THROWS_AS(candidate_orders(31), size_error);

  // At budget 20 the four-prime floor no longer excludes anything.
  bool has_four_plus = false;
  for (const auto& r : candidate_orders(20))
    if (r.kind == BoundReport::Kind::four_plus) has_four_plus = true;
  CHECK(has_four_plus);
  for (const auto& r : candidate_orders(19))
    CHECK(r.kind != BoundReport::Kind::four_plus);

  // Every family's minimum bound respects the budget.
  for (const auto& r : candidate_orders(19)) {
    CHECK(r.min_bound >= 2);
    CHECK(r.min_bound <= 19);
  }
}
