#pragma once
// Lower bounds on the subgroup count of a non-nilpotent group, organised by
// how many distinct primes divide the order, plus the candidate-order search
// built on top of them: which order shapes could still host a group with at
// most K subgroups.

#include <string>
#include <vector>

#include "subcount/numbers.hpp"

namespace subcount {

// Lower bound for |Sub G| when |G| = p^a * q^b, p < q, G non-nilpotent.
// Minimum of up to three estimates; the third uses the minimal subgroup
// count of a noncyclic p-group of order p^a.
i64 bound_two_prime(i64 p, i64 q, int a, int b);

// Lower bound for |Sub G| when |G| = p^a * q^b * r^c, p < q < r.
// Implemented exactly in its stated form (the proof derives values larger by
// one in two branches; a stated lower bound is safe to weaken, never to
// strengthen).
i64 bound_three_prime(i64 p, i64 q, i64 r, int a, int b, int c);

// Lower bound for squarefree |G| = p*q*r, p < q < r: r + 4 + min(r+1, 2q).
i64 bound_pqr(i64 p, i64 q, i64 r);

// Any group whose order has at least four distinct prime factors has at
// least this many subgroups.
i64 bound_four_or_more();

// Dispatch on the number of distinct primes in `shape`. Single-prime orders
// use the noncyclic p-group minimum (exponent >= 2); exponent 1 gives the
// trivial answer 2 (Z_p has exactly two subgroups).
i64 bound_for_order(const FactoredOrder& shape);
// Human-readable tag naming which bound bound_for_order applied.
std::string bound_theorem_tag(const FactoredOrder& shape);

// One family of order shapes that survives the candidate search: an exponent
// pattern together with the primes for which the applicable bound stays
// within budget.
struct BoundReport {
  enum class Kind { pgroup, two_prime, three_prime, four_plus };
  Kind kind = Kind::two_prime;

  // Kind::pgroup: concrete prime and the admitted exponent range.
  i64 prime = 0;
  int exp_min = 0;
  int exp_max = 0;

  // Kind::two_prime / three_prime: exponents (a,b) or (a,b,c) listed on the
  // primes in increasing order, and every admitted prime tuple.
  std::vector<int> exponents;
  std::vector<std::vector<i64>> admitted;

  i64 min_bound = 0;     // smallest bound among admitted instances
  std::string theorem;   // which bound produced this family

  std::string pattern() const;     // "2^a", "p^3q^2", "pqr^2", ...
  std::string constraint() const;  // "a <= 6", "p = 2, q <= 7", "r = 5", ...
  std::string render() const;  // pattern, constraint, and bound annotation
};

// Families of order shapes not excluded at subgroup budget K. Searches
// primes up to 50 (sufficient for K <= 30; larger K throws size_error).
// p-group families need exponent >= 3 (smaller p-power orders are abelian
// only); two- and three-prime families are grouped by exponent pattern.
std::vector<BoundReport> candidate_orders(i64 k);

}  // namespace subcount
