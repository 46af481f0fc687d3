#pragma once

#include <map>
#include <string>
#include <vector>

#include "subcount/group.hpp"
#include "subcount/numbers.hpp"

namespace subcount {

// Isomorphism type of a finite abelian group: for each prime, the exponent
// partition of its primary component (parts descending).
struct AbelianShape {
  std::map<i64, std::vector<int>> components;

  static AbelianShape cyclic(const FactoredOrder& f);
  i64 order() const;
  void validate() const;
  std::string str() const;  // e.g. "Z4 x Z2 x Z9"
};

// Number of subgroups of the cyclic group with the given factored order:
// the product of (a_i + 1).
i64 count_cyclic(const FactoredOrder& f);

// Number of subgroups of Z_{p^b} x Z_{p^a} for 0 <= a <= b, by the exact
// rational closed form; the division by (p-1)^2 must come out exact.
i64 count_rank2(i64 p, int a, int b);

// Gaussian binomial coefficient C(n, i)_p by the q-Pascal recurrence, and
// the subgroup count of the rank-n elementary abelian p-group.
i64 gaussian_binomial(int n, int i, i64 p);
i64 count_elementary(i64 p, int n);

// Subgroup count of one primary component.  Dispatch: one part -> a+1; two
// parts -> count_rank2; all parts 1 -> count_elementary; otherwise construct
// the group and enumerate.  lattice_cap > 0 aborts an enumeration that
// exceeds that many subgroups (size error), for budgeted sweeps.
i64 count_p_component(i64 p, const std::vector<int>& partition,
                      int cap = kDefaultOrderCap, i64 lattice_cap = 0);

// Product of count_p_component over the primes of the shape.
i64 count_abelian(const AbelianShape& shape, int cap = kDefaultOrderCap,
                  i64 lattice_cap = 0);

// Minimum subgroup count over non-cyclic p-groups of order p^a.
i64 min_noncyclic_pgroup_count(i64 p, int a);

// Direct products of cyclic groups realizing a component or a whole shape.
Group make_abelian_p_group(i64 p, const std::vector<int>& partition,
                           int cap = kDefaultOrderCap);
Group make_abelian(const AbelianShape& shape, int cap = kDefaultOrderCap);

// All partitions of n, each with parts descending; lexicographic order.
std::vector<std::vector<int>> partitions_of(int n);

// Every abelian shape of the exact order n.
std::vector<AbelianShape> all_shapes_of_order(i64 n);

// Outcome of a bulk invariant sweep.  A shape lands in `skipped` when its
// brute-force side would exceed the work cap; violations hold human-readable
// descriptions and must be empty for the invariant to hold.
struct SweepReport {
  i64 checked = 0;
  std::vector<std::string> skipped;
  std::vector<std::string> violations;
};

// count_abelian == brute-force lattice size for every shape of order <= max_order.
SweepReport sweep_count_vs_bruteforce(i64 max_order, i64 lattice_cap);

// A prime count_abelian forces a single prime component.
SweepReport scan_prime_count_single_component(i64 max_order, i64 lattice_cap);

// Every non-cyclic abelian p-group within range satisfies
// count >= min_noncyclic_pgroup_count(p, a); equality exactly on
// Z_{p^{a-1}} x Z_p, except (p,a) = (2,3) where the minimum 6 is attained
// only by the quaternion group, so every abelian shape is strictly above it.
SweepReport scan_min_bound_soundness(i64 max_order, i64 lattice_cap);

}  // namespace subcount
