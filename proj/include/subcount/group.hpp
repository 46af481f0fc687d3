#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subcount/numbers.hpp"

namespace subcount {

// Constructors refuse to build groups larger than this unless the caller
// raises the cap explicitly.
inline constexpr int kDefaultOrderCap = 2048;

// Full-table associativity is verified exhaustively up to this order; larger
// tables are verified with Light's generator test, which is equivalent but
// needs a generating set.
inline constexpr int kExhaustiveAssocLimit = 1024;

// A finite group given by an explicit multiplication table on {0..order-1}.
// Element 0 is always the identity.
class Group {
 public:
  enum class Assoc {
    exhaustive,  // check every triple (or Light's test above the limit)
    trusted,     // table is associative by construction
  };

  Group(int order, std::vector<std::uint16_t> table, std::string label,
        Assoc policy = Assoc::exhaustive, std::vector<int> generators = {});

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::uint16_t* row(int a) const { return table_.data() + static_cast<std::size_t>(a) * n_; }
  const std::string& label() const { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }
  const std::vector<int>& generators() const { return gens_; }

  int element_order(int x) const;
  bool is_abelian() const;
  bool is_associative() const;  // exhaustive O(n^3) scan
  bool light_associative(const std::vector<int>& gens) const;
  FactoredOrder factored_order() const { return FactoredOrder::of(n_); }

 private:
  int n_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inv_;
  std::string label_;
  std::vector<int> gens_;

  void validate(Assoc policy);
};

Group make_cyclic(int n, int cap = kDefaultOrderCap);
Group direct_product(const Group& g, const Group& h, int cap = kDefaultOrderCap);

// <x, y | x^n = e, y^m = x^t, y x y^-1 = x^k> realized on pairs (i, j) with
// index i*m + j.  Requires gcd(k, n) = 1, k^m = 1 (mod n), t(k-1) = 0 (mod n).
Group metacyclic(int n, int m, int k, int t, int cap = kDefaultOrderCap);

// Closure of permutation generators on {0..degree-1}.
Group from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                        int cap = kDefaultOrderCap);

// Closure of invertible dim x dim matrices over Z/p (row-major entries).
Group from_matrices(i64 p, int dim, const std::vector<std::vector<i64>>& generators,
                    int cap = kDefaultOrderCap);

// Named families used by the expression grammar and the catalog.
Group dihedral(int order, int cap = kDefaultOrderCap);  // order 2n, n >= 2
Group dicyclic(int order, int cap = kDefaultOrderCap);  // order 4m, m >= 2
Group modular_maximal_cyclic(i64 p, int a, int cap = kDefaultOrderCap);  // order p^a, a >= 3
Group heisenberg(i64 p, int cap = kDefaultOrderCap);    // order p^3, exponent p for odd p
Group alternating(int degree, int cap = kDefaultOrderCap);  // degree 4 or 5
Group symmetric3(int cap = kDefaultOrderCap);
Group special_linear_2_3(int cap = kDefaultOrderCap);

}  // namespace subcount
