#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subcount/abelian.hpp"

namespace subcount {

// An abelian similarity class: cyclic components at arbitrary pairwise
// coprime primes carry only their exponent (the subgroup count of Z_{p^e}
// never depends on p), while non-cyclic components pin a concrete prime
// (their count does depend on it).
struct SimilarityClass {
  std::vector<int> free_cyclic;  // exponents, kept descending
  std::vector<std::pair<i64, std::vector<int>>> pinned;  // (prime, partition)

  void canonicalize();
  bool operator==(const SimilarityClass& o) const {
    return free_cyclic == o.free_cyclic && pinned == o.pinned;
  }
  bool operator<(const SimilarityClass& o) const {
    if (free_cyclic != o.free_cyclic) return free_cyclic < o.free_cyclic;
    return pinned < o.pinned;
  }
};

// All non-cyclic abelian p-group shapes with exactly f subgroups, over every
// prime.  Finite search: Z_p x Z_p already has p+3 subgroups, so p <= f-3,
// and the minimum count for order p^a caps the exponent.
std::vector<std::pair<i64, std::vector<int>>> pinned_components_with_count(i64 f);

// Every similarity class of abelian groups with exactly k subgroups: factor
// k into a multiset of integers >= 2, realize each factor as either a free
// cyclic component (exponent f-1) or a pinned component, reject repeated
// pinned primes, canonicalize, deduplicate.
std::vector<SimilarityClass> enumerate_abelian_classes(i64 k);

i64 abelian_class_count(i64 k);

// Rendering: pinned components concretely ("Z_9 x Z_3"), then the free part
// as one symbolic cyclic group ("Z_{p^4 q}") with primes p, q, r, s...
// assigned to free components in order.  The trivial class renders "{e}".
std::string render_class(const SimilarityClass& c);

// Concrete witness: substitute the smallest admissible distinct primes for
// the free components.
AbelianShape instantiate_class(const SimilarityClass& c);

}  // namespace subcount
