#pragma once
// Independent desk-scale oracle: enumerate every group of a small order up
// to isomorphism by backtracking over multiplication tables, decide
// isomorphism by generator-image search, and cross-check that everything it
// finds is covered by the abelian class enumeration or the catalog.

#include <map>
#include <string>
#include <vector>

#include "subcount/group.hpp"

namespace subcount {

// All groups of order n up to isomorphism (n <= 12; larger throws
// size_error). Search: fix the identity, fix a maximal-order element and its
// power block, introduce remaining labels in first-use order, propagate
// associativity consequences, and deduplicate survivors by isomorphic().
std::vector<Group> enumerate_groups_of_order(int n);

// Generator-image backtracking guided by element-order profiles. Orders must
// match and be at most 64 (size_error above).
bool isomorphic(const Group& g, const Group& h);

struct CompletenessReport {
  std::map<int, int> groups_per_order;  // order -> isomorphism classes found
  std::vector<std::string> gaps;        // uncovered (order, count) classes
  bool pass() const { return gaps.empty(); }
  std::string render() const;
};

// For every group of order <= 12 with at most 19 subgroups, confirm its
// similarity class appears in the abelian enumeration (abelian case) or the
// catalog (non-abelian case). Gaps are report content, not exceptions.
CompletenessReport completeness_check_small_orders();

}  // namespace subcount
