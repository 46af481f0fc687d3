#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "subcount/group.hpp"

namespace subcount {

// A subgroup of a fixed parent group, stored as a membership bit-vector.
// The bit-vector doubles as the canonical identity of the subgroup, so two
// SubgroupSets over the same parent compare equal iff they are the same
// subgroup.
class SubgroupSet {
 public:
  SubgroupSet() : parent_order_(0) {}
  explicit SubgroupSet(int parent_order)
      : parent_order_(parent_order), bits_((parent_order + 63) / 64, 0) {}

  int parent_order() const { return parent_order_; }
  bool contains(int x) const { return (bits_[x >> 6] >> (x & 63)) & 1; }
  void insert(int x) { bits_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  bool contains_all(const SubgroupSet& other) const;
  int size() const;
  std::vector<int> elements() const;

  bool operator==(const SubgroupSet& o) const { return bits_ == o.bits_; }
  bool operator<(const SubgroupSet& o) const { return bits_ < o.bits_; }

  struct Hash {
    std::size_t operator()(const SubgroupSet& s) const;
  };

 private:
  int parent_order_;
  std::vector<std::uint64_t> bits_;
};

struct LatticeSummary {
  i64 total = 0;
  std::map<i64, i64> by_order;     // subgroup order -> how many
  std::map<i64, i64> sylow_counts; // prime -> n_p
};

// Smallest subgroup of G containing every seed element.
SubgroupSet generated_subgroup(const Group& g, const std::vector<int>& seed);

// The complete duplicate-free subgroup list: all cyclic subgroups, then
// closure under pairwise join until a fixpoint.
std::vector<SubgroupSet> all_subgroups(const Group& g);

// Same enumeration with a work budget: empty optional once more than
// max_subgroups (> 0) distinct subgroups appear.
std::optional<std::vector<SubgroupSet>> all_subgroups_capped(const Group& g,
                                                             i64 max_subgroups);

i64 count_subgroups(const Group& g);
LatticeSummary summarize(const Group& g);
LatticeSummary summarize(const Group& g, const std::vector<SubgroupSet>& subs);

bool is_normal(const Group& g, const SubgroupSet& h);
bool is_nilpotent(const Group& g);

// True iff G = N x M internally for normal N, M of coprime orders > 1.
bool is_coprime_decomposable(const Group& g);

// Membership sets of the center and of the set product AB.
SubgroupSet center(const Group& g);
SubgroupSet product_set(const Group& g, const SubgroupSet& a, const SubgroupSet& b);

// For coprime G, H and a subgroup K of direct_product(G, H): project K to
// each factor.  K is guaranteed (and verified by callers in tests) to equal
// the product of its projections.
std::pair<SubgroupSet, SubgroupSet> split_coprime_subgroup(const Group& g,
                                                           const Group& h,
                                                           const SubgroupSet& k);

}  // namespace subcount
