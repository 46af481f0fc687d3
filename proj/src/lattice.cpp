#include "subcount/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "subcount/errors.hpp"
#include "subcount/numbers.hpp"

namespace subcount {

int SubgroupSet::size() const {
  int c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

std::vector<int> SubgroupSet::elements() const {
  std::vector<int> out;
  for (int x = 0; x < parent_order_; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

bool SubgroupSet::contains_all(const SubgroupSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (other.bits_[i] & ~bits_[i]) return false;
  return true;
}

std::size_t SubgroupSet::Hash::operator()(const SubgroupSet& s) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto w : s.bits_) {
    h ^= w;
    h *= 0x100000001b3ull;
  }
  return h;
}

SubgroupSet generated_subgroup(const Group& g, const std::vector<int>& seed) {
  SubgroupSet s(g.order());
  s.insert(0);
  std::vector<int> elems{0};
  std::vector<int> frontier;
  for (int x : seed)
    if (!s.contains(x)) {
      s.insert(x);
      elems.push_back(x);
      frontier.push_back(x);
    }
  // Closure: multiply every new element against everything known, both ways.
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    std::size_t count = elems.size();
    for (std::size_t i = 0; i < count; ++i) {
      int a = elems[i];
      for (int v : {g.mul(a, x), g.mul(x, a)}) {
        if (!s.contains(v)) {
          s.insert(v);
          elems.push_back(v);
          frontier.push_back(v);
        }
      }
    }
  }
  return s;
}

namespace {

// Join of two known subgroups, with cheap shortcuts: word-wise containment
// first, then an order argument — the result's order must be a divisor of
// |G| that is a multiple of lcm(|A|,|B|) and at least |A||B|/|A∩B|; if that
// forces the whole group the closure is skipped.  Otherwise run an
// incremental closure seeded only with B's new elements (A is closed).
SubgroupSet join(const Group& g, const SubgroupSet& a, const SubgroupSet& b,
                 const std::vector<i64>& divisors_of_n, bool abelian) {
  if (a.contains_all(b)) return a;
  if (b.contains_all(a)) return b;
  if (abelian) {
    // In an abelian group the set product AB is itself a subgroup, so the
    // join needs no closure loop at all.
    SubgroupSet s = a;
    std::vector<int> be = b.elements();
    for (int x : a.elements())
      for (int y : be) s.insert(g.mul(x, y));
    return s;
  }
  std::vector<int> elems = a.elements();
  std::vector<int> added;
  for (int x : b.elements())
    if (!a.contains(x)) added.push_back(x);
  i64 sa = static_cast<i64>(elems.size()), sb = b.size();
  i64 inter = sb - static_cast<i64>(added.size());
  i64 lower = sa * sb / (inter > 0 ? inter : 1);
  i64 l = std::lcm(sa, sb);
  i64 target = 0;
  for (i64 d : divisors_of_n)
    if (d % l == 0 && d >= lower) {
      target = d;
      break;
    }
  if (target == g.order()) {
    SubgroupSet whole(g.order());
    for (int x = 0; x < g.order(); ++x) whole.insert(x);
    return whole;
  }
  SubgroupSet s = a;
  std::vector<int> frontier;
  for (int x : added) {
    s.insert(x);
    elems.push_back(x);
    frontier.push_back(x);
  }
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    std::size_t count = elems.size();
    for (std::size_t i = 0; i < count; ++i) {
      int e = elems[i];
      for (int v : {g.mul(e, x), g.mul(x, e)}) {
        if (!s.contains(v)) {
          s.insert(v);
          elems.push_back(v);
          frontier.push_back(v);
        }
      }
    }
  }
  return s;
}

}  // namespace

std::optional<std::vector<SubgroupSet>> all_subgroups_capped(const Group& g,
                                                             i64 max_subgroups) {
  int n = g.order();
  std::vector<i64> divs = divisors(n);
  std::unordered_set<SubgroupSet, SubgroupSet::Hash> seen;
  std::vector<SubgroupSet> subs;

  auto add = [&](SubgroupSet s) {
    if (seen.insert(s).second) subs.push_back(std::move(s));
  };

  // Every cyclic subgroup, by walking powers of each element.
  {
    SubgroupSet trivial(n);
    trivial.insert(0);
    add(std::move(trivial));
    for (int x = 1; x < n; ++x) {
      SubgroupSet s(n);
      s.insert(0);
      int v = x;
      while (v != 0) {
        s.insert(v);
        v = g.mul(v, x);
      }
      add(std::move(s));
    }
  }

  // Join closure to a fixpoint.  Joining every known subgroup against the
  // cyclic atoms reaches the same fixpoint as full pairwise joins (any join
  // A ∨ B is a chain of atom joins over B's cyclic subgroups) at a fraction
  // of the cost.
  bool abelian = g.is_abelian();
  std::size_t num_cyclic = subs.size();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    SubgroupSet current = subs[i];  // copy: subs may reallocate below
    for (std::size_t j = 0; j < num_cyclic; ++j) {
      SubgroupSet joined = join(g, current, subs[j], divs, abelian);
      if (seen.insert(joined).second) subs.push_back(std::move(joined));
    }
    if (max_subgroups > 0 && static_cast<i64>(subs.size()) > max_subgroups)
      return std::nullopt;
  }
  return subs;
}

std::vector<SubgroupSet> all_subgroups(const Group& g) {
  return *all_subgroups_capped(g, 0);
}

i64 count_subgroups(const Group& g) {
  return static_cast<i64>(all_subgroups(g).size());
}

LatticeSummary summarize(const Group& g, const std::vector<SubgroupSet>& subs) {
  LatticeSummary out;
  out.total = static_cast<i64>(subs.size());
  for (const auto& s : subs) ++out.by_order[s.size()];
  for (auto [p, a] : g.factored_order().factors)
    out.sylow_counts[p] = out.by_order.at(pow_ll(p, a));
  return out;
}

LatticeSummary summarize(const Group& g) { return summarize(g, all_subgroups(g)); }

bool is_normal(const Group& g, const SubgroupSet& h) {
  std::vector<int> members = h.elements();
  for (int x = 0; x < g.order(); ++x) {
    int xi = g.inv(x);
    for (int m : members)
      if (!h.contains(g.mul(g.mul(x, m), xi))) return false;
  }
  return true;
}

bool is_nilpotent(const Group& g) {
  LatticeSummary s = summarize(g);
  for (auto [p, np] : s.sylow_counts)
    if (np != 1) return false;
  return true;
}

SubgroupSet center(const Group& g) {
  SubgroupSet z(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) z.insert(x);
  }
  return z;
}

SubgroupSet product_set(const Group& g, const SubgroupSet& a, const SubgroupSet& b) {
  SubgroupSet out(g.order());
  for (int x : a.elements())
    for (int y : b.elements()) out.insert(g.mul(x, y));
  return out;
}

bool is_coprime_decomposable(const Group& g) {
  auto subs = all_subgroups(g);
  std::vector<const SubgroupSet*> normals;
  for (const auto& s : subs)
    if (is_normal(g, s)) normals.push_back(&s);
  i64 n = g.order();
  for (std::size_t i = 0; i < normals.size(); ++i) {
    i64 a = normals[i]->size();
    if (a <= 1 || a >= n) continue;
    for (std::size_t j = 0; j < normals.size(); ++j) {
      i64 b = normals[j]->size();
      if (a * b != n || std::gcd(a, b) != 1) continue;
      // Coprime orders force trivial intersection; N*M = G by counting.
      return true;
    }
  }
  return false;
}

std::pair<SubgroupSet, SubgroupSet> split_coprime_subgroup(const Group& g,
                                                           const Group& h,
                                                           const SubgroupSet& k) {
  if (std::gcd(i64(g.order()), i64(h.order())) != 1)
    throw arithmetic_error("split_coprime_subgroup: factor orders share a prime");
  SubgroupSet kg(g.order()), kh(h.order());
  int hn = h.order();
  for (int x = 0; x < g.order() * h.order(); ++x)
    if (k.contains(x)) {
      kg.insert(x / hn);
      kh.insert(x % hn);
    }
  return {kg, kh};
}

}  // namespace subcount
