#include "subcount/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "subcount/abelian.hpp"
#include "subcount/catalog.hpp"
#include "subcount/errors.hpp"
#include "subcount/lattice.hpp"
#include "subcount/numbers.hpp"
#include "subcount/similarity.hpp"

namespace subcount {

namespace {

// Backtracking over partial multiplication tables of order n whose maximal
// element order is exactly d.  Canonical form: the identity is 0, element 1
// has order d with 1^i labelled i, and any label beyond the power block
// enters play in increasing order (as a row/column address or a cell value).
// The canonical constraint only restricts which value a *branch* cell may
// take; forced cells write consequences of associativity, which hold under
// every labelling and therefore need no freshness test.
class TableSearch {
 public:
  TableSearch(int n, int d) : n_(n), d_(d) {}

  std::vector<std::vector<std::uint16_t>> run() {
    t_.assign(n_ * n_, -1);
    row_used_.assign(n_, 0u);
    col_used_.assign(n_, 0u);
    row_left_.assign(n_, n_);
    out_.clear();
    bound_ = d_;

    std::vector<int> undo;
    std::vector<int> queue;
    bool ok = true;
    for (int c = 0; c < n_ && ok; ++c) ok = set_cell(0, c, c, undo, queue);
    for (int r = 1; r < n_ && ok; ++r) ok = set_cell(r, 0, r, undo, queue);
    for (int i = 1; i < d_ && ok; ++i)
      for (int j = 1; j < d_ && ok; ++j)
        ok = set_cell(i, j, (i + j) % d_, undo, queue);
    if (ok) ok = propagate(undo, queue);
    if (ok) search(0);
    return std::move(out_);
  }

 private:
  int n_ = 0, d_ = 0;
  int bound_ = 0;  // labels 0..bound_-1 are in play
  std::vector<int> t_;
  std::vector<unsigned> row_used_, col_used_;
  std::vector<int> row_left_;
  std::vector<std::vector<std::uint16_t>> out_;

  int get(int r, int c) const { return t_[r * n_ + c]; }

  // Left powers of r need only row r, so the order of a freshly completed
  // row's element is available; it must divide n and stay within d.
  bool row_order_ok(int r) const {
    int x = r, ord = 1;
    while (x != 0) {
      x = get(r, x);
      ++ord;
      if (ord > d_) return false;
    }
    return n_ % ord == 0;
  }

  bool set_cell(int r, int c, int v, std::vector<int>& undo,
                std::vector<int>& queue) {
    int cur = get(r, c);
    if (cur != -1) return cur == v;
    if ((row_used_[r] >> v & 1u) || (col_used_[c] >> v & 1u)) return false;
    t_[r * n_ + c] = v;
    row_used_[r] |= 1u << v;
    col_used_[c] |= 1u << v;
    // The identity row and column carry every label under any relabelling,
    // so only interior cells put labels in play.
    if (r >= 1 && c >= 1) bound_ = std::max({bound_, r + 1, c + 1, v + 1});
    undo.push_back(r * n_ + c);
    queue.push_back(r * n_ + c);
    if (--row_left_[r] == 0 && r >= 1 && !row_order_ok(r)) return false;
    return true;
  }

  // Associativity closure: for the new cell in each of its four roles inside
  // a triple (x, y, z), compare (xy)z with x(yz) when both are determined and
  // force the open side when exactly one is.  Every triple is checked by the
  // time its last participating cell is written, so a completed table is
  // fully associative.
  bool propagate(std::vector<int>& undo, std::vector<int>& queue) {
    for (size_t head = 0; head < queue.size(); ++head) {
      const int a = queue[head] / n_, b = queue[head] % n_;
      const int v = get(a, b);
      for (int z = 1; z < n_; ++z) {  // (a, b) as (x, y)
        const int w = get(b, z);
        if (w == -1) continue;
        const int lhs = get(v, z), rhs = get(a, w);
        if (lhs != -1 && rhs != -1) {
          if (lhs != rhs) return false;
        } else if (lhs != -1) {
          if (!set_cell(a, w, lhs, undo, queue)) return false;
        } else if (rhs != -1) {
          if (!set_cell(v, z, rhs, undo, queue)) return false;
        }
      }
      for (int x = 1; x < n_; ++x) {  // (a, b) as (y, z)
        const int w = get(x, a);
        if (w == -1) continue;
        const int lhs = get(w, b), rhs = get(x, v);
        if (lhs != -1 && rhs != -1) {
          if (lhs != rhs) return false;
        } else if (lhs != -1) {
          if (!set_cell(x, v, lhs, undo, queue)) return false;
        } else if (rhs != -1) {
          if (!set_cell(w, b, rhs, undo, queue)) return false;
        }
      }
      for (int x = 1; x < n_; ++x) {  // (a, b) as (xy, z): find xy == a
        for (int y = 1; y < n_; ++y) {
          if (get(x, y) != a) continue;
          const int w = get(y, b);
          if (w != -1 && !set_cell(x, w, v, undo, queue)) return false;
        }
      }
      for (int y = 1; y < n_; ++y) {  // (a, b) as (x, yz): find yz == b
        for (int z = 1; z < n_; ++z) {
          if (get(y, z) != b) continue;
          const int w = get(a, y);
          if (w != -1 && !set_cell(w, z, v, undo, queue)) return false;
        }
      }
    }
    return true;
  }

  void undo_cells(const std::vector<int>& undo) {
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
      const int r = *it / n_, c = *it % n_, v = t_[*it];
      t_[*it] = -1;
      row_used_[r] &= ~(1u << v);
      col_used_[c] &= ~(1u << v);
      ++row_left_[r];
    }
  }

  void search(int pos) {
    const int interior = (n_ - 1) * (n_ - 1);
    while (pos < interior &&
           get(1 + pos / (n_ - 1), 1 + pos % (n_ - 1)) != -1)
      ++pos;
    if (pos == interior) {
      out_.emplace_back(t_.begin(), t_.end());
      return;
    }
    const int r = 1 + pos / (n_ - 1), c = 1 + pos % (n_ - 1);
    const int saved_bound = bound_;
    // Reaching the cell binds its row and column labels; one fresh value
    // (the new bound itself) is admissible beyond the labels in play.
    const int hi = std::min(std::max({saved_bound, r + 1, c + 1}), n_ - 1);
    for (int v = 0; v <= hi; ++v) {
      if ((row_used_[r] >> v & 1u) || (col_used_[c] >> v & 1u)) continue;
      std::vector<int> undo;
      std::vector<int> queue;
      if (set_cell(r, c, v, undo, queue) && propagate(undo, queue))
        search(pos + 1);
      undo_cells(undo);
      bound_ = saved_bound;
    }
  }
};

std::vector<int> subgroup_closure(const Group& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (size_t head = 0; head < elems.size(); ++head)
    for (int s : gens) {
      const int y = g.mul(elems[head], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  return elems;
}

std::vector<int> order_histogram(const Group& g) {
  std::vector<int> h(g.order() + 1, 0);
  for (int x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

// Extend the partial generator-image map to a full isomorphism candidate:
// close {0} under right multiplication by the generators on both sides,
// failing on any inconsistency or collision.
bool image_closure(const Group& g, const Group& h, const std::vector<int>& gens,
                   const std::vector<int>& images, std::vector<int>& phi) {
  const int n = g.order();
  phi.assign(n, -1);
  std::vector<char> hit(n, 0);
  phi[0] = 0;
  hit[0] = 1;
  std::vector<int> work{0};
  for (size_t head = 0; head < work.size(); ++head) {
    const int x = work[head];
    for (size_t j = 0; j < images.size(); ++j) {
      const int y = g.mul(x, gens[j]);
      const int fy = h.mul(phi[x], images[j]);
      if (phi[y] == -1) {
        if (hit[fy]) return false;
        phi[y] = fy;
        hit[fy] = 1;
        work.push_back(y);
      } else if (phi[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

bool extend_isomorphism(const Group& g, const Group& h,
                        const std::vector<int>& gens, std::vector<int>& images,
                        size_t level) {
  const int n = g.order();
  if (level == gens.size()) {
    std::vector<int> phi;
    if (!image_closure(g, h, gens, images, phi)) return false;
    for (int x = 0; x < n; ++x)
      if (phi[x] == -1) return false;  // closure must reach everything
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (phi[g.mul(x, y)] != h.mul(phi[x], phi[y])) return false;
    return true;
  }
  const int want = g.element_order(gens[level]);
  for (int cand = 1; cand < n; ++cand) {
    if (h.element_order(cand) != want) continue;
    images.push_back(cand);
    std::vector<int> phi;
    // Prune early: the partial map must already be consistent.
    if (image_closure(g, h, gens, images, phi) &&
        extend_isomorphism(g, h, gens, images, level + 1))
      return true;
    images.pop_back();
  }
  return false;
}

// Abelian invariant partitions recovered from solution counts of x^{p^j} = e:
// the count is p^{sum_i min(part_i, j)}, so consecutive logarithm differences
// give the number of parts of size >= j.
AbelianShape abelian_shape_of(const Group& g) {
  AbelianShape shape;
  for (const auto& [p, a] : g.factored_order().factors) {
    std::vector<int> s(a + 1, 0);
    for (int j = 1; j <= a; ++j) {
      i64 cnt = 0;
      const i64 pj = pow_ll(p, j);
      for (int x = 0; x < g.order(); ++x)
        if (pj % g.element_order(x) == 0) ++cnt;
      int e = 0;
      while (cnt > 1) cnt /= p, ++e;
      s[j] = e;
    }
    std::vector<int> parts;
    for (int j = 1; j <= a; ++j) {
      const int ge_j = s[j] - s[j - 1];  // parts of size >= j
      while (static_cast<int>(parts.size()) < ge_j) parts.push_back(0);
      for (int i = 0; i < ge_j; ++i) ++parts[i];
    }
    std::sort(parts.rbegin(), parts.rend());
    shape.components[p] = parts;
  }
  return shape;
}

SimilarityClass class_of_shape(const AbelianShape& shape) {
  SimilarityClass cls;
  for (const auto& [p, parts] : shape.components) {
    if (parts.size() == 1)
      cls.free_cyclic.push_back(parts[0]);
    else
      cls.pinned.emplace_back(p, parts);
  }
  cls.canonicalize();
  return cls;
}

// Does some classification row of the catalog realize this group?  Free
// factors must be instantiated at the prime forced by the order.
bool covered_by_catalog(const Group& g, i64 k) {
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.test_only || e.k != k) continue;
    if (e.free_factors.empty()) {
      const Group pinned = build_pinned(e);
      if (pinned.order() == g.order() && isomorphic(g, pinned)) return true;
      continue;
    }
    const i64 pinned_order = build_pinned(e).order();
    if (g.order() % pinned_order != 0) continue;
    for (i64 p : primes_up_to(g.order())) {
      if (pinned_order % p == 0) continue;
      if (pinned_order * pow_ll(p, e.free_factors[0]) != g.order()) continue;
      if (isomorphic(g, build_entry(e, {p}))) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Group> enumerate_groups_of_order(int n) {
  if (n < 1) throw arithmetic_error("group order must be positive");
  if (n > 12)
    throw size_error("table enumeration is limited to order 12, got " +
                     std::to_string(n));
  std::vector<Group> found;
  if (n == 1) {
    found.emplace_back(1, std::vector<std::uint16_t>{0}, "G1_1");
    return found;
  }
  for (i64 d : divisors(n)) {
    if (d < 2) continue;  // a nontrivial group has a nontrivial element order
    TableSearch ts(n, static_cast<int>(d));
    for (const auto& table : ts.run()) {
      Group g(n, table,
              "G" + std::to_string(n) + "_" + std::to_string(found.size() + 1));
      bool fresh = true;
      for (const Group& rep : found)
        if (isomorphic(g, rep)) {
          fresh = false;
          break;
        }
      if (fresh) found.push_back(std::move(g));
    }
  }
  return found;
}

bool isomorphic(const Group& g, const Group& h) {
  if (g.order() != h.order()) return false;
  if (g.order() > 64)
    throw size_error("isomorphism search is limited to order 64");
  if (g.is_abelian() != h.is_abelian()) return false;
  if (order_histogram(g) != order_histogram(h)) return false;
  if (g.order() == 1) return true;

  std::vector<int> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  int covered = 1;
  while (covered < g.order()) {
    int next = -1;
    for (int x = 1; x < g.order(); ++x)
      if (!in[x]) {
        next = x;
        break;
      }
    gens.push_back(next);
    covered = 0;
    std::fill(in.begin(), in.end(), 0);
    for (int y : subgroup_closure(g, gens)) {
      in[y] = 1;
      ++covered;
    }
  }
  std::vector<int> images;
  return extend_isomorphism(g, h, gens, images, 0);
}

std::string CompletenessReport::render() const {
  std::ostringstream os;
  os << "small-order completeness:";
  for (const auto& [n, cnt] : groups_per_order) os << " " << n << ":" << cnt;
  os << " gaps=" << gaps.size() << (gaps.empty() ? " PASS" : " FAIL");
  for (const std::string& s : gaps) os << "\n  gap: " << s;
  return os.str();
}

CompletenessReport completeness_check_small_orders() {
  CompletenessReport rep;
  for (int n = 1; n <= 12; ++n) {
    const std::vector<Group> groups = enumerate_groups_of_order(n);
    rep.groups_per_order[n] = static_cast<int>(groups.size());
    for (const Group& g : groups) {
      const i64 k = count_subgroups(g);
      if (k > 19) continue;
      if (g.is_abelian()) {
        const SimilarityClass cls = class_of_shape(abelian_shape_of(g));
        const std::vector<SimilarityClass> classes = enumerate_abelian_classes(k);
        if (std::find(classes.begin(), classes.end(), cls) == classes.end())
          rep.gaps.push_back("order " + std::to_string(n) + " abelian " +
                             render_class(cls) + " with " + std::to_string(k) +
                             " subgroups missing from the class enumeration");
      } else if (!covered_by_catalog(g, k)) {
        rep.gaps.push_back("order " + std::to_string(n) + " non-abelian " +
                           g.label() + " with " + std::to_string(k) +
                           " subgroups missing from the catalog");
      }
    }
  }
  return rep;
}

}  // namespace subcount
