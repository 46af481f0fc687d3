#include "subcount/similarity.hpp"

#include <algorithm>
#include <set>

#include "subcount/errors.hpp"

namespace subcount {

void SimilarityClass::canonicalize() {
  std::sort(free_cyclic.begin(), free_cyclic.end(), std::greater<int>());
  std::sort(pinned.begin(), pinned.end());
}

std::vector<std::pair<i64, std::vector<int>>> pinned_components_with_count(i64 f) {
  if (f < 2) throw arithmetic_error("pinned_components_with_count: need f >= 2");
  std::vector<std::pair<i64, std::vector<int>>> out;
  for (i64 p : primes_up_to(f - 3)) {
    for (int a = 2; min_noncyclic_pgroup_count(p, a) <= f; ++a) {
      for (const auto& parts : partitions_of(a)) {
        if (parts.size() < 2) continue;  // cyclic
        // The socle alone contributes count_elementary(p, #parts) subgroups.
        if (count_elementary(p, static_cast<int>(parts.size())) > f) continue;
        if (count_p_component(p, parts) == f) out.emplace_back(p, parts);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Non-increasing multisets of factors >= 2 with the given product.
void factor_multisets(i64 k, i64 max_factor, std::vector<i64>& cur,
                      std::vector<std::vector<i64>>& out) {
  if (k == 1) {
    out.push_back(cur);
    return;
  }
  for (i64 f = std::min(k, max_factor); f >= 2; --f)
    if (k % f == 0) {
      cur.push_back(f);
      factor_multisets(k / f, f, cur, out);
      cur.pop_back();
    }
}

void decorate(const std::vector<i64>& factors, std::size_t idx,
              SimilarityClass& cur, std::set<SimilarityClass>& out) {
  if (idx == factors.size()) {
    SimilarityClass done = cur;
    done.canonicalize();
    out.insert(std::move(done));
    return;
  }
  i64 f = factors[idx];
  // free cyclic component of exponent f-1
  cur.free_cyclic.push_back(static_cast<int>(f - 1));
  decorate(factors, idx + 1, cur, out);
  cur.free_cyclic.pop_back();
  // or any pinned component with count f, at a prime not already pinned
  for (const auto& comp : pinned_components_with_count(f)) {
    bool prime_taken = false;
    for (const auto& [p, parts] : cur.pinned) prime_taken |= p == comp.first;
    if (prime_taken) continue;
    cur.pinned.push_back(comp);
    decorate(factors, idx + 1, cur, out);
    cur.pinned.pop_back();
  }
}

}  // namespace

std::vector<SimilarityClass> enumerate_abelian_classes(i64 k) {
  if (k < 1) throw arithmetic_error("enumerate_abelian_classes: need k >= 1");
  std::set<SimilarityClass> out;
  if (k == 1) return {SimilarityClass{}};
  std::vector<std::vector<i64>> multisets;
  std::vector<i64> cur;
  factor_multisets(k, k, cur, multisets);
  for (const auto& factors : multisets) {
    SimilarityClass cls;
    decorate(factors, 0, cls, out);
  }
  return {out.begin(), out.end()};
}

i64 abelian_class_count(i64 k) {
  return static_cast<i64>(enumerate_abelian_classes(k).size());
}

namespace {

std::string free_symbol(std::size_t i) {
  static const char* names[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  if (i < sizeof(names) / sizeof(names[0])) return names[i];
  return "p" + std::to_string(i);
}

}  // namespace

std::string render_class(const SimilarityClass& c) {
  if (c.free_cyclic.empty() && c.pinned.empty()) return "{e}";
  std::vector<std::string> blocks;
  for (const auto& [p, parts] : c.pinned)
    for (int e : parts)
      blocks.push_back("Z_" + std::to_string(pow_ll(p, e)));
  if (!c.free_cyclic.empty()) {
    std::string sub;
    for (std::size_t i = 0; i < c.free_cyclic.size(); ++i) {
      if (i) sub += " ";
      sub += free_symbol(i);
      if (c.free_cyclic[i] > 1) sub += "^" + std::to_string(c.free_cyclic[i]);
    }
    blocks.push_back(sub.size() == 1 ? "Z_" + sub : "Z_{" + sub + "}");
  }
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += " x ";
    out += blocks[i];
  }
  return out;
}

AbelianShape instantiate_class(const SimilarityClass& c) {
  AbelianShape shape;
  for (const auto& [p, parts] : c.pinned) {
    if (shape.components.count(p))
      throw arithmetic_error("instantiate_class: repeated pinned prime");
    shape.components[p] = parts;
  }
  i64 next = 2;
  for (int e : c.free_cyclic) {
    while (!is_prime(next) || shape.components.count(next)) ++next;
    shape.components[next] = {e};
    ++next;
  }
  shape.validate();
  return shape;
}

}  // namespace subcount
