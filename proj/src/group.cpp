#include "subcount/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "subcount/errors.hpp"

namespace subcount {

namespace {

void check_cap(i64 order, int cap, const std::string& what) {
  if (order > cap)
    throw size_error(what + ": order " + std::to_string(order) +
                     " exceeds cap " + std::to_string(cap));
  if (order > 65535)
    throw size_error(what + ": order exceeds table element range");
}

}  // namespace

Group::Group(int order, std::vector<std::uint16_t> table, std::string label,
             Assoc policy, std::vector<int> generators)
    : n_(order), table_(std::move(table)), label_(std::move(label)),
      gens_(std::move(generators)) {
  if (n_ < 1) throw presentation_error(label_ + ": order must be positive");
  if (table_.size() != static_cast<std::size_t>(n_) * n_)
    throw presentation_error(label_ + ": table size mismatch");
  validate(policy);
}

void Group::validate(Assoc policy) {
  // Identity at index 0, Latin rows and columns, two-sided inverses.
  std::vector<char> seen(n_);
  for (int a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      throw presentation_error(label_ + ": element 0 is not the identity");
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n_; ++b) {
      int v = mul(a, b);
      if (v < 0 || v >= n_ || seen[v])
        throw presentation_error(label_ + ": row " + std::to_string(a) +
                                 " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n_; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n_; ++a) {
      int v = mul(a, b);
      if (seen[v])
        throw presentation_error(label_ + ": column " + std::to_string(b) +
                                 " is not a permutation");
      seen[v] = 1;
    }
  }
  inv_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int b = 0;
    while (b < n_ && mul(a, b) != 0) ++b;
    if (b == n_ || mul(b, a) != 0)
      throw presentation_error(label_ + ": element " + std::to_string(a) +
                               " has no two-sided inverse");
    inv_[a] = static_cast<std::uint16_t>(b);
  }
  if (policy == Assoc::trusted) return;
  if (n_ <= kExhaustiveAssocLimit || gens_.empty()) {
    if (!is_associative())
      throw presentation_error(label_ + ": table is not associative");
  } else {
    if (!light_associative(gens_))
      throw presentation_error(label_ + ": table is not associative");
  }
}

int Group::element_order(int x) const {
  int ord = 1;
  int v = x;
  while (v != 0) {
    v = mul(v, x);
    ++ord;
  }
  return ord;
}

bool Group::is_abelian() const {
  for (int a = 1; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Group::is_associative() const {
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      const std::uint16_t* rab = row(mul(a, b));
      const std::uint16_t* rb = row(b);
      const std::uint16_t* ra = row(a);
      for (int c = 0; c < n_; ++c)
        if (rab[c] != ra[rb[c]]) return false;
    }
  }
  return true;
}

bool Group::light_associative(const std::vector<int>& gens) const {
  // Light's test: with S a generating set, a(gb) = (ag)b for all a, b and
  // g in S implies full associativity.  Verify S generates first.
  std::vector<char> reached(n_, 0);
  std::vector<int> frontier{0};
  reached[0] = 1;
  while (!frontier.empty()) {
    int v = frontier.back();
    frontier.pop_back();
    for (int g : gens) {
      int w = mul(v, g);
      if (!reached[w]) {
        reached[w] = 1;
        frontier.push_back(w);
      }
    }
  }
  if (std::count(reached.begin(), reached.end(), 1) != n_)
    return false;  // not a generating set
  for (int g : gens) {
    for (int a = 0; a < n_; ++a) {
      int ag = mul(a, g);
      const std::uint16_t* rag = row(ag);
      const std::uint16_t* ra = row(a);
      const std::uint16_t* rg = row(g);
      for (int b = 0; b < n_; ++b)
        if (ra[rg[b]] != rag[b]) return false;
    }
  }
  return true;
}

Group make_cyclic(int n, int cap) {
  if (n < 1) throw presentation_error("make_cyclic: order must be positive");
  check_cap(n, cap, "make_cyclic");
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>((i + j) % n);
  return Group(n, std::move(t), "Z" + std::to_string(n), Group::Assoc::trusted,
               n > 1 ? std::vector<int>{1} : std::vector<int>{});
}

Group direct_product(const Group& g, const Group& h, int cap) {
  i64 n = i64(g.order()) * h.order();
  check_cap(n, cap, "direct_product");
  int gn = g.order(), hn = h.order();
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < gn; ++a)
    for (int b = 0; b < hn; ++b) {
      int left = a * hn + b;
      std::uint16_t* out = t.data() + static_cast<std::size_t>(left) * n;
      for (int c = 0; c < gn; ++c) {
        int gac = g.mul(a, c) * hn;
        const std::uint16_t* hrow = h.row(b);
        for (int d = 0; d < hn; ++d)
          out[c * hn + d] = static_cast<std::uint16_t>(gac + hrow[d]);
      }
    }
  return Group(static_cast<int>(n), std::move(t),
               g.label() + " x " + h.label(), Group::Assoc::trusted);
}

Group metacyclic(int n, int m, int k, int t, int cap) {
  std::string lbl = "Meta(" + std::to_string(n) + "," + std::to_string(m) +
                    "," + std::to_string(k) + "," + std::to_string(t) + ")";
  if (n < 2 || m < 1)
    throw presentation_error(lbl + ": need n >= 2 and m >= 1");
  if (k < 1 || k >= n || std::gcd(i64(k), i64(n)) != 1)
    throw presentation_error(lbl + ": k must be a unit modulo n");
  if (t < 0 || t >= n)
    throw presentation_error(lbl + ": t must lie in [0, n)");
  // Powers of k modulo n, and the two consistency congruences.
  std::vector<i64> kp(m + 1);
  kp[0] = 1;
  for (int j = 1; j <= m; ++j) kp[j] = (kp[j - 1] * k) % n;
  if (kp[m] != 1 % n)
    throw presentation_error(lbl + ": k^m != 1 (mod n)");
  if ((i64(t) * (k - 1)) % n != 0)
    throw presentation_error(lbl + ": t(k-1) != 0 (mod n)");
  i64 order = i64(n) * m;
  check_cap(order, cap, lbl);
  int N = static_cast<int>(order);
  std::vector<std::uint16_t> tab(static_cast<std::size_t>(N) * N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      std::uint16_t* out = tab.data() + (static_cast<std::size_t>(i) * m + j) * N;
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < m; ++j2) {
          int js = j + j2;
          i64 ii = (i + kp[j] * i2 + i64(t) * (js / m)) % n;
          out[static_cast<std::size_t>(i2) * m + j2] =
              static_cast<std::uint16_t>(ii * m + js % m);
        }
    }
  // x = (1,0) at index m, y = (0,1) at index 1 (when m > 1).
  std::vector<int> gens{m % N};
  if (m > 1) gens.push_back(1);
  return Group(N, std::move(tab), lbl, Group::Assoc::exhaustive, gens);
}

Group from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                        int cap) {
  if (degree < 1 || degree > 64)
    throw generator_error("from_permutations: degree out of range");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw generator_error("from_permutations: generator has wrong degree");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v])
        throw generator_error("from_permutations: generator is not a bijection");
      seen[v] = 1;
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  index[id] = 0;
  elems.push_back(id);
  // product a*b maps x -> a[b[x]]
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(degree);
    for (int x = 0; x < degree; ++x) c[x] = a[b[x]];
    return c;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      auto w = compose(elems[head], g);
      if (index.emplace(w, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(w));
        if (static_cast<i64>(elems.size()) > cap)
          throw size_error("from_permutations: closure exceeds cap " +
                           std::to_string(cap));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<std::uint16_t> tab(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      tab[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(index.at(compose(elems[a], elems[b])));
  return Group(n, std::move(tab), "Perm<" + std::to_string(degree) + ">",
               Group::Assoc::trusted);
}

namespace {

// Determinant over Z/p by Gaussian elimination; p must be prime.
i64 det_mod_p(std::vector<i64> m, int dim, i64 p) {
  i64 det = 1;
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int r = col; r < dim; ++r)
      if (m[r * dim + col] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < dim; ++c) std::swap(m[pivot * dim + c], m[col * dim + c]);
      det = (p - det) % p;
    }
    i64 pv = m[col * dim + col] % p;
    det = det * pv % p;
    // inverse of pivot via Fermat
    i64 inv = 1, base = pv % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int r = col + 1; r < dim; ++r) {
      i64 f = m[r * dim + col] % p * inv % p;
      if (!f) continue;
      for (int c = col; c < dim; ++c)
        m[r * dim + c] = ((m[r * dim + c] - f * m[col * dim + c]) % p + p) % p;
    }
  }
  return det % p;
}

}  // namespace

Group from_matrices(i64 p, int dim, const std::vector<std::vector<i64>>& generators,
                    int cap) {
  if (!is_prime(p)) throw generator_error("from_matrices: modulus must be prime");
  if (dim < 1 || dim > 6) throw generator_error("from_matrices: dim out of range");
  std::vector<std::vector<i64>> gens;
  for (auto g : generators) {
    if (static_cast<int>(g.size()) != dim * dim)
      throw generator_error("from_matrices: generator has wrong shape");
    for (auto& v : g) v = ((v % p) + p) % p;
    if (det_mod_p(g, dim, p) == 0)
      throw generator_error("from_matrices: generator is singular mod " +
                            std::to_string(p));
    gens.push_back(std::move(g));
  }
  std::vector<i64> id(dim * dim, 0);
  for (int i = 0; i < dim; ++i) id[i * dim + i] = 1;
  std::map<std::vector<i64>, int> index;
  std::vector<std::vector<i64>> elems;
  index[id] = 0;
  elems.push_back(id);
  auto matmul = [&](const std::vector<i64>& a, const std::vector<i64>& b) {
    std::vector<i64> c(dim * dim, 0);
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k < dim; ++k) {
        i64 aik = a[i * dim + k];
        if (!aik) continue;
        for (int j = 0; j < dim; ++j)
          c[i * dim + j] = (c[i * dim + j] + aik * b[k * dim + j]) % p;
      }
    return c;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      auto w = matmul(elems[head], g);
      if (index.emplace(w, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(w));
        if (static_cast<i64>(elems.size()) > cap)
          throw size_error("from_matrices: closure exceeds cap " +
                           std::to_string(cap));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<std::uint16_t> tab(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      tab[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(index.at(matmul(elems[a], elems[b])));
  return Group(n, std::move(tab), "Mat<" + std::to_string(dim) + ",F" +
               std::to_string(p) + ">", Group::Assoc::trusted);
}

Group dihedral(int order, int cap) {
  if (order < 4 || order % 2 != 0)
    throw presentation_error("dihedral: order must be even and at least 4");
  int n = order / 2;
  Group g = metacyclic(n, 2, n - 1, 0, cap);
  g.set_label("D" + std::to_string(order));
  return g;
}

Group dicyclic(int order, int cap) {
  if (order < 8 || order % 4 != 0)
    throw presentation_error("dicyclic: order must be divisible by 4 and at least 8");
  int n = order / 2;
  Group g = metacyclic(n, 2, n - 1, n / 2, cap);
  g.set_label("Dic" + std::to_string(order));
  return g;
}

Group modular_maximal_cyclic(i64 p, int a, int cap) {
  if (!is_prime(p)) throw presentation_error("modular_maximal_cyclic: p must be prime");
  if (a < 3) throw presentation_error("modular_maximal_cyclic: need a >= 3");
  i64 n = pow_ll(p, a - 1);
  i64 k = 1 + pow_ll(p, a - 2);
  if (n * p > cap)
    throw size_error("modular_maximal_cyclic: order exceeds cap");
  Group g = metacyclic(static_cast<int>(n), static_cast<int>(p),
                       static_cast<int>(k), 0, cap);
  g.set_label("M" + std::to_string(pow_ll(p, a)));
  return g;
}

Group heisenberg(i64 p, int cap) {
  if (!is_prime(p)) throw presentation_error("heisenberg: p must be prime");
  if (pow_ll(p, 3) > cap) throw size_error("heisenberg: order exceeds cap");
  std::vector<std::vector<i64>> gens = {
      {1, 1, 0, 0, 1, 0, 0, 0, 1},
      {1, 0, 0, 0, 1, 1, 0, 0, 1},
  };
  Group g = from_matrices(p, 3, gens, cap);
  g.set_label("Heis" + std::to_string(p));
  return g;
}

Group alternating(int degree, int cap) {
  if (degree == 4) {
    Group g = from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, cap);
    g.set_label("A4");
    return g;
  }
  if (degree == 5) {
    Group g = from_permutations(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, cap);
    g.set_label("A5");
    return g;
  }
  throw presentation_error("alternating: degree must be 4 or 5");
}

Group symmetric3(int cap) {
  Group g = from_permutations(3, {{1, 2, 0}, {1, 0, 2}}, cap);
  g.set_label("S3");
  return g;
}

Group special_linear_2_3(int cap) {
  Group g = from_matrices(3, 2, {{1, 1, 0, 1}, {0, 2, 1, 0}}, cap);
  g.set_label("SL(2,3)");
  return g;
}

}  // namespace subcount
