// Acceptance gate: every release criterion in one binary, one PASS/FAIL line
// per criterion (exact integer equality throughout).  Run with no arguments
// for the full gate, or with a criterion number to run a single one; the
// exit code is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "subcount/abelian.hpp"
#include "subcount/bounds.hpp"
#include "subcount/catalog.hpp"
#include "subcount/cli.hpp"
#include "subcount/enumerate.hpp"
#include "subcount/expr.hpp"
#include "subcount/lattice.hpp"
#include "subcount/similarity.hpp"

namespace {

using namespace subcount;

void note(std::string& why, const std::string& msg) {
  if (!why.empty()) why += "; ";
  why += msg;
}

// --- criterion 1: abelian classes k = 1..22 match the published table ----

const std::map<int, std::set<std::string>>& table1() {
  static const std::map<int, std::set<std::string>> t = {
      {1, {"{e}"}},
      {2, {"Z_p"}},
      {3, {"Z_{p^2}"}},
      {4, {"Z_{p^3}", "Z_{p q}"}},
      {5, {"Z_{p^4}", "Z_2 x Z_2"}},
      {6, {"Z_{p^5}", "Z_{p^2 q}", "Z_3 x Z_3"}},
      {7, {"Z_{p^6}"}},
      {8, {"Z_{p^7}", "Z_{p^3 q}", "Z_{p q r}", "Z_4 x Z_2", "Z_5 x Z_5"}},
      {9, {"Z_{p^8}", "Z_{p^2 q^2}"}},
      {10,
       {"Z_{p^9}", "Z_{p^4 q}", "Z_2 x Z_2 x Z_p", "Z_9 x Z_3", "Z_7 x Z_7"}},
      {11, {"Z_{p^10}", "Z_8 x Z_2"}},
      {12,
       {"Z_{p^11}", "Z_{p^5 q}", "Z_{p^3 q^2}", "Z_{p^2 q r}",
        "Z_3 x Z_3 x Z_p"}},
      {13, {"Z_{p^12}"}},
      {14,
       {"Z_{p^13}", "Z_{p^6 q}", "Z_16 x Z_2", "Z_27 x Z_3", "Z_25 x Z_5",
        "Z_11 x Z_11"}},
      {15, {"Z_{p^14}", "Z_{p^4 q^2}", "Z_4 x Z_4", "Z_2 x Z_2 x Z_{p^2}"}},
      {16,
       {"Z_{p^15}", "Z_{p^7 q}", "Z_{p^3 q^3}", "Z_{p^3 q r}", "Z_{p q r s}",
        "Z_2 x Z_2 x Z_2", "Z_4 x Z_2 x Z_p", "Z_5 x Z_5 x Z_p",
        "Z_13 x Z_13"}},
      {17, {"Z_{p^16}", "Z_32 x Z_2"}},
      {18,
       {"Z_{p^17}", "Z_{p^8 q}", "Z_{p^5 q^2}", "Z_{p^2 q^2 r}", "Z_81 x Z_3",
        "Z_3 x Z_3 x Z_{p^2}", "Z_49 x Z_7"}},
      {19, {"Z_{p^18}"}},
      {20,
       {"Z_{p^19}", "Z_{p^9 q}", "Z_{p^4 q^3}", "Z_{p^4 q r}", "Z_64 x Z_2",
        "Z_2 x Z_2 x Z_{p^3}", "Z_2 x Z_2 x Z_{p q}", "Z_9 x Z_3 x Z_p",
        "Z_125 x Z_5", "Z_7 x Z_7 x Z_p", "Z_17 x Z_17"}},
      {21, {"Z_{p^20}", "Z_{p^6 q^2}"}},
      {22,
       {"Z_{p^21}", "Z_{p^10 q}", "Z_8 x Z_4", "Z_8 x Z_2 x Z_p",
        "Z_243 x Z_3", "Z_19 x Z_19"}},
  };
  return t;
}

bool criterion1(std::string& why) {
  bool ok = true;
  const int counts[] = {1, 1, 1, 2, 2, 3, 1, 5, 2, 5, 2,
                        5, 1, 6, 4, 9, 2, 7, 1, 11, 2, 6};
  for (int k = 1; k <= 22; ++k) {
    const auto classes = enumerate_abelian_classes(k);
    if (static_cast<int>(classes.size()) != counts[k - 1]) {
      ok = false;
      note(why, "k=" + std::to_string(k) + ": " +
                    std::to_string(classes.size()) + " classes, expected " +
                    std::to_string(counts[k - 1]));
    }
    std::set<std::string> rendered;
    for (const auto& c : classes) rendered.insert(render_class(c));
    if (rendered != table1().at(k)) {
      ok = false;
      for (const auto& s : rendered)
        if (!table1().at(k).count(s))
          note(why, "k=" + std::to_string(k) + " surplus " + s);
      for (const auto& s : table1().at(k))
        if (!rendered.count(s))
          note(why, "k=" + std::to_string(k) + " missing " + s);
    }
  }
  return ok;
}

// --- criterion 2: every catalog entry verifies, with the stated row counts -

bool criterion2(std::string& why) {
  bool ok = true;
  for (const auto& r : verify_all_entries())
    if (!r.pass) {
      ok = false;
      note(why, r.name + " claimed " + std::to_string(r.claimed) +
                    " observed " + std::to_string(r.observed));
    }
  const std::map<i64, i64> expected = {{6, 2},  {8, 2},   {10, 7}, {11, 2},
                                       {12, 6}, {14, 11}, {15, 4}, {16, 13},
                                       {17, 1}, {18, 15}, {19, 4}};
  for (i64 k = 1; k <= 19; ++k) {
    const auto it = expected.find(k);
    const i64 want = it == expected.end() ? 0 : it->second;
    if (nonabelian_class_count(k) != want) {
      ok = false;
      note(why, "k=" + std::to_string(k) + " has " +
                    std::to_string(nonabelian_class_count(k)) +
                    " rows, expected " + std::to_string(want));
    }
  }
  return ok;
}

// --- criterion 3: the CLI sequence output, including the corrected term 10 -

bool criterion3(std::string& why) {
  std::ostringstream out, err;
  const int code = run_cli({"sequence"}, out, err);
  const std::string expected =
      "1, 1, 1, 2, 2, 5, 1, 7, 2, 12, 4, 11, 1, 17, 8, 22, 3, 22, 5\n";
  bool ok = true;
  if (code != 0 || out.str() != expected) {
    ok = false;
    note(why, "sequence printed \"" + out.str() + "\" with exit " +
                  std::to_string(code));
  }
  if (sequence_terms()[9] != 12) {
    ok = false;
    note(why, "term 10 is " + std::to_string(sequence_terms()[9]));
  }
  return ok;
}

// --- criterion 4: closed forms against brute force -------------------------

bool criterion4(std::string& why) {
  bool ok = true;
  for (i64 p : {2, 3, 5})
    for (int b = 0;; ++b) {
      if (pow_ll(p, b) > 1024) break;
      for (int a = 0; a <= b && pow_ll(p, a + b) <= 1024; ++a) {
        std::vector<int> parts;
        if (b > 0) parts.push_back(b);
        if (a > 0) parts.push_back(a);
        const Group g =
            parts.empty() ? make_cyclic(1) : make_abelian_p_group(p, parts);
        const i64 brute = count_subgroups(g);
        if (count_rank2(p, a, b) != brute) {
          ok = false;
          note(why, "rank2(" + std::to_string(p) + "," + std::to_string(a) +
                        "," + std::to_string(b) + ") = " +
                        std::to_string(count_rank2(p, a, b)) + ", brute " +
                        std::to_string(brute));
        }
      }
    }
  const std::pair<i64, int> cases[] = {{2, 2}, {2, 3}, {2, 4},
                                       {3, 2}, {3, 3}, {5, 2}};
  for (const auto& [p, n] : cases) {
    const Group g = make_abelian_p_group(p, std::vector<int>(n, 1));
    if (count_elementary(p, n) != count_subgroups(g)) {
      ok = false;
      note(why, "elementary(" + std::to_string(p) + "," + std::to_string(n) +
                    ") mismatch");
    }
  }
  return ok;
}

// --- criterion 5: multiplicativity and split round-trip on random pairs ----

std::vector<Group> sample_pool() {
  std::vector<Group> pool;
  for (int n = 2; n <= 128; ++n)
    if (n <= 32 || (n & (n - 1)) == 0 || n % 9 == 0 || n % 25 == 0)
      pool.push_back(make_cyclic(n));
  for (int n = 4; n <= 64; n += 2) pool.push_back(dihedral(n));
  for (int n = 8; n <= 64; n += 4) pool.push_back(dicyclic(n));
  for (i64 p : {2, 3, 5}) pool.push_back(make_abelian_p_group(p, {1, 1}));
  pool.push_back(make_abelian_p_group(2, {2, 1}));
  pool.push_back(make_abelian_p_group(2, {1, 1, 1}));
  pool.push_back(make_abelian_p_group(3, {2, 1}));
  pool.push_back(eval_group("A(4)"));
  pool.push_back(eval_group("SL(2,3)"));
  pool.push_back(eval_group("Heis(3)"));
  pool.push_back(eval_group("M(2,4)"));
  pool.push_back(eval_group("M(3,3)"));
  pool.push_back(eval_group("SD(16)"));
  pool.push_back(eval_group("Meta(7,3,2,0)"));
  pool.push_back(eval_group("Meta(5,4,2,0)"));
  return pool;
}

bool criterion5(std::string& why) {
  bool ok = true;
  const std::vector<Group> pool = sample_pool();
  std::mt19937 rng(271828);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  int done = 0;
  long attempts = 0;
  while (done < 50 && attempts++ < 200000) {
    const Group& g = pool[pick(rng)];
    const Group& h = pool[pick(rng)];
    if (std::gcd(i64(g.order()), i64(h.order())) != 1) continue;
    if (i64(g.order()) * h.order() > 512) continue;
    ++done;
    const Group p = direct_product(g, h);
    const auto subs = all_subgroups(p);
    const i64 want = count_subgroups(g) * count_subgroups(h);
    if (static_cast<i64>(subs.size()) != want) {
      ok = false;
      note(why, g.label() + " x " + h.label() + ": " +
                    std::to_string(subs.size()) + " subgroups, expected " +
                    std::to_string(want));
    }
    for (const SubgroupSet& s : subs) {
      const auto [a, b] = split_coprime_subgroup(g, h, s);
      SubgroupSet rebuilt(p.order());
      for (int x : a.elements())
        for (int y : b.elements()) rebuilt.insert(x * h.order() + y);
      if (!(rebuilt == s)) {
        ok = false;
        note(why, g.label() + " x " + h.label() + ": split did not round-trip");
        break;
      }
    }
  }
  if (done != 50) {
    ok = false;
    note(why, "only " + std::to_string(done) + " coprime pairs sampled");
  }
  return ok;
}

// --- criterion 6: structural invariant suites, zero violations -------------

bool criterion6(std::string& why) {
  bool ok = true;
  for (const InvariantReport& r :
       {check_wielandt(), check_sylow(), check_prime_index_normality(),
        check_product_closure(), check_burnside()}) {
    if (!r.pass()) {
      ok = false;
      note(why, r.name + ": " + std::to_string(r.violations.size()) +
                    " violations (" + r.violations.front() + ")");
    }
    if (r.checked == 0) {
      ok = false;
      note(why, r.name + " checked nothing");
    }
  }
  return ok;
}

// --- criterion 7: bound soundness, with the S3 equality witness ------------

bool criterion7(std::string& why) {
  bool ok = true;
  const InvariantReport r = check_bound_soundness();
  if (!r.pass() || r.checked == 0) {
    ok = false;
    note(why, r.render());
  }
  if (bound_two_prime(2, 3, 1, 1) != 6) {
    ok = false;
    note(why, "bound_two_prime(2,3,1,1) = " +
                  std::to_string(bound_two_prime(2, 3, 1, 1)));
  }
  return ok;
}

// --- criterion 8: candidate families at 19 against the published table -----

bool criterion8(std::string& why) {
  static const char* expected[] = {
      "2^a with 3 <= a <= 6",
      "3^a with 3 <= a <= 5",
      "5^a with a = 3",
      "7^a with a = 3",
      "pq with q <= 13",
      "p^2q with q <= 13",
      "p^3q with q <= 11",
      "p^4q with q <= 7",
      "p^5q with q <= 7",
      "p^6q with q <= 5",
      "p^7q with q = 3",
      "pq^2 with q <= 7",
      "pq^3 with q = 3",
      "pq^4 with q = 3",
      "p^2q^2 with p in {2, 3}, q <= 7",
      "p^2q^3 with q <= 5",
      "p^2q^4 with q = 3",
      "p^3q^2 with p = 2, q <= 7",
      "p^3q^3 with q = 3",
      "pqr with r <= 7",
      "p^2qr with r = 5",
      "pq^2r with r = 5",
      "pqr^2 with r = 5",
  };
  std::set<std::string> want(std::begin(expected), std::end(expected));
  std::set<std::string> got;
  for (const BoundReport& r : candidate_orders(19))
    got.insert(r.pattern() + " with " + r.constraint());
  bool ok = true;
  for (const auto& s : got)
    if (!want.count(s)) {
      ok = false;
      note(why, "surplus family \"" + s + "\"");
    }
  for (const auto& s : want)
    if (!got.count(s)) {
      ok = false;
      note(why, "missing family \"" + s + "\"");
    }
  return ok;
}

// --- criterion 9: independent enumeration oracle and completeness ----------

bool criterion9(std::string& why) {
  bool ok = true;
  const int expected[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5};
  for (int n = 1; n <= 12; ++n) {
    const auto found = enumerate_groups_of_order(n);
    if (static_cast<int>(found.size()) != expected[n - 1]) {
      ok = false;
      note(why, "order " + std::to_string(n) + ": " +
                    std::to_string(found.size()) + " classes, expected " +
                    std::to_string(expected[n - 1]));
    }
  }
  const CompletenessReport rep = completeness_check_small_orders();
  if (!rep.pass()) {
    ok = false;
    for (const auto& g : rep.gaps) note(why, g);
  }
  return ok;
}

// --- criterion 10: brute-force spot values ---------------------------------

bool criterion10(std::string& why) {
  bool ok = true;
  const std::pair<const char*, i64> spots[] = {
      {"A(5)", 59}, {"D(8)", 10}, {"Z(2) x Q(8)", 19}, {"Dic(36)", 19}};
  for (const auto& [expr, want] : spots) {
    const i64 got = count_subgroups(eval_group(expr));
    if (got != want) {
      ok = false;
      note(why, std::string(expr) + " -> " + std::to_string(got) +
                    ", expected " + std::to_string(want));
    }
  }
  return ok;
}

struct Criterion {
  int id;
  const char* title;
  bool (*run)(std::string&);
  double budget_seconds;  // 0 = no stated budget
};

const Criterion kCriteria[] = {
    {1, "abelian classes match the published table", criterion1, 60},
    {2, "catalog verifies with stated row counts", criterion2, 600},
    {3, "sequence emits all nineteen terms", criterion3, 0},
    {4, "closed forms agree with brute force", criterion4, 0},
    {5, "coprime multiplicativity and split round-trip", criterion5, 0},
    {6, "invariant suites report zero violations", criterion6, 0},
    {7, "order-shape bounds are sound, S3 attains equality", criterion7, 0},
    {8, "candidate families at 19 match the published table", criterion8, 5},
    {9, "enumeration oracle and completeness at small orders", criterion9, 0},
    {10, "brute-force spot values", criterion10, 0},
};

}  // namespace

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    std::string why;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      ok = false;
      note(why, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      note(why, "runtime " + std::to_string(secs) + "s exceeds budget");
    }
    std::printf("criterion %2d: %-55s %s (%.2fs)%s%s%s\n", c.id, c.title,
                ok ? "PASS" : "FAIL", secs, why.empty() ? "" : "  [",
                why.c_str(), why.empty() ? "" : "]");
    if (!ok) ++failures;
  }
  return failures;
}
