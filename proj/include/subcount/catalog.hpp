#pragma once
// The classification table of non-abelian groups with at most 19 subgroups,
// held as executable constructions: every claimed count is re-derived by
// brute-force lattice enumeration, the combined sequence terms are assembled
// from it, and classical structure theorems are checked on every cataloged
// group as a cross-validation suite.

#include <string>
#include <vector>

#include "subcount/group.hpp"
#include "subcount/lattice.hpp"
#include "subcount/numbers.hpp"

namespace subcount {

struct CatalogEntry {
  std::string name;    // published label (unique)
  i64 k = 0;           // claimed number of subgroups
  std::string expr;    // pinned part as an expression ("" if inexpressible)
  // Exponents of additional cyclic factors Z_{p^e} at arbitrary primes
  // coprime to the pinned order and to each other.
  std::vector<int> free_factors;
  std::string notes;   // provenance of the action parameter, caveats
  bool test_only = false;  // verified, but not a classification row
};

// The full fixed table: 67 classification entries (k <= 19) plus two
// test-only entries (A5 and an alternative presentation of Dic36).
const std::vector<CatalogEntry>& catalog_entries();

// Build the pinned part of an entry (free factors left uninstantiated).
Group build_pinned(const CatalogEntry& e, int cap = kDefaultOrderCap);

// Build the entry with its free factors instantiated at the given primes
// (one prime per factor; distinct, and coprime to the pinned order).
Group build_entry(const CatalogEntry& e, const std::vector<i64>& primes,
                  int cap = kDefaultOrderCap);

struct VerificationReport {
  std::string name;
  i64 claimed = 0;
  i64 observed = 0;
  bool pass = false;
  std::string render() const;  // name<TAB>claimed<TAB>observed<TAB>PASS|FAIL
};

// Brute-force check of one entry: the pinned count times prod(e_i + 1) over
// free factors must equal k, and (for free entries) two distinct prime
// instantiations must both reproduce k. Mismatches are reported, not thrown.
VerificationReport verify_entry(const CatalogEntry& e,
                                int cap = kDefaultOrderCap);

// Every entry verified (concurrently); reports in catalog order. Memoized.
const std::vector<VerificationReport>& verify_all_entries();

// Number of classification rows claiming exactly k subgroups (k <= 19).
i64 nonabelian_class_count(i64 k);

// Terms 1..K of the combined sequence: abelian similarity classes plus
// non-abelian classes with exactly k subgroups. Throws verification_error
// if any catalog entry fails its brute-force check (integrity guard).
std::vector<i64> sequence_terms(i64 K = 19);

// One concrete group per entry (the pinned group, or the first prime
// instantiation for entries with free factors), with its full lattice.
struct CatalogGroup {
  std::string name;
  const CatalogEntry* entry = nullptr;
  Group group;
  std::vector<SubgroupSet> subgroups;
};
const std::vector<CatalogGroup>& catalog_groups();

struct InvariantReport {
  std::string name;
  i64 checked = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
  std::string render() const;  // name<TAB>checked=N<TAB>violations=V<TAB>...
};

// Subgroup counts in each order stratum of a p-group are = 1 (mod p).
InvariantReport check_wielandt();
// Sylow counts: n_p = 1 (mod p) and n_p divides the cofactor.
InvariantReport check_sylow();
// A subgroup of index equal to the smallest prime divisor is normal.
InvariantReport check_prime_index_normality();
// For N normal and any H, the product set NH is again a subgroup.
InvariantReport check_product_closure();
// A Sylow subgroup central in its normalizer has a normal complement.
InvariantReport check_burnside();
// Every catalog p-group meets the noncyclic p-group minimum; the modular
// maximal-cyclic entries (and Q8) attain it exactly.
InvariantReport check_min_count_attainment();
// The applicable order-shape lower bound never exceeds the observed count
// on non-nilpotent, coprime-indecomposable catalog groups.
InvariantReport check_bound_soundness();

std::vector<InvariantReport> run_invariant_suites();

}  // namespace subcount
