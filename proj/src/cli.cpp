#include "subcount/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "subcount/abelian.hpp"
#include "subcount/bounds.hpp"
#include "subcount/catalog.hpp"
#include "subcount/errors.hpp"
#include "subcount/expr.hpp"
#include "subcount/lattice.hpp"
#include "subcount/numbers.hpp"
#include "subcount/similarity.hpp"

namespace subcount {

namespace {

void usage(std::ostream& err) {
  err << "usage: subcount [--max-order N] <command>\n"
         "  count <expr>               e.g. count \"Z(9) x Z(3)\"\n"
         "  lattice <expr> [--by-order]\n"
         "  abelian-classes <k>\n"
         "  bound <factored-order>     e.g. bound 2^3*3\n"
         "  candidates <K>\n"
         "  verify tables\n"
         "  sequence [K]\n";
}

i64 parse_positive(const std::string& s, const char* what) {
  if (s.empty() || s.size() > 18) throw parse_error(std::string(what) + ": expected a positive integer", 0);
  i64 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw parse_error(std::string(what) + ": expected a positive integer", 0);
    v = v * 10 + (c - '0');
  }
  if (v < 1) throw parse_error(std::string(what) + ": expected a positive integer", 0);
  return v;
}

int cmd_count(const std::vector<std::string>& rest, int cap, std::ostream& out) {
  out << count_subgroups(eval_group(rest[1], cap)) << "\n";
  return 0;
}

int cmd_lattice(const std::vector<std::string>& rest, int cap,
                std::ostream& out, std::ostream& err) {
  bool by_order = false;
  std::string expr;
  for (size_t i = 1; i < rest.size(); ++i) {
    if (rest[i] == "--by-order") {
      by_order = true;
    } else if (expr.empty()) {
      expr = rest[i];
    } else {
      usage(err);
      return 2;
    }
  }
  if (expr.empty()) {
    usage(err);
    return 2;
  }
  const LatticeSummary s = summarize(eval_group(expr, cap));
  if (by_order)
    for (const auto& [order, howmany] : s.by_order)
      out << order << "\t" << howmany << "\n";
  out << "total\t" << s.total << "\n";
  return 0;
}

int cmd_abelian_classes(const std::vector<std::string>& rest, std::ostream& out) {
  const i64 k = parse_positive(rest[1], "abelian-classes");
  const std::vector<SimilarityClass> classes = enumerate_abelian_classes(k);
  for (const SimilarityClass& c : classes) out << render_class(c) << "\n";
  out << classes.size() << "\n";
  return 0;
}

int cmd_bound(const std::vector<std::string>& rest, std::ostream& out) {
  const FactoredOrder f = FactoredOrder::parse(rest[1]);
  out << bound_for_order(f) << "\t" << bound_theorem_tag(f) << "\n";
  return 0;
}

int cmd_candidates(const std::vector<std::string>& rest, std::ostream& out) {
  const i64 k = parse_positive(rest[1], "candidates");
  for (const BoundReport& r : candidate_orders(k)) out << r.render() << "\n";
  return 0;
}

int cmd_sequence(const std::vector<std::string>& rest, std::ostream& out) {
  const i64 k = rest.size() == 2 ? parse_positive(rest[1], "sequence") : 19;
  const std::vector<i64> terms = sequence_terms(k);
  for (size_t i = 0; i < terms.size(); ++i)
    out << (i ? ", " : "") << terms[i];
  out << "\n";
  return 0;
}

// One PASS/FAIL line per abelian class (k <= 22), per catalog entry, and per
// invariant suite, in that fixed order.
int cmd_verify(int cap, std::ostream& out) {
  bool all_pass = true;
  for (i64 k = 1; k <= 22; ++k)
    for (const SimilarityClass& c : enumerate_abelian_classes(k)) {
      const i64 observed = count_abelian(instantiate_class(c), cap);
      const bool pass = observed == k;
      all_pass = all_pass && pass;
      out << "abelian k=" << k << " " << render_class(c) << "\t" << k << "\t"
          << observed << "\t" << (pass ? "PASS" : "FAIL") << "\n";
    }
  for (const VerificationReport& r : verify_all_entries()) {
    all_pass = all_pass && r.pass;
    out << r.render() << "\n";
  }
  for (const InvariantReport& r : run_invariant_suites()) {
    all_pass = all_pass && r.pass();
    out << r.render() << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    int cap = kDefaultOrderCap;
    std::vector<std::string> rest;
    for (size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--max-order") {
        if (i + 1 == args.size()) {
          usage(err);
          return 2;
        }
        cap = static_cast<int>(parse_positive(args[++i], "--max-order"));
      } else if (args[i].rfind("--max-order=", 0) == 0) {
        cap = static_cast<int>(
            parse_positive(args[i].substr(12), "--max-order"));
      } else {
        rest.push_back(args[i]);
      }
    }
    if (rest.empty()) {
      usage(err);
      return 2;
    }
    const std::string& cmd = rest[0];
    if (cmd == "count" && rest.size() == 2) return cmd_count(rest, cap, out);
    if (cmd == "lattice") return cmd_lattice(rest, cap, out, err);
    if (cmd == "abelian-classes" && rest.size() == 2)
      return cmd_abelian_classes(rest, out);
    if (cmd == "bound" && rest.size() == 2) return cmd_bound(rest, out);
    if (cmd == "candidates" && rest.size() == 2) return cmd_candidates(rest, out);
    if (cmd == "sequence" && rest.size() <= 2) return cmd_sequence(rest, out);
    if (cmd == "verify" && rest.size() == 2 && rest[1] == "tables")
      return cmd_verify(cap, out);
    usage(err);
    return 2;
  } catch (const verification_error& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const size_error& e) {
    err << "size refusal: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    err << "parse error at offset " << e.pos << ": " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace subcount
