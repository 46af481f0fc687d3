#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subcount {

// Line-oriented command-line driver.  Subcommands:
//   count <expr>                subgroup total of the evaluated expression
//   lattice <expr> [--by-order] total, optionally preceded by order strata
//   abelian-classes <k>         rendered classes, one per line, then the count
//   bound <factored-order>      applicable lower bound and its theorem tag
//   candidates <K>              admissible order families, one per line
//   verify tables               abelian table, catalog, and invariant checks
//   sequence [K]                first K combined terms, comma separated
// The global flag --max-order N lifts the construction cap.
//
// Exit codes: 0 success (all checks pass), 1 verification failure, 2 usage
// or parse error, 3 size-cap refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace subcount
