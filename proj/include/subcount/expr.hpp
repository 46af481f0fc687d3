#pragma once
// Textual group expressions:  expr := term { "x" term } ;
//                             term := NAME "(" args ")" ;
//                             args := integer { "," integer }.
// NAME is one of Z, D, Dic, Q, M, SD, A, S, SL, Heis, Meta. Whitespace is
// insignificant. Products are evaluated left to right as direct products.

#include <string>
#include <vector>

#include "subcount/group.hpp"

namespace subcount {

struct ExprTerm {
  std::string name;
  std::vector<i64> args;
  bool operator==(const ExprTerm&) const = default;
};

struct GroupExpr {
  std::vector<ExprTerm> terms;
  bool operator==(const GroupExpr&) const = default;
};

// Throws parse_error (with offset) on syntax errors or unknown names.
GroupExpr parse_expr(const std::string& text);

// Canonical text: "Z(9) x Z(3)", "Meta(5,8,3,0)". parse(render(e)) == e.
std::string render_expr(const GroupExpr& expr);

// Build the group an expression denotes. Semantic problems (bad constructor
// arguments) throw presentation_error; an oversized result throws size_error.
Group eval_term(const ExprTerm& term, int cap = kDefaultOrderCap);
Group eval_expr(const GroupExpr& expr, int cap = kDefaultOrderCap);
Group eval_group(const std::string& text, int cap = kDefaultOrderCap);

}  // namespace subcount
