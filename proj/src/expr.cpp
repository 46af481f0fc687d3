#include "subcount/expr.hpp"

#include <cctype>

#include "subcount/errors.hpp"

namespace subcount {

namespace {

const char* const kNames[] = {"Z",  "D", "Dic", "Q",    "M",   "SD",
                              "A",  "S", "SL",  "Heis", "Meta"};

bool known_name(const std::string& s) {
  for (const char* n : kNames)
    if (s == n) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr expr;
    expr.terms.push_back(term());
    skip_ws();
    // No constructor name contains 'x', so a single 'x' character is an
    // unambiguous product separator even without surrounding whitespace.
    while (pos_ < text_.size()) {
      expect('x');
      expr.terms.push_back(term());
      skip_ws();
    }
    return expr;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string letters() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw parse_error("expected a constructor name", start);
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  i64 integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw parse_error("expected an integer", start);
    i64 value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1'000'000'000)
        throw parse_error("integer argument too large", start);
    }
    return value;
  }

  ExprTerm term() {
    skip_ws();
    std::size_t at = pos_;
    ExprTerm t;
    t.name = letters();
    if (t.name == "x")
      throw parse_error("expected a constructor name", at);
    if (!known_name(t.name))
      throw parse_error("unknown constructor '" + t.name + "'", at);
    expect('(');
    t.args.push_back(integer());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      t.args.push_back(integer());
      skip_ws();
    }
    expect(')');
    return t;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void need_args(const ExprTerm& t, std::size_t count) {
  if (t.args.size() != count)
    throw presentation_error(t.name + " expects " + std::to_string(count) +
                             (count == 1 ? " argument" : " arguments") +
                             ", got " + std::to_string(t.args.size()));
}

int as_int(const ExprTerm& t, std::size_t i) {
  i64 v = t.args[i];
  if (v < 0 || v > 1'000'000)
    throw presentation_error(t.name + ": argument " + std::to_string(v) +
                             " out of range");
  return static_cast<int>(v);
}

}  // namespace

GroupExpr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string render_expr(const GroupExpr& expr) {
  std::string out;
  for (std::size_t i = 0; i < expr.terms.size(); ++i) {
    if (i) out += " x ";
    const ExprTerm& t = expr.terms[i];
    out += t.name + "(";
    for (std::size_t j = 0; j < t.args.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(t.args[j]);
    }
    out += ")";
  }
  return out;
}

Group eval_term(const ExprTerm& t, int cap) {
  if (t.name == "Z") {
    need_args(t, 1);
    return make_cyclic(as_int(t, 0), cap);
  }
  if (t.name == "D") {
    need_args(t, 1);
    return dihedral(as_int(t, 0), cap);
  }
  if (t.name == "Dic") {
    need_args(t, 1);
    return dicyclic(as_int(t, 0), cap);
  }
  if (t.name == "Q") {
    need_args(t, 1);
    int n = as_int(t, 0);
    if (n < 8 || (n & (n - 1)) != 0)
      throw presentation_error(
          "Q expects a power of two >= 8 (generalized quaternion), got " +
          std::to_string(n));
    Group g = dicyclic(n, cap);
    g.set_label("Q" + std::to_string(n));
    return g;
  }
  if (t.name == "M") {
    need_args(t, 2);
    return modular_maximal_cyclic(t.args[0], as_int(t, 1), cap);
  }
  if (t.name == "SD") {
    need_args(t, 1);
    if (t.args[0] != 16)
      throw presentation_error("SD is only available as SD(16)");
    Group g = metacyclic(8, 2, 3, 0, cap);
    g.set_label("SD16");
    return g;
  }
  if (t.name == "A") {
    need_args(t, 1);
    return alternating(as_int(t, 0), cap);
  }
  if (t.name == "S") {
    need_args(t, 1);
    if (t.args[0] != 3)
      throw presentation_error("S is only available as S(3)");
    return symmetric3(cap);
  }
  if (t.name == "SL") {
    need_args(t, 2);
    if (t.args[0] != 2 || t.args[1] != 3)
      throw presentation_error("SL is only available as SL(2,3)");
    return special_linear_2_3(cap);
  }
  if (t.name == "Heis") {
    need_args(t, 1);
    return heisenberg(t.args[0], cap);
  }
  if (t.name == "Meta") {
    need_args(t, 4);
    return metacyclic(as_int(t, 0), as_int(t, 1), as_int(t, 2), as_int(t, 3),
                      cap);
  }
  throw presentation_error("unknown constructor '" + t.name + "'");
}

Group eval_expr(const GroupExpr& expr, int cap) {
  if (expr.terms.empty())
    throw presentation_error("empty group expression");
  Group g = eval_term(expr.terms[0], cap);
  for (std::size_t i = 1; i < expr.terms.size(); ++i)
    g = direct_product(g, eval_term(expr.terms[i], cap), cap);
  return g;
}

Group eval_group(const std::string& text, int cap) {
  return eval_expr(parse_expr(text), cap);
}

}  // namespace subcount
