#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "orealg/cli/lexer.hpp"
#include "orealg/ore/orepoly.hpp"

namespace orealg::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Infix expression over field variables, generators, and integers.
/// `*` is the skew product; `a / c` requires c free of generators and means
/// (1/c) * a. Calls `f(a, ...)` appear only in sequence definitions.
struct Expr {
  enum class Kind { Num, Name, Neg, Add, Sub, Mul, Div, Pow, Call };
  Kind kind;
  std::string text;  ///< digits for Num, identifier for Name and Call
  unsigned exponent = 0;
  std::vector<ExprPtr> kids;
  SourcePos pos;
};

bool same_structure(const Expr& a, const Expr& b);

/// Cursor over a token vector with diagnostics carrying source positions.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}
  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_punct(char c) const;
  bool at_word(std::string_view w) const;
  bool accept_punct(char c);
  bool accept_word(std::string_view w);
  const Token& expect_punct(char c);
  const Token& expect_word(std::string_view w);
  const Token& expect_ident(std::string_view what);
  unsigned expect_uint(std::string_view what);
  bool at_end() const { return peek().kind == Tok::End; }
  [[noreturn]] void fail(const Token& at, const std::string& msg) const;

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

ExprPtr parse_expr(TokenStream& ts);
ExprPtr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);

/// Evaluates to an operator in alg. Unknown names raise UnknownName.
OrePoly eval_operator(const Expr& e, const AlgebraPtr& alg);
/// Evaluates an expression free of generators to a field element.
RatFunc eval_coefficient(const Expr& e, const std::vector<std::string>& field_names);

/// Convenience: parse and evaluate in one step.
OrePoly parse_operator(std::string_view text, const AlgebraPtr& alg);

}  // namespace orealg::cli
