#include "orealg/cli/expr.hpp"

#include "orealg/error.hpp"

namespace orealg::cli {

bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.exponent != b.exponent || a.kids.size() != b.kids.size()) return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!same_structure(*a.kids[i], *b.kids[i])) return false;
  return true;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t j = std::min(i_ + ahead, toks_.size() - 1);
  return toks_[j];
}

const Token& TokenStream::next() {
  const Token& t = toks_[i_];
  if (i_ + 1 < toks_.size()) ++i_;
  return t;
}

bool TokenStream::at_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }
bool TokenStream::at_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

bool TokenStream::accept_punct(char c) {
  if (!at_punct(c)) return false;
  next();
  return true;
}

bool TokenStream::accept_word(std::string_view w) {
  if (!at_word(w)) return false;
  next();
  return true;
}

void TokenStream::fail(const Token& at, const std::string& msg) const {
  std::string found = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
  throw Error(ErrorCode::SyntaxError, at.pos.str() + ": " + msg + " (found " + found + ")");
}

const Token& TokenStream::expect_punct(char c) {
  if (!at_punct(c)) fail(peek(), std::string("expected '") + c + "'");
  return next();
}

const Token& TokenStream::expect_word(std::string_view w) {
  if (!at_word(w)) fail(peek(), "expected '" + std::string(w) + "'");
  return next();
}

const Token& TokenStream::expect_ident(std::string_view what) {
  if (peek().kind != Tok::Ident) fail(peek(), "expected " + std::string(what));
  return next();
}

unsigned TokenStream::expect_uint(std::string_view what) {
  if (peek().kind != Tok::Int) fail(peek(), "expected " + std::string(what));
  const Token& t = next();
  if (t.text.size() > 6) fail(t, "integer too large");
  return static_cast<unsigned>(std::stoul(t.text));
}

namespace {

ExprPtr node(Expr::Kind k, SourcePos pos, std::vector<ExprPtr> kids, std::string text = {}, unsigned e = 0) {
  auto n = std::make_shared<Expr>();
  n->kind = k;
  n->pos = pos;
  n->kids = std::move(kids);
  n->text = std::move(text);
  n->exponent = e;
  return n;
}

ExprPtr parse_sum(TokenStream& ts);

ExprPtr parse_atom(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind == Tok::Int) {
    ts.next();
    return node(Expr::Kind::Num, t.pos, {}, t.text);
  }
  if (t.kind == Tok::Ident) {
    ts.next();
    if (!ts.accept_punct('(')) return node(Expr::Kind::Name, t.pos, {}, t.text);
    std::vector<ExprPtr> args;
    if (!ts.at_punct(')')) {
      do args.push_back(parse_sum(ts));
      while (ts.accept_punct(','));
    }
    ts.expect_punct(')');
    return node(Expr::Kind::Call, t.pos, std::move(args), t.text);
  }
  if (ts.accept_punct('(')) {
    ExprPtr e = parse_sum(ts);
    ts.expect_punct(')');
    return e;
  }
  ts.fail(t, "expected a number, a name, or '('");
}

ExprPtr parse_power(TokenStream& ts) {
  ExprPtr base = parse_atom(ts);
  if (ts.at_punct('^')) {
    SourcePos p = ts.next().pos;
    unsigned e = ts.expect_uint("an exponent");
    return node(Expr::Kind::Pow, p, {base}, {}, e);
  }
  return base;
}

ExprPtr parse_unary(TokenStream& ts) {
  if (ts.at_punct('-')) {
    SourcePos p = ts.next().pos;
    return node(Expr::Kind::Neg, p, {parse_unary(ts)});
  }
  return parse_power(ts);
}

ExprPtr parse_product(TokenStream& ts) {
  ExprPtr lhs = parse_unary(ts);
  while (ts.at_punct('*') || ts.at_punct('/')) {
    const Token& op = ts.next();
    ExprPtr rhs = parse_unary(ts);
    lhs = node(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op.pos, {lhs, rhs});
  }
  return lhs;
}

ExprPtr parse_sum(TokenStream& ts) {
  ExprPtr lhs = parse_product(ts);
  while (ts.at_punct('+') || ts.at_punct('-')) {
    const Token& op = ts.next();
    ExprPtr rhs = parse_product(ts);
    lhs = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op.pos, {lhs, rhs});
  }
  return lhs;
}

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + print_expr(e) + ")" : print_expr(e); }

}  // namespace

ExprPtr parse_expr(TokenStream& ts) { return parse_sum(ts); }

ExprPtr parse_expr(std::string_view text) {
  TokenStream ts(tokenize(text));
  ExprPtr e = parse_sum(ts);
  if (!ts.at_end()) ts.fail(ts.peek(), "unexpected trailing input");
  return e;
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Num:
    case Expr::Kind::Name:
      return e.text;
    case Expr::Kind::Call: {
      std::string out = e.text + "(";
      for (std::size_t i = 0; i < e.kids.size(); ++i) out += (i ? ", " : "") + print_expr(*e.kids[i]);
      return out + ")";
    }
    case Expr::Kind::Neg:
      return "-" + wrap(*e.kids[0], precedence(*e.kids[0]) < 3);
    case Expr::Kind::Pow:
      return wrap(*e.kids[0], precedence(*e.kids[0]) < 5) + "^" + std::to_string(e.exponent);
    default: {
      int p = precedence(e);
      const char* op = e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - " : e.kind == Expr::Kind::Mul ? "*" : "/";
      // Right operands of equal precedence keep their parentheses so the
      // tree shape survives a print/parse round trip.
      return wrap(*e.kids[0], precedence(*e.kids[0]) < p) + op + wrap(*e.kids[1], precedence(*e.kids[1]) <= p);
    }
  }
}

namespace {

OrePoly eval_op(const Expr& e, const AlgebraPtr& alg) {
  switch (e.kind) {
    case Expr::Kind::Num:
      return OrePoly(alg, RatFunc(Rational(Integer(e.text))));
    case Expr::Kind::Name: {
      if (auto g = alg->generator_index(e.text)) return OrePoly::generator(alg, *g);
      if (auto v = alg->field_index(e.text)) return OrePoly(alg, RatFunc::variable(*v));
      throw Error(ErrorCode::UnknownName, e.pos.str() + ": unknown name '" + e.text + "'");
    }
    case Expr::Kind::Neg:
      return -eval_op(*e.kids[0], alg);
    case Expr::Kind::Add:
      return eval_op(*e.kids[0], alg) + eval_op(*e.kids[1], alg);
    case Expr::Kind::Sub:
      return eval_op(*e.kids[0], alg) - eval_op(*e.kids[1], alg);
    case Expr::Kind::Mul:
      return eval_op(*e.kids[0], alg) * eval_op(*e.kids[1], alg);
    case Expr::Kind::Div: {
      OrePoly den = eval_op(*e.kids[1], alg);
      if (den.generator_mask() != 0)
        throw Error(ErrorCode::KindError, e.pos.str() + ": division by an operator is not defined");
      if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, e.pos.str() + ": division by zero");
      return den.terms().front().coeff.inverse() * eval_op(*e.kids[0], alg);
    }
    case Expr::Kind::Pow: {
      OrePoly base = eval_op(*e.kids[0], alg);
      OrePoly r(alg, RatFunc(1));
      for (unsigned i = 0; i < e.exponent; ++i) r = r * base;
      return r;
    }
    case Expr::Kind::Call:
      throw Error(ErrorCode::KindError, e.pos.str() + ": '" + e.text + "(...)' is not an operator");
  }
  return OrePoly(alg);
}

RatFunc eval_coeff(const Expr& e, const std::vector<std::string>& names) {
  switch (e.kind) {
    case Expr::Kind::Num:
      return RatFunc(Rational(Integer(e.text)));
    case Expr::Kind::Name:
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == e.text) return RatFunc::variable(i);
      throw Error(ErrorCode::UnknownName, e.pos.str() + ": unknown name '" + e.text + "'");
    case Expr::Kind::Neg:
      return -eval_coeff(*e.kids[0], names);
    case Expr::Kind::Add:
      return eval_coeff(*e.kids[0], names) + eval_coeff(*e.kids[1], names);
    case Expr::Kind::Sub:
      return eval_coeff(*e.kids[0], names) - eval_coeff(*e.kids[1], names);
    case Expr::Kind::Mul:
      return eval_coeff(*e.kids[0], names) * eval_coeff(*e.kids[1], names);
    case Expr::Kind::Div: {
      RatFunc d = eval_coeff(*e.kids[1], names);
      if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, e.pos.str() + ": division by zero");
      return eval_coeff(*e.kids[0], names) / d;
    }
    case Expr::Kind::Pow:
      return eval_coeff(*e.kids[0], names).pow(static_cast<int>(e.exponent));
    case Expr::Kind::Call:
      throw Error(ErrorCode::KindError, e.pos.str() + ": '" + e.text + "(...)' is not a field element");
  }
  return RatFunc();
}

}  // namespace

OrePoly eval_operator(const Expr& e, const AlgebraPtr& alg) { return eval_op(e, alg); }

RatFunc eval_coefficient(const Expr& e, const std::vector<std::string>& field_names) {
  return eval_coeff(e, field_names);
}

OrePoly parse_operator(std::string_view text, const AlgebraPtr& alg) { return eval_operator(*parse_expr(text), alg); }

}  // namespace orealg::cli
