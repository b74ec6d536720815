#include <algorithm>

#include "orealg/cli/session.hpp"
#include "orealg/error.hpp"

namespace orealg::cli {

namespace {

struct Builtin {
  std::string_view name;
  std::size_t arity;
};

constexpr Builtin kBuiltins[] = {{"binomial", 2}, {"stirling2", 2}, {"eulerian", 2}, {"bernoulli", 1},
                                 {"factorial", 1}, {"pow", 2},       {"sum", 4}};

std::optional<std::size_t> builtin_arity(std::string_view name) {
  for (const auto& b : kBuiltins)
    if (b.name == name) return b.arity;
  return std::nullopt;
}

[[noreturn]] void fail(ErrorCode code, const Expr& e, const std::string& msg) {
  throw Error(code, e.pos.str() + ": " + msg);
}

// Ground values followed by the variables of enclosing sums.
struct Scope {
  const std::vector<std::string>& ground;
  std::vector<std::pair<std::string, long>> locals;
  Index at;

  std::optional<long> lookup(const std::string& name) const {
    for (auto it = locals.rbegin(); it != locals.rend(); ++it)
      if (it->first == name) return it->second;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (ground[i] == name) return at[i];
    return std::nullopt;
  }
};

long to_long(const Rational& v, const Expr& e) {
  if (v.get_den() != 1) fail(ErrorCode::OutOfDomain, e, "index expression is not an integer");
  if (!v.get_num().fits_slong_p()) fail(ErrorCode::OutOfDomain, e, "index out of range");
  return v.get_num().get_si();
}

using UserTable = std::map<std::string, OraclePtr>;

Rational eval(const Expr& e, Scope& s, const UserTable& users);

long eval_long(const Expr& e, Scope& s, const UserTable& users) { return to_long(eval(e, s, users), e); }

Rational eval_call(const Expr& e, Scope& s, const UserTable& users) {
  const auto& k = e.kids;
  if (e.text == "sum") {
    long lo = eval_long(*k[1], s, users), hi = eval_long(*k[2], s, users);
    Rational total = 0;
    s.locals.emplace_back(k[0]->text, 0);
    for (long j = lo; j <= hi; ++j) {
      s.locals.back().second = j;
      total += eval(*k[3], s, users);
    }
    s.locals.pop_back();
    return total;
  }
  if (e.text == "pow") {
    Rational b = eval(*k[0], s, users);
    long x = eval_long(*k[1], s, users);
    if (x < 0 && b == 0) fail(ErrorCode::OutOfDomain, e, "zero to a negative power");
    Rational r = 1;
    Rational f = x < 0 ? Rational(1 / b) : b;
    for (long i = 0; i < std::abs(x); ++i) r *= f;
    return r;
  }
  Index args;
  for (const auto& a : k) args.push_back(eval_long(*a, s, users));
  if (auto it = users.find(e.text); it != users.end()) return it->second->eval(args);
  return builtin_oracle(e.text)->eval(args);
}

Rational eval(const Expr& e, Scope& s, const UserTable& users) {
  switch (e.kind) {
    case Expr::Kind::Num:
      return Rational(Integer(e.text));
    case Expr::Kind::Name:
      return Rational(*s.lookup(e.text));
    case Expr::Kind::Neg:
      return -eval(*e.kids[0], s, users);
    case Expr::Kind::Add:
      return eval(*e.kids[0], s, users) + eval(*e.kids[1], s, users);
    case Expr::Kind::Sub:
      return eval(*e.kids[0], s, users) - eval(*e.kids[1], s, users);
    case Expr::Kind::Mul: {
      Rational a = eval(*e.kids[0], s, users);
      if (a == 0) return a;
      return a * eval(*e.kids[1], s, users);
    }
    case Expr::Kind::Div: {
      Rational a = eval(*e.kids[0], s, users);
      if (a == 0) return a;
      Rational b = eval(*e.kids[1], s, users);
      if (b == 0) fail(ErrorCode::OutOfDomain, e, "division by zero");
      return a / b;
    }
    case Expr::Kind::Pow: {
      Rational b = eval(*e.kids[0], s, users);
      Rational r = 1;
      for (unsigned i = 0; i < e.exponent; ++i) r *= b;
      return r;
    }
    case Expr::Kind::Call:
      return eval_call(e, s, users);
  }
  return 0;
}

// Static resolution: names bound, calls known with the right arity.
void resolve(const Expr& e, std::vector<std::string>& bound, const std::vector<std::string>& ground,
             const UserTable& users) {
  switch (e.kind) {
    case Expr::Kind::Num:
      return;
    case Expr::Kind::Name:
      if (std::find(bound.begin(), bound.end(), e.text) == bound.end() &&
          std::find(ground.begin(), ground.end(), e.text) == ground.end())
        fail(ErrorCode::UnknownName, e, "unknown index variable '" + e.text + "'");
      return;
    case Expr::Kind::Call: {
      std::size_t want;
      if (users.count(e.text))
        want = ground.size();
      else if (auto a = builtin_arity(e.text))
        want = *a;
      else
        fail(ErrorCode::UnknownName, e, "unknown sequence '" + e.text + "'");
      if (e.kids.size() != want)
        fail(ErrorCode::KindError, e,
             "'" + e.text + "' takes " + std::to_string(want) + " arguments, got " + std::to_string(e.kids.size()));
      if (e.text == "sum" && !users.count(e.text)) {
        if (e.kids[0]->kind != Expr::Kind::Name) fail(ErrorCode::KindError, *e.kids[0], "expected a summation variable");
        resolve(*e.kids[1], bound, ground, users);
        resolve(*e.kids[2], bound, ground, users);
        bound.push_back(e.kids[0]->text);
        resolve(*e.kids[3], bound, ground, users);
        bound.pop_back();
        return;
      }
      for (const auto& k : e.kids) resolve(*k, bound, ground, users);
      return;
    }
    default:
      for (const auto& k : e.kids) resolve(*k, bound, ground, users);
  }
}

}  // namespace

void OracleTable::define(const OracleDecl& d) {
  if (table_.count(d.name) || builtin_arity(d.name))
    throw Error(ErrorCode::KindError, d.pos.at.str() + ": sequence '" + d.name + "' is already defined");
  std::vector<std::string> bound;
  resolve(*d.body.e, bound, ground_, table_);
  // Later definitions cannot change what this one refers to.
  UserTable users = table_;
  ExprPtr body = d.body.e;
  std::vector<std::string> ground = ground_;
  table_[d.name] = make_oracle(d.name, ground_.size(), [body, users, ground](const Index& i) -> Rational {
    Scope s{ground, {}, i};
    return eval(*body, s, users);
  });
}

OraclePtr OracleTable::get(const std::string& name) const {
  auto it = table_.find(name);
  return it == table_.end() ? nullptr : it->second;
}

void check_index(const Expr& e, const std::vector<std::string>& ground) {
  std::vector<std::string> bound;
  resolve(e, bound, ground, {});
}

long eval_index(const Expr& e, const std::vector<std::string>& ground, const Index& at) {
  Scope s{ground, {}, at};
  return to_long(eval(e, s, {}), e);
}

}  // namespace orealg::cli
