#include "orealg/cli/problem.hpp"

#include <set>

#include "orealg/error.hpp"
#include "orealg/ore/algebra.hpp"

namespace orealg::cli {

namespace {

bool is_q_kind_name(std::string_view k) {
  return k == "qdilation" || k == "cqdifference" || k == "qdiff" || k == "qshift" || k == "dqdifference";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : ts_(tokenize(text)) {}

  ProblemFile file() {
    ProblemFile p;
    p.algebra = algebra();
    while (!ts_.at_end()) p.statements.push_back(statement());
    return p;
  }

 private:
  TokenStream ts_;

  std::string ident(std::string_view what) { return ts_.expect_ident(what).text; }

  std::vector<std::string> names(std::string_view what) {
    std::vector<std::string> out{ident(what)};
    while (ts_.accept_punct(',')) out.push_back(ident(what));
    return out;
  }

  long signed_int(std::string_view what) {
    bool neg = ts_.accept_punct('-');
    if (ts_.peek().kind != Tok::Int) ts_.fail(ts_.peek(), "expected " + std::string(what));
    const Token& t = ts_.next();
    if (t.text.size() > 12) ts_.fail(t, "integer too large");
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  AlgebraDecl algebra() {
    AlgebraDecl a;
    a.pos.at = ts_.expect_word("algebra").pos;
    ts_.expect_word("Q");
    ts_.expect_punct('(');
    a.ground = names("a ground variable");
    if (ts_.accept_punct(';')) a.params = names("a parameter");
    ts_.expect_punct(')');
    ts_.expect_punct('<');
    do a.gens.push_back(generator());
    while (ts_.accept_punct(','));
    ts_.expect_punct('>');
    ts_.expect_punct(';');
    return a;
  }

  GeneratorDecl generator() {
    GeneratorDecl g;
    const Token& name = ts_.expect_ident("a generator name");
    g.name = name.text;
    g.pos.at = name.pos;
    ts_.expect_punct(':');
    const Token& kind = ts_.expect_ident("a generator kind");
    if (!parse_kind(kind.text))
      throw Error(ErrorCode::KindError, kind.pos.str() + ": unknown generator kind '" + kind.text + "'");
    g.kind = kind.text;
    ts_.expect_punct('(');
    g.var = ident("a ground variable");
    if (is_q_kind_name(g.kind)) {
      ts_.expect_punct(',');
      g.param = ident("a parameter");
    } else if (g.kind == "mahler") {
      ts_.expect_punct(',');
      g.base = ts_.expect_uint("a Mahler base");
    } else if (g.kind == "divdiff") {
      ts_.expect_punct(',');
      g.point = ExprRef{parse_expr(ts_)};
    }
    ts_.expect_punct(')');
    return g;
  }

  Statement statement() {
    const Token& head = ts_.peek();
    if (head.kind != Tok::Ident) ts_.fail(head, "expected a declaration or a task");
    if (ts_.accept_word("ideal")) return ideal(head.pos);
    if (ts_.accept_word("oracle")) return oracle(head.pos);
    if (ts_.accept_word("gb")) return Task{finish(GbTask{ident("an ideal name"), {head.pos}})};
    if (ts_.accept_word("dim")) return Task{finish(DimTask{ident("an ideal name"), {head.pos}})};
    if (ts_.accept_word("closure")) return Task{closure(head.pos)};
    if (ts_.accept_word("growth")) return Task{growth(head.pos)};
    if (ts_.accept_word("telescope")) return Task{telescope(head.pos)};
    if (ts_.accept_word("verify")) return Task{verify(head.pos)};
    ts_.fail(head, "expected a declaration or a task");
  }

  template <class T>
  T finish(T t) {
    ts_.expect_punct(';');
    return t;
  }

  IdealDecl ideal(SourcePos at) {
    IdealDecl d;
    d.pos.at = at;
    d.name = ident("an ideal name");
    ts_.expect_punct('=');
    d.gens = expr_list();
    ts_.expect_punct(';');
    return d;
  }

  std::vector<ExprRef> expr_list() {
    ts_.expect_punct('[');
    if (ts_.at_punct(']')) ts_.fail(ts_.peek(), "an operator list needs at least one element");
    std::vector<ExprRef> out;
    do out.push_back({parse_expr(ts_)});
    while (ts_.accept_punct(','));
    ts_.expect_punct(']');
    return out;
  }

  OracleDecl oracle(SourcePos at) {
    OracleDecl d;
    d.pos.at = at;
    d.name = ident("an oracle name");
    ts_.expect_punct('=');
    d.body = {parse_expr(ts_)};
    ts_.expect_punct(';');
    return d;
  }

  // Options may come in any order but at most once each.
  bool option(std::set<std::string>& seen, std::string_view word) {
    if (!ts_.at_word(word)) return false;
    const Token& t = ts_.next();
    if (!seen.insert(t.text).second) ts_.fail(t, "option given twice");
    return true;
  }

  ClosureTask closure(SourcePos at) {
    ClosureTask c;
    c.pos.at = at;
    const Token& op = ts_.expect_ident("'product' or 'sum'");
    if (op.text != "product" && op.text != "sum") ts_.fail(op, "expected 'product' or 'sum'");
    c.op = op.text;
    ts_.expect_punct('(');
    c.operands = names("an ideal name");
    ts_.expect_punct(')');
    std::set<std::string> seen;
    while (!ts_.at_punct(';')) {
      if (option(seen, "maxdeg"))
        c.max_degree = ts_.expect_uint("a degree");
      else if (option(seen, "as"))
        c.bind = ident("a result name");
      else
        ts_.fail(ts_.peek(), "expected 'maxdeg', 'as', or ';'");
    }
    return finish(c);
  }

  GrowthTask growth(SourcePos at) {
    GrowthTask g;
    g.pos.at = at;
    g.ideal = ident("an ideal name");
    ts_.expect_word("over");
    g.over = names("a summation variable");
    std::set<std::string> seen;
    while (!ts_.at_punct(';')) {
      if (option(seen, "steps")) {
        g.steps = ts_.expect_uint("a step count");
      } else if (option(seen, "method")) {
        const Token& m = ts_.expect_ident("'recurrence' or 'probe'");
        if (m.text != "recurrence" && m.text != "probe") ts_.fail(m, "expected 'recurrence' or 'probe'");
        g.method = m.text;
      } else {
        ts_.fail(ts_.peek(), "expected 'steps', 'method', or ';'");
      }
    }
    return finish(g);
  }

  TelescopeTask telescope(SourcePos at) {
    TelescopeTask t;
    t.pos.at = at;
    t.ideal = ident("an ideal name");
    ts_.expect_word("over");
    t.over = names("a summation variable");
    std::set<std::string> seen;
    while (!ts_.at_punct(';')) {
      if (option(seen, "maxdeg")) {
        t.max_degree = ts_.expect_uint("a degree");
      } else if (option(seen, "dim")) {
        t.target_dim = ts_.expect_uint("a target dimension");
      } else if (option(seen, "zeilberger")) {
        unsigned a = ts_.expect_uint("the degree of A");
        unsigned b = ts_.expect_uint("the degree of B");
        t.zeilberger = {a, b};
      } else if (option(seen, "as")) {
        t.bind = ident("a result name");
      } else {
        ts_.fail(ts_.peek(), "expected 'maxdeg', 'dim', 'zeilberger', 'as', or ';'");
      }
    }
    return finish(t);
  }

  VerifyTask verify(SourcePos at) {
    VerifyTask v;
    v.pos.at = at;
    ts_.expect_word("sum");
    v.summand = ident("an oracle name");
    ts_.expect_word("over");
    v.var = ident("the summation variable");
    ts_.expect_word("from");
    v.lo = {parse_expr(ts_)};
    ts_.expect_word("to");
    v.hi = {parse_expr(ts_)};
    ts_.expect_word("equals");
    v.closed_form = ident("an oracle name");
    ts_.expect_word("by");
    if (ts_.at_punct('['))
      v.by = expr_list();
    else
      v.by = ident("a telescope result or an operator list");
    std::set<std::string> seen;
    while (!ts_.at_punct(';')) {
      if (option(seen, "box")) {
        do {
          BoxRange r;
          r.var = ident("a variable");
          r.lo = signed_int("a lower bound");
          r.hi = signed_int("an upper bound");
          v.box.push_back(r);
        } while (ts_.accept_punct(','));
      } else if (option(seen, "initial")) {
        do {
          Pin p;
          p.var = ident("a variable");
          ts_.expect_punct('=');
          p.value = signed_int("a value");
          v.initial.push_back(p);
        } while (ts_.accept_punct(','));
      } else {
        ts_.fail(ts_.peek(), "expected 'box', 'initial', or ';'");
      }
    }
    return finish(v);
  }
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

std::string print_list(const std::vector<ExprRef>& xs, const std::string& indent) {
  if (xs.size() == 1) return "[" + print_expr(*xs[0].e) + "]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < xs.size(); ++i) out += indent + "  " + print_expr(*xs[i].e) + (i + 1 < xs.size() ? ",\n" : "\n");
  return out + indent + "]";
}

struct TaskPrinter {
  std::string operator()(const GbTask& t) const { return "gb " + t.ideal; }
  std::string operator()(const DimTask& t) const { return "dim " + t.ideal; }
  std::string operator()(const ClosureTask& t) const {
    std::string out = "closure " + t.op + "(" + join(t.operands) + ")";
    if (t.max_degree) out += " maxdeg " + std::to_string(*t.max_degree);
    if (t.bind) out += " as " + *t.bind;
    return out;
  }
  std::string operator()(const GrowthTask& t) const {
    std::string out = "growth " + t.ideal + " over " + join(t.over);
    if (t.steps) out += " steps " + std::to_string(*t.steps);
    if (t.method) out += " method " + *t.method;
    return out;
  }
  std::string operator()(const TelescopeTask& t) const {
    std::string out = "telescope " + t.ideal + " over " + join(t.over);
    if (t.max_degree) out += " maxdeg " + std::to_string(*t.max_degree);
    if (t.target_dim) out += " dim " + std::to_string(*t.target_dim);
    if (t.zeilberger) out += " zeilberger " + std::to_string(t.zeilberger->first) + " " + std::to_string(t.zeilberger->second);
    if (t.bind) out += " as " + *t.bind;
    return out;
  }
  std::string operator()(const VerifyTask& t) const {
    std::string out = "verify sum " + t.summand + " over " + t.var + " from " + print_expr(*t.lo.e) + " to " +
                      print_expr(*t.hi.e) + "\n  equals " + t.closed_form + "\n  by ";
    if (const auto* name = std::get_if<std::string>(&t.by))
      out += *name;
    else
      out += print_list(std::get<std::vector<ExprRef>>(t.by), "  ");
    if (!t.box.empty()) {
      out += "\n  box ";
      for (std::size_t i = 0; i < t.box.size(); ++i)
        out += (i ? ", " : "") + t.box[i].var + " " + std::to_string(t.box[i].lo) + " " + std::to_string(t.box[i].hi);
    }
    if (!t.initial.empty()) {
      out += "\n  initial ";
      for (std::size_t i = 0; i < t.initial.size(); ++i)
        out += (i ? ", " : "") + t.initial[i].var + " = " + std::to_string(t.initial[i].value);
    }
    return out;
  }
};

}  // namespace

ProblemFile parse_problem(std::string_view text) { return Parser(text).file(); }

std::string print_problem(const ProblemFile& p) {
  const AlgebraDecl& a = p.algebra;
  std::string out = "algebra Q(" + join(a.ground);
  if (!a.params.empty()) out += "; " + join(a.params);
  out += ")<";
  for (std::size_t i = 0; i < a.gens.size(); ++i) {
    const GeneratorDecl& g = a.gens[i];
    out += (i ? ", " : "") + g.name + ":" + g.kind + "(" + g.var;
    if (g.param) out += ", " + *g.param;
    if (g.base) out += ", " + std::to_string(*g.base);
    if (g.point) out += ", " + print_expr(*g.point->e);
    out += ")";
  }
  out += ">;\n";
  for (const auto& s : p.statements) {
    if (const auto* d = std::get_if<IdealDecl>(&s))
      out += "ideal " + d->name + " = " + print_list(d->gens, "") + ";\n";
    else if (const auto* o = std::get_if<OracleDecl>(&s))
      out += "oracle " + o->name + " = " + print_expr(*o->body.e) + ";\n";
    else
      out += std::visit(TaskPrinter{}, std::get<Task>(s)) + ";\n";
  }
  return out;
}

std::string_view task_name(const Task& t) {
  static constexpr std::string_view names[] = {"gb", "dim", "closure", "growth", "telescope", "verify"};
  return names[t.index()];
}

Pos task_pos(const Task& t) {
  return std::visit([](const auto& x) { return x.pos; }, t);
}

}  // namespace orealg::cli
