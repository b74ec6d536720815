#include <algorithm>
#include <set>
#include <sstream>

#include "orealg/cli/session.hpp"
#include "orealg/closure/closure.hpp"
#include "orealg/dimension/dimension.hpp"
#include "orealg/error.hpp"
#include "orealg/growth/growth.hpp"
#include "orealg/telescoping/telescoping.hpp"

namespace orealg::cli {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail_at(ErrorCode code, const SourcePos& at, const std::string& msg) {
  throw Error(code, at.str() + ": " + msg);
}

std::string order_name(const MonomialOrder& o) { return o.kind == OrderKind::GradedLex ? "grlex" : "grevlex"; }

json dim_json(const Dimension& d) { return d.empty ? json("empty") : json(d.value); }

json exps_json(const Exponents& e, std::size_t n) {
  json a = json::array();
  for (std::size_t i = 0; i < n; ++i) a.push_back(e[i]);
  return a;
}

AlgebraPtr build_algebra(const AlgebraDecl& d) {
  std::vector<std::string> field = d.ground;
  field.insert(field.end(), d.params.begin(), d.params.end());
  std::vector<OreGeneratorSpec> specs;
  for (const auto& g : d.gens) {
    OreGeneratorSpec s;
    s.name = g.name;
    s.kind = *parse_kind(g.kind);
    auto v = std::find(d.ground.begin(), d.ground.end(), g.var);
    if (v == d.ground.end()) fail_at(ErrorCode::UnknownName, g.pos.at, "'" + g.var + "' is not a ground variable");
    s.var = static_cast<std::size_t>(v - d.ground.begin());
    if (g.param) {
      auto q = std::find(d.params.begin(), d.params.end(), *g.param);
      if (q == d.params.end()) fail_at(ErrorCode::UnknownName, g.pos.at, "'" + *g.param + "' is not a parameter");
      s.param = d.ground.size() + static_cast<std::size_t>(q - d.params.begin());
    }
    if (g.base) s.mahler_base = *g.base;
    if (g.point) s.point = eval_coefficient(*g.point->e, field);
    specs.push_back(std::move(s));
  }
  try {
    return make_algebra(d.ground, d.params, std::move(specs));
  } catch (const Error& e) {
    fail_at(e.code(), d.pos.at, e.what());
  }
}

// Names visible to tasks, with what kind of object each one is.
class Env {
 public:
  Env(const ProblemFile& p, const RunOptions& opt)
      : alg_(build_algebra(p.algebra)), oracles_(p.algebra.ground), opt_(opt) {}

  const AlgebraPtr& algebra() const { return alg_; }
  OracleTable& oracles() { return oracles_; }
  const RunOptions& options() const { return opt_; }

  void declare(const IdealDecl& d) {
    claim(d.name, d.pos.at);
    std::vector<OrePoly> gens;
    for (const auto& g : d.gens) gens.push_back(eval_operator(*g.e, alg_));
    ideals_.emplace(d.name, LeftIdeal(alg_, std::move(gens)));
  }

  void claim(const std::string& name, const SourcePos& at) {
    if (ideals_.count(name) || reserved_.count(name) || alg_->field_index(name) || alg_->generator_index(name))
      fail_at(ErrorCode::KindError, at, "name '" + name + "' is already in use");
    reserved_.insert(name);
  }

  void bind(const std::string& name, LeftIdeal I) { ideals_.insert_or_assign(name, std::move(I)); }

  const LeftIdeal& ideal(const std::string& name, const SourcePos& at) const {
    auto it = ideals_.find(name);
    if (it == ideals_.end()) fail_at(ErrorCode::UnknownName, at, "unknown ideal '" + name + "'");
    return it->second;
  }

  bool has_name(const std::string& name) const { return ideals_.count(name) || reserved_.count(name); }

  std::uint32_t ground_mask(const std::vector<std::string>& vars, const SourcePos& at) const {
    std::uint32_t m = 0;
    for (const auto& v : vars) {
      auto i = alg_->field_index(v);
      if (!i || alg_->is_parameter(*i)) fail_at(ErrorCode::UnknownName, at, "'" + v + "' is not a ground variable");
      m |= 1u << *i;
    }
    return m;
  }

  std::size_t ground_index(const std::string& v, const SourcePos& at) const {
    auto i = alg_->field_index(v);
    if (!i || alg_->is_parameter(*i)) fail_at(ErrorCode::UnknownName, at, "'" + v + "' is not a ground variable");
    return *i;
  }

  OraclePtr oracle(const std::string& name, const SourcePos& at) const {
    OraclePtr o = oracles_.get(name);
    if (!o) fail_at(ErrorCode::UnknownName, at, "unknown oracle '" + name + "'");
    return o;
  }

 private:
  AlgebraPtr alg_;
  OracleTable oracles_;
  RunOptions opt_;
  std::map<std::string, LeftIdeal> ideals_;
  std::set<std::string> reserved_;
};

// Static checks on a task: every name it reads exists, every name it binds
// is fresh. Bound names are reserved so later tasks resolve.
void check_task(Env& env, const Task& task, std::set<std::string>& pending) {
  auto need = [&](const std::string& name, const SourcePos& at) {
    if (!env.has_name(name) && !pending.count(name)) fail_at(ErrorCode::UnknownName, at, "unknown ideal '" + name + "'");
  };
  auto bind = [&](const std::optional<std::string>& name, const SourcePos& at) {
    if (!name) return;
    if (env.has_name(*name) || pending.count(*name)) fail_at(ErrorCode::KindError, at, "name '" + *name + "' is already in use");
    pending.insert(*name);
  };
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        const SourcePos& at = t.pos.at;
        if constexpr (std::is_same_v<T, GbTask> || std::is_same_v<T, DimTask>) {
          need(t.ideal, at);
        } else if constexpr (std::is_same_v<T, ClosureTask>) {
          for (const auto& o : t.operands) need(o, at);
          bind(t.bind, at);
        } else if constexpr (std::is_same_v<T, GrowthTask>) {
          need(t.ideal, at);
          env.ground_mask(t.over, at);
        } else if constexpr (std::is_same_v<T, TelescopeTask>) {
          need(t.ideal, at);
          env.ground_mask(t.over, at);
          bind(t.bind, at);
        } else if constexpr (std::is_same_v<T, VerifyTask>) {
          env.oracle(t.summand, at);
          env.oracle(t.closed_form, at);
          env.ground_index(t.var, at);
          for (const ExprRef* e : {&t.lo, &t.hi}) check_index(*e->e, env.oracles().ground());
          if (const auto* name = std::get_if<std::string>(&t.by))
            need(*name, at);
          else
            for (const auto& e : std::get<std::vector<ExprRef>>(t.by)) eval_operator(*e.e, env.algebra());
          for (const auto& b : t.box) {
            env.ground_index(b.var, at);
            if (b.lo > b.hi) fail_at(ErrorCode::KindError, at, "empty range for '" + b.var + "'");
          }
          for (const auto& p : t.initial) env.ground_index(p.var, at);
        }
      },
      task);
}

void load_declaration(Env& env, const Statement& s) {
  if (const auto* d = std::get_if<IdealDecl>(&s)) {
    env.declare(*d);
  } else if (const auto* o = std::get_if<OracleDecl>(&s)) {
    env.claim(o->name, o->pos.at);
    env.oracles().define(*o);
  }
}

struct Runner {
  Env& env;
  const RunOptions& opt;
  TaskReport& rep;

  void line(const std::string& s) { rep.lines.push_back(s); }

  json basis_json(const GroebnerBasis& G) {
    json a = json::array();
    for (const auto& g : G.elements()) a.push_back(g.to_string());
    return a;
  }

  void print_basis(const GroebnerBasis& G) {
    line("gb (" + std::to_string(G.size()) + " elements, " + order_name(G.order()) + "):");
    for (const auto& g : G.elements()) line("  " + g.to_string());
  }

  void operator()(const GbTask& t) {
    const LeftIdeal& I = env.ideal(t.ideal, t.pos.at);
    GBPtr G = I.groebner(opt.order);
    print_basis(*G);
    rep.json["ideal"] = t.ideal;
    rep.json["order"] = order_name(opt.order);
    rep.json["basis"] = basis_json(*G);
    json leads = json::array();
    for (const auto& e : G->staircase()) leads.push_back(exps_json(e, G->algebra()->size()));
    rep.json["leading_exponents"] = leads;
    rep.ok = true;
  }

  void operator()(const DimTask& t) {
    const LeftIdeal& I = env.ideal(t.ideal, t.pos.at);
    GBPtr G = I.groebner(opt.order);
    Dimension d = hilbert_dimension(*G);
    line("dim = " + d.to_string());
    rep.json["ideal"] = t.ideal;
    rep.json["dimension"] = dim_json(d);
    if (!d.empty) {
      json free = json::array();
      if (auto s = free_generator_subset(*G, d.value))
        for (auto i : *s) free.push_back(G->algebra()->generator(i).name);
      rep.json["free_generators"] = free;
    }
    rep.ok = true;
  }

  void operator()(const ClosureTask& t) {
    std::vector<LeftIdeal> in;
    for (const auto& o : t.operands) in.push_back(env.ideal(o, t.pos.at));
    ClosureOptions co;
    co.max_degree = t.max_degree.value_or(opt.max_degree.value_or(3));
    co.order = opt.order;
    co.seed = opt.seed;
    ClosureResult r = t.op == "product" ? closure_product(in, co) : closure_sum(in, co);
    GBPtr G = r.ideal.groebner(opt.order);
    line("ansatz degree " + std::to_string(r.degree_used));
    print_basis(*G);
    line("dim = " + r.dimension.to_string() + " (bound " + r.bound.to_string() + (r.bound_met ? ", met)" : ", not met)"));
    rep.json["op"] = t.op;
    rep.json["operands"] = t.operands;
    rep.json["degree_used"] = r.degree_used;
    rep.json["basis"] = basis_json(*G);
    rep.json["dimension"] = dim_json(r.dimension);
    rep.json["bound"] = dim_json(r.bound);
    rep.json["bound_met"] = r.bound_met;
    rep.json["coordinate_counts"] = r.coordinate_counts;
    if (t.bind) {
      env.bind(*t.bind, r.ideal);
      rep.json["bind"] = *t.bind;
      line("bound to " + *t.bind);
    }
    rep.ok = true;
  }

  void operator()(const GrowthTask& t) {
    const LeftIdeal& I = env.ideal(t.ideal, t.pos.at);
    std::uint32_t mask = env.ground_mask(t.over, t.pos.at);
    unsigned steps = t.steps.value_or(6);
    std::string method = t.method.value_or("probe");
    GrowthCertificate c = method == "recurrence" ? growth_recurrence(I, mask, steps, opt.order)
                                                 : growth_probe(I, mask, steps, {opt.order, opt.seed, true});
    std::string degs;
    for (std::size_t i = 0; i < c.degrees.size(); ++i) degs += (i ? " " : "") + std::to_string(c.degrees[i]);
    line("method " + method + ", degrees by step: " + degs);
    line(c.p ? "p = " + std::to_string(*c.p) : std::string("p undetermined"));
    if (c.degenerate) line("degrees are bounded");
    if (c.heuristic) line("heuristic fit");
    if (!c.note.empty()) line("note: " + c.note);
    rep.json["ideal"] = t.ideal;
    rep.json["over"] = t.over;
    rep.json["method"] = method;
    rep.json["degrees"] = c.degrees;
    rep.json["p"] = c.p ? json(*c.p) : json(nullptr);
    rep.json["degenerate"] = c.degenerate;
    rep.json["heuristic"] = c.heuristic;
    rep.ok = c.p.has_value();
  }

  json result_json(const TelescopingResult& r, std::vector<std::string>& text) {
    const AlgebraPtr& alg = r.telescoper.algebra();
    json j;
    j["telescoper"] = r.telescoper.to_string();
    text.push_back("telescoper: " + r.telescoper.to_string());
    json certs = json::array();
    for (std::size_t k = 0; k < r.t_gens.size(); ++k) {
      const std::string g = alg->generator(r.t_gens[k]).name;
      const std::string factor = r.form == CertificateForm::Difference ? "(" + g + " - 1)" : g;
      certs.push_back({{"generator", g}, {"factor", factor}, {"certificate", r.certificates[k].to_string()}});
      text.push_back("certificate: " + factor + " * (" + r.certificates[k].to_string() + ")");
    }
    j["certificates"] = certs;
    j["form"] = std::string(to_string(r.form));
    j["degree"] = r.degree;
    j["verified"] = r.verified;
    return j;
  }

  void operator()(const TelescopeTask& t) {
    const LeftIdeal& I = env.ideal(t.ideal, t.pos.at);
    std::uint32_t mask = env.ground_mask(t.over, t.pos.at);
    std::vector<TelescopingResult> results;
    rep.json["ideal"] = t.ideal;
    rep.json["over"] = t.over;
    if (t.zeilberger) {
      auto [a, b] = *t.zeilberger;
      ZeilbergerOptions zo;
      zo.order = opt.order;
      zo.seed = opt.seed;
      ZeilbergerOutcome z = zeilberger_search(I, mask, a, b, zo);
      rep.json["method"] = "zeilberger";
      rep.json["ansatz"] = {a, b};
      rep.json["system"] = {{"unknowns", z.system.unknown_count()},
                            {"equations", z.system.equation_count()},
                            {"square", z.system.square_count},
                            {"columns", z.ansatz_columns}};
      line("coupled system " + std::to_string(z.system.unknown_count()) + " x " +
           std::to_string(z.system.equation_count()) + " (" + std::to_string(z.system.square_count) + " square rows)");
      if (z.result) results.push_back(*z.result);
      else line("no solution");
    } else {
      FasenmyerOptions fo;
      fo.max_degree = t.max_degree.value_or(opt.max_degree.value_or(4));
      fo.target_dim = t.target_dim;
      fo.order = opt.order;
      fo.seed = opt.seed;
      FasenmyerOutcome f = fasenmyer_search(I, mask, fo);
      rep.json["method"] = "fasenmyer";
      rep.json["degree_reached"] = f.degree_reached;
      rep.json["budget_exhausted"] = f.budget_exhausted;
      rep.json["trivial"] = f.trivial;
      if (t.target_dim) rep.json["target_met"] = f.target_met;
      line("search degree " + std::to_string(f.degree_reached) + (f.budget_exhausted ? ", budget exhausted" : ""));
      if (f.trivial) line("unit ideal: trivial telescoper");
      results = std::move(f.results);
    }
    json rs = json::array();
    for (const auto& r : results) rs.push_back(result_json(r, rep.lines));
    rep.json["results"] = rs;
    if (results.empty()) {
      line("no telescoper found");
      return;
    }
    AlgebraPtr sub = x_subalgebra(env.algebra(), mask);
    std::vector<OrePoly> gens;
    for (const auto& r : results) gens.push_back(to_x_subalgebra(r.telescoper, sub, mask));
    LeftIdeal T(sub, gens);
    Dimension d = hilbert_dimension(T);
    line("telescoped dim = " + d.to_string());
    rep.json["telescoped_dimension"] = dim_json(d);
    if (t.bind) {
      env.bind(*t.bind, T);
      rep.json["bind"] = *t.bind;
      line("bound to " + *t.bind);
    }
    rep.ok = std::all_of(results.begin(), results.end(), [](const TelescopingResult& r) { return r.verified; });
  }

  void operator()(const VerifyTask& t) {
    const auto& ground = env.oracles().ground();
    const SourcePos& at = t.pos.at;
    DefiniteSum sum;
    sum.summand = env.oracle(t.summand, at);
    sum.index = env.ground_index(t.var, at);
    ExprPtr lo = t.lo.e, hi = t.hi.e;
    sum.window = [lo, hi, &ground](const Index& p) {
      return std::make_pair(eval_index(*lo, ground, p), eval_index(*hi, ground, p));
    };
    std::vector<OrePoly> ops;
    if (const auto* name = std::get_if<std::string>(&t.by))
      ops = env.ideal(*name, at).generators();
    else
      for (const auto& e : std::get<std::vector<ExprRef>>(t.by)) ops.push_back(eval_operator(*e.e, env.algebra()));

    IdentityCheck c;
    c.sum = sum;
    c.closed_form = env.oracle(t.closed_form, at);
    c.box = SampleBox::cube(ground.size(), 0, static_cast<long>(opt.verify_box));
    for (const auto& b : t.box) {
      std::size_t i = env.ground_index(b.var, at);
      c.box.lo[i] = b.lo;
      c.box.hi[i] = b.hi;
    }
    std::vector<std::pair<std::size_t, long>> pins;
    for (const auto& p : t.initial) pins.emplace_back(env.ground_index(p.var, at), p.value);
    if (!pins.empty())
      c.initial_slice = [pins](const Index& p) {
        return std::all_of(pins.begin(), pins.end(), [&](const auto& q) { return p[q.first] == q.second; });
      };

    rep.json["summand"] = t.summand;
    rep.json["over"] = t.var;
    rep.json["closed_form"] = t.closed_form;
    json box = json::array();
    for (std::size_t i = 0; i < ground.size(); ++i)
      box.push_back({{"var", ground[i]}, {"lo", i == sum.index ? 0 : c.box.lo[i]}, {"hi", i == sum.index ? 0 : c.box.hi[i]}});
    rep.json["box"] = box;
    json checks = json::array();
    bool ok = !ops.empty();
    for (const auto& L : ops) {
      c.telescoper = L;
      IdentityReport r = check_identity(c);
      ok = ok && r.passed();
      line(L.to_string() + ": " + r.summary());
      checks.push_back({{"telescoper", L.to_string()},
                        {"passed", r.passed()},
                        {"points", r.points},
                        {"skipped", r.skipped},
                        {"sum_not_annihilated", r.sum_not_annihilated.size()},
                        {"closed_form_not_annihilated", r.closed_form_not_annihilated.size()},
                        {"initial_value_mismatch", r.initial_value_mismatch.size()},
                        {"value_mismatch", r.value_mismatch.size()},
                        {"summation_order_mismatch", r.summation_order_mismatch.size()},
                        {"boundary_violation", r.boundary_violation.size()}});
    }
    rep.json["checks"] = checks;
    rep.json["note"] = IdentityReport{}.note;
    rep.ok = ok;
  }
};

json algebra_json(const OreAlgebra& alg) {
  json j;
  std::vector<std::string> ground(alg.field_names().begin(), alg.field_names().begin() + alg.ground_count());
  std::vector<std::string> params(alg.field_names().begin() + alg.ground_count(), alg.field_names().end());
  j["ground"] = ground;
  j["parameters"] = params;
  json gens = json::array();
  for (const auto& g : alg.generators())
    gens.push_back({{"name", g.name}, {"kind", std::string(to_string(g.kind))}, {"var", alg.field_names()[g.var]}});
  j["generators"] = gens;
  return j;
}

}  // namespace

bool RunReport::ok() const {
  return std::all_of(tasks.begin(), tasks.end(), [](const TaskReport& t) { return t.ok; });
}

Declarations load_declarations(const ProblemFile& p) {
  Env env(p, {});
  Declarations out{env.algebra(), {}};
  for (const auto& s : p.statements) {
    load_declaration(env, s);
    if (const auto* d = std::get_if<IdealDecl>(&s)) out.ideals.emplace_back(d->name, env.ideal(d->name, d->pos.at));
  }
  return out;
}

void check_problem(const ProblemFile& p) {
  Env env(p, {});
  std::set<std::string> pending;
  for (const auto& s : p.statements) {
    if (const auto* t = std::get_if<Task>(&s))
      check_task(env, *t, pending);
    else
      load_declaration(env, s);
  }
}

RunReport run_problem(const ProblemFile& p, const RunOptions& opt) {
  check_problem(p);
  Env env(p, opt);
  RunReport out;
  out.algebra = algebra_json(*env.algebra());
  for (const auto& s : p.statements) {
    const auto* t = std::get_if<Task>(&s);
    if (!t) {
      load_declaration(env, s);
      continue;
    }
    TaskReport rep;
    rep.task = std::string(task_name(*t));
    rep.pos = task_pos(*t).at;
    rep.json["task"] = rep.task;
    rep.json["line"] = rep.pos.line;
    try {
      std::visit(Runner{env, opt, rep}, *t);
    } catch (const Error& e) {
      rep.ok = false;
      rep.lines.push_back(std::string("error: ") + e.what());
      rep.json["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
    rep.json["ok"] = rep.ok;
    out.tasks.push_back(std::move(rep));
  }
  return out;
}

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.tasks.size(); ++i) {
    const TaskReport& t = r.tasks[i];
    os << "[" << i + 1 << "] " << t.task << " (line " << t.pos.line << ")\n";
    for (const auto& l : t.lines) os << "  " << l << "\n";
    os << "  " << (t.ok ? "ok" : "FAILED") << "\n";
  }
  os << (r.ok() ? "all tasks succeeded" : "some tasks failed") << "\n";
  return os.str();
}

std::string render_json(const RunReport& r, const RunOptions& opt) {
  json j;
  j["schema"] = "orealg-report";
  j["version"] = kReportVersion;
  j["options"] = {{"order", order_name(opt.order)},
                  {"max_degree", opt.max_degree ? json(*opt.max_degree) : json(nullptr)},
                  {"seed", opt.seed},
                  {"verify_box", opt.verify_box}};
  j["algebra"] = r.algebra;
  json tasks = json::array();
  for (const auto& t : r.tasks) tasks.push_back(t.json);
  j["tasks"] = tasks;
  j["ok"] = r.ok();
  return j.dump(2) + "\n";
}

}  // namespace orealg::cli
