// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "orealg/arith/linsolve.hpp"
#include "orealg/cli/problem.hpp"
#include "orealg/cli/session.hpp"
#include "orealg/closure/closure.hpp"
#include "orealg/dimension/dimension.hpp"
#include "orealg/error.hpp"
#include "orealg/growth/growth.hpp"
#include "orealg/telescoping/telescoping.hpp"
#include "support/algebras.hpp"
#include "support/random_ops.hpp"

using namespace orealg;
using namespace testing_support;

namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note("FAILED " + what);
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

cli::ProblemFile corpus(const std::string& name) {
  std::ifstream in(fs::path(OREALG_CORPUS_DIR) / name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return cli::parse_problem(ss.str());
}

LeftIdeal declared(const cli::Declarations& d, const std::string& name) {
  for (const auto& [n, I] : d.ideals)
    if (n == name) return I;
  throw Error(ErrorCode::UnknownName, name);
}

LeftIdeal ideal_i() {
  auto alg = shift_algebra(kDoubleStirlingVars);
  return LeftIdeal(alg, ops(kDoubleStirlingIdeal, alg));
}

std::string dim_text(const Dimension& d) { return d.to_string(); }

Outcome closure_reproduction() {
  Outcome o;
  auto d = cli::load_declarations(corpus("closure_product.prob"));
  std::vector<LeftIdeal> factors = {declared(d, "B"), declared(d, "S1"), declared(d, "S2")};
  ClosureResult r = closure_product(factors, {.max_degree = 3});
  LeftIdeal I(d.algebra, ops(kDoubleStirlingIdeal, d.algebra));
  o.require(same_ideal(r.ideal, I), "closure ideal equals I");
  Dimension dim = hilbert_dimension(r.ideal);
  o.require(dim == Dimension{false, 2}, "dimension 2");
  o.note("degree " + std::to_string(r.degree_used) + ", " + std::to_string(r.ideal.groebner()->size()) +
         "-element basis, dim " + dim_text(dim));
  return o;
}

std::vector<TelescopingResult> g_fasenmyer;  // reused by the growth bound check

Outcome fasenmyer_reproduction() {
  Outcome o;
  LeftIdeal I = ideal_i();
  const AlgebraPtr& alg = I.algebra();
  std::uint32_t t = field_mask(*alg, {"k"});
  FasenmyerOptions opt;
  opt.max_degree = 4;
  opt.target_dim = 2;
  FasenmyerOutcome f = fasenmyer_search(I, t, opt);
  g_fasenmyer = f.results;
  OrePoly A = op(kDoubleStirlingTelescoper, alg).primitive();
  bool found = false;
  for (const auto& r : f.results) {
    if (r.telescoper != A) continue;
    found = true;
    o.require(r.degree == 4, "found at total degree 4");
    o.require(r.verified && is_member(r.witness, I), "certificate gives exact membership");
    o.note("telescoper " + r.telescoper.to_string() + " at degree " + std::to_string(r.degree));
  }
  o.require(found, "telescoper equals the reference up to normalization");
  return o;
}

Outcome zeilberger_reproduction() {
  Outcome o;
  LeftIdeal I = ideal_i();
  const AlgebraPtr& alg = I.algebra();
  std::uint32_t t = field_mask(*alg, {"k"});
  ZeilbergerOutcome low = zeilberger_search(I, t, 2, 1);
  o.require(!low.result, "no solution at (2,1)");
  o.require(low.system.unknown_count() == 5 && low.system.equation_count() == 14, "5 x 14 system at (2,1)");
  ZeilbergerOutcome high = zeilberger_search(I, t, 3, 2);
  o.require(high.system.unknown_count() == 14 && high.system.equation_count() == 28, "14 x 28 system at (3,2)");
  o.note(std::to_string(low.system.unknown_count()) + "x" + std::to_string(low.system.equation_count()) + " and " +
         std::to_string(high.system.unknown_count()) + "x" + std::to_string(high.system.equation_count()));
  if (!high.result) {
    o.require(false, "solution at (3,2)");
    return o;
  }
  OrePoly A = op(kDoubleStirlingTelescoper, alg), B = op(kDoubleStirlingCertificate, alg);
  const OrePoly& got = high.result->telescoper;
  // Same scale on A and B: got = s*A, certificate = s*B.
  RatFunc s = got.terms().front().coeff / A.coefficient(got.terms().front().exp);
  o.require(got == s * A, "A matches up to normalization");
  o.require(high.result->certificates.size() == 1 && high.result->certificates[0] == s * B,
            "B matches with the same normalization");
  o.require(high.result->verified, "membership of A + (Sk - 1) B");
  return o;
}

Outcome dimension_table() {
  Outcome o;
  auto check = [&](const std::string& label, const LeftIdeal& I, unsigned want) {
    Dimension d = hilbert_dimension(I);
    o.require(d == Dimension{false, want}, label + " -> " + std::to_string(want));
    o.note(label + " " + dim_text(d));
  };
  check("binomial", declared(cli::load_declarations(corpus("binomial.prob")), "B"), 0);
  check("Stirling", declared(cli::load_declarations(corpus("stirling.prob")), "S"), 1);
  check("I", ideal_i(), 2);
  check("Abel", declared(cli::load_declarations(corpus("abel.prob")), "A"), 2);
  return o;
}

std::string degrees(const GrowthCertificate& c) {
  std::string s;
  for (auto d : c.degrees) s += (s.empty() ? "" : ",") + std::to_string(d);
  return s;
}

Outcome growth() {
  Outcome o;
  // a: recurrence on the binomial ideal moved to the difference algebra.
  LeftIdeal B = declared(cli::load_declarations(corpus("binomial.prob")), "B");
  const AlgebraPtr& sh = B.algebra();
  AlgebraPtr diff = sh->with_kind({0, 1}, OreKind::Difference);
  std::vector<OrePoly> mapped;
  for (const auto& g : B.generators()) mapped.push_back(shift_to_difference(g, {0, 1}, diff));
  GrowthCertificate rec = growth_recurrence(LeftIdeal(diff, mapped), field_mask(*diff, {"k"}), 6);
  o.note("5a recurrence degrees " + degrees(rec) + " p=" + (rec.p ? std::to_string(*rec.p) : "?"));
  o.require(rec.p == 1u, "5a linear P_s on the binomial ideal");

  LeftIdeal I = ideal_i();
  GrowthCertificate pi = growth_probe(I, field_mask(*I.algebra(), {"k"}), 5);
  o.note("5b probe on I p=" + (pi.p ? std::to_string(*pi.p) : "?"));
  o.require(pi.p == 1u, "5b probe p = 1 on I");

  LeftIdeal U = declared(cli::load_declarations(corpus("non_proper.prob")), "U");
  GrowthCertificate pu = growth_probe(U, field_mask(*U.algebra(), {"k"}), 6);
  o.note("5c probe on non-proper p=" + (pu.p ? std::to_string(*pu.p) : "?"));
  o.require(pu.p == 2u, "5c probe p = 2 on the non-proper ideal");

  // d: telescoped ideal of the degree-4 search against d + (p - 1)|t| = 2.
  std::uint32_t t = field_mask(*I.algebra(), {"k"});
  AlgebraPtr sub = x_subalgebra(I.algebra(), t);
  std::vector<OrePoly> gens;
  for (const auto& r : g_fasenmyer) gens.push_back(to_x_subalgebra(r.telescoper, sub, t));
  TelescopingBound bound = telescoping_bound(2, 1, 1, 3);
  if (gens.empty()) {
    o.require(false, "5d telescopers available");
  } else {
    Dimension d = hilbert_dimension(LeftIdeal(sub, gens));
    o.note("5d telescoped dim " + dim_text(d) + " <= " + std::to_string(bound.bound));
    o.require(!d.empty && static_cast<long long>(d.value) <= bound.bound, "5d dimension bound");
  }
  return o;
}

Outcome identity_suite() {
  Outcome o;
  for (const char* f : {"double_stirling.prob", "stirling_eulerian.prob", "bernoulli_symmetry.prob", "abel.prob"}) {
    cli::RunReport r = cli::run_problem(corpus(f), {});
    std::size_t points = 0;
    bool verified = false;
    for (const auto& t : r.tasks) {
      if (t.task != "verify") continue;
      verified = true;
      for (const auto& c : t.json["checks"]) points += c["points"].get<std::size_t>();
      for (const auto& c : t.json["box"]) {
        long span = c["hi"].get<long>() - c["lo"].get<long>();
        o.require(span <= 12, std::string(f) + " box within 12 per index");
      }
    }
    o.require(verified && r.ok(), std::string(f) + " passes with computed telescopers");
    o.note(std::string(f) + " " + std::to_string(points) + " points");
  }
  return o;
}

// Property suites over every catalog kind and every corpus ideal.
Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(20240101);
  std::size_t cases = 0;
  for (OreKind kind : kAllKinds) {
    AlgebraPtr alg = kind_algebra(kind);
    for (int i = 0; i < 200; ++i) {
      RatFunc u = random_rf(rng, i % 2), v = random_rf(rng, i % 3 == 0);
      if (alg->delta(0, u * v) != alg->sigma(0, u) * alg->delta(0, v) + alg->delta(0, u) * v ||
          alg->sigma(0, u * v) != alg->sigma(0, u) * alg->sigma(0, v))
        o.require(false, std::string("skew-Leibniz for ") + std::string(to_string(kind)));
      OrePoly f = random_sparse_op(rng, alg, 2), g = random_sparse_op(rng, alg, 2), h = random_sparse_op(rng, alg, 1);
      if ((f * g) * h != f * (g * h)) o.require(false, std::string("associativity for ") + std::string(to_string(kind)));
      ++cases;
    }
  }
  o.note(std::to_string(cases) + " Leibniz/associativity cases");

  std::size_t ideals = 0, spairs = 0;
  for (const auto& entry : fs::directory_iterator(OREALG_CORPUS_DIR)) {
    if (entry.path().extension() != ".prob") continue;
    auto d = cli::load_declarations(corpus(entry.path().filename().string()));
    for (const auto& [name, I] : d.ideals) {
      const std::string label = entry.path().filename().string() + ":" + name;
      ++ideals;
      GBPtr G = I.groebner();
      const auto& ord = G->order();
      for (std::size_t i = 0; i < G->size(); ++i)
        for (std::size_t j = i + 1; j < G->size(); ++j, ++spairs)
          if (!G->normal_form(s_poly(G->elements()[i], G->elements()[j], ord)).is_zero())
            o.require(false, label + " S-pair reduces to zero");
      // Canonical: reversed input plus a redundant member gives the same basis.
      std::vector<OrePoly> gens(I.generators().rbegin(), I.generators().rend());
      gens.push_back(random_op(rng, d.algebra, 1) * gens.front());
      if (buchberger(d.algebra, gens, ord)->elements() != G->elements()) o.require(false, label + " canonical basis");
      if (!same_ideal(LeftIdeal(d.algebra, G->elements()), I, MonomialOrder{OrderKind::GradedLex, {}}))
        o.require(false, label + " same ideal under grlex");
      for (int it = 0; it < 10; ++it) {
        OrePoly f = random_op(rng, d.algebra, 3);
        OrePoly nf = G->normal_form(f);
        if (G->normal_form(nf) != nf) o.require(false, label + " normal form idempotent");
        for (const auto& tm : nf.terms())
          if (G->is_reducible(tm.exp)) o.require(false, label + " normal form irreducible");
      }
    }
  }
  o.note(std::to_string(ideals) + " corpus ideals, " + std::to_string(spairs) + " S-pairs");

  std::size_t systems = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> rk(1, 4), c(-5, 5);
    const std::size_t cols = 6, rank = static_cast<std::size_t>(rk(rng));
    auto entry = [&] {
      MPoly p(Rational(c(rng)));
      for (std::size_t v = 0; v < 2; ++v) p = p + MPoly::variable(v) * MPoly(Rational(c(rng)));
      return RatFunc(p);
    };
    Matrix base(rank, Vector(cols));
    for (auto& row : base)
      for (auto& e : row) e = entry();
    Matrix M;
    for (std::size_t r = 0; r < rank + 2; ++r) {
      Vector row(cols);
      for (const auto& b : base) {
        RatFunc w = entry();
        for (std::size_t j = 0; j < cols; ++j) row[j] = row[j] + w * b[j];
      }
      M.push_back(row);
    }
    ModularEchelon ech(cols, 17 + trial);
    for (const auto& row : M) ech.add(row);
    auto ker = nullspace(M, trial + 1);
    if (ker.size() != cols - ech.rank()) o.require(false, "nullspace dimension");
    for (const auto& v : ker)
      for (const auto& row : M)
        if (!row_annihilates(to_sparse(row), v)) o.require(false, "nullspace vectors exact");
    ModularEchelon kr(cols, 99 + trial);
    for (const auto& v : ker) kr.add(v);
    if (kr.rank() != ker.size()) o.require(false, "nullspace basis independent");
    ++systems;
  }
  o.note(std::to_string(systems) + " nullspace systems");

  for (const char* f : {"binomial.prob", "non_proper.prob"}) {
    auto d = cli::load_declarations(corpus(f));
    const LeftIdeal& I = d.ideals.front().second;
    GrowthCertificate c = growth_recurrence(I, field_mask(*d.algebra, {"k"}), 5);
    for (std::size_t s = 0; s + 1 < c.polys.size(); ++s)
      if (!MPoly::divexact(c.polys[s + 1], c.polys[s])) o.require(false, std::string(f) + " P_s divides P_s+1");
  }

  std::size_t runs = 0;
  auto bounded = [&](const std::string& label, const ClosureResult& r) {
    ++runs;
    bool ok = r.bound.empty ? r.dimension.empty : (r.dimension.empty || r.dimension.value <= r.bound.value);
    if (!ok) o.require(false, label + " closure dimension within bound");
  };
  for (const char* f : {"closure_product.prob", "stirling_eulerian.prob", "bernoulli_symmetry.prob"}) {
    cli::ProblemFile p = corpus(f);
    auto d = cli::load_declarations(p);
    for (const auto& s : p.statements) {
      const auto* t = std::get_if<cli::Task>(&s);
      const auto* c = t ? std::get_if<cli::ClosureTask>(t) : nullptr;
      if (!c) continue;
      std::vector<LeftIdeal> in;
      for (const auto& n : c->operands) in.push_back(declared(d, n));
      ClosureOptions co;
      co.max_degree = c->max_degree.value_or(3);
      bounded(f, c->op == "sum" ? closure_sum(in, co) : closure_product(in, co));
    }
  }
  {
    auto d = cli::load_declarations(corpus("binomial.prob"));
    LeftIdeal B = declared(d, "B");
    bounded("binomial squared", closure_product(B, B, {.max_degree = 2}));
    bounded("binomial plus itself", closure_sum(B, B, {.max_degree = 2}));
  }
  o.note(std::to_string(runs) + " closure runs within bound");
  return o;
}

Outcome negative_control() {
  Outcome o;
  LeftIdeal U = declared(cli::load_declarations(corpus("non_proper.prob")), "U");
  auto start = std::chrono::steady_clock::now();
  FasenmyerOutcome f = fasenmyer_search(U, field_mask(*U.algebra(), {"k"}), {.max_degree = 6});
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(f.results.empty(), "no telescoper up to degree 6");
  o.require(f.degree_reached == 6, "search reached degree 6");
  o.require(secs < 300.0, "terminates within 5 minutes");
  o.note("searched to degree " + std::to_string(f.degree_reached));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit;  // seconds, 0 = none
  };
  const Criterion criteria[] = {
      {1, "closure reproduction", closure_reproduction, 0},
      {2, "Fasenmyer reproduction", fasenmyer_reproduction, 60},
      {3, "Zeilberger reproduction", zeilberger_reproduction, 120},
      {4, "dimension table", dimension_table, 0},
      {5, "growth", growth, 0},
      {6, "identity suite", identity_suite, 120},
      {7, "property suites", properties, 0},
      {8, "negative control", negative_control, 300},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs > c.limit) o.require(false, "time limit");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << " " << c.name << ": " << (o.pass ? "PASS" : "FAIL") << " (" << secs << " s) "
         << o.detail;
    std::cout << line.str() << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
