#include "orealg/ore/algebra.hpp"

#include <algorithm>
#include <set>

#include "orealg/error.hpp"

namespace orealg {

namespace {

struct KindName {
  OreKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {OreKind::Differentiation, "diff"},
    {OreKind::Shift, "shift"},
    {OreKind::Difference, "difference"},
    {OreKind::QDilation, "qdilation"},
    {OreKind::ContinuousQDifference, "cqdifference"},
    {OreKind::QDifferentiation, "qdiff"},
    {OreKind::QShift, "qshift"},
    {OreKind::DiscreteQDifference, "dqdifference"},
    {OreKind::Euler, "euler"},
    {OreKind::Mahler, "mahler"},
    {OreKind::DividedDifference, "divdiff"},
};

bool is_q_kind(OreKind k) {
  switch (k) {
    case OreKind::QDilation:
    case OreKind::ContinuousQDifference:
    case OreKind::QDifferentiation:
    case OreKind::QShift:
    case OreKind::DiscreteQDifference:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string_view to_string(OreKind k) {
  for (const auto& kn : kKindNames)
    if (kn.kind == k) return kn.name;
  return "?";
}

std::optional<OreKind> parse_kind(std::string_view name) {
  for (const auto& kn : kKindNames)
    if (kn.name == name) return kn.kind;
  return std::nullopt;
}

OreAlgebra::OreAlgebra(std::vector<std::string> ground, std::vector<std::string> params,
                       std::vector<OreGeneratorSpec> gens)
    : ground_count_(ground.size()), gens_(std::move(gens)) {
  field_names_ = std::move(ground);
  for (auto& p : params) field_names_.push_back(std::move(p));
  validate();
}

void OreAlgebra::validate() const {
  if (field_names_.size() > kMaxVars) throw Error(ErrorCode::KindError, "too many field variables");
  if (gens_.size() > kMaxVars) throw Error(ErrorCode::KindError, "too many generators");
  std::set<std::string> names(field_names_.begin(), field_names_.end());
  if (names.size() != field_names_.size()) throw Error(ErrorCode::KindError, "duplicate variable name");
  std::set<std::size_t> used_vars;
  std::uint32_t gen_vars = 0;
  for (const auto& g : gens_) gen_vars |= 1u << g.var;
  for (const auto& g : gens_) {
    if (!names.insert(g.name).second) throw Error(ErrorCode::KindError, "duplicate name '" + g.name + "'");
    if (g.var >= ground_count_) throw Error(ErrorCode::UnknownVariable, g.name + " must act on a ground variable");
    if (!used_vars.insert(g.var).second)
      throw Error(ErrorCode::KindError, "two generators act on '" + field_names_[g.var] + "'");
    if (is_q_kind(g.kind) && (!g.param || *g.param < ground_count_ || *g.param >= field_names_.size()))
      throw Error(ErrorCode::KindError, g.name + " needs a parameter q");
    if (g.kind == OreKind::Mahler && g.mahler_base < 2) throw Error(ErrorCode::KindError, "Mahler base must be >= 2");
    if (g.kind == OreKind::DividedDifference && (g.point.var_mask() & gen_vars))
      throw Error(ErrorCode::KindError, "divided-difference point must be free of generator variables");
  }
}

std::vector<std::string> OreAlgebra::generator_names() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.name);
  return out;
}

std::optional<std::size_t> OreAlgebra::field_index(std::string_view name) const {
  for (std::size_t i = 0; i < field_names_.size(); ++i)
    if (field_names_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> OreAlgebra::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> OreAlgebra::generators_on(std::size_t var) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].var == var) out.push_back(i);
  return out;
}

RatFunc OreAlgebra::sigma(std::size_t gen, const RatFunc& a) const {
  const auto& g = gens_[gen];
  if (!(a.var_mask() & (1u << g.var))) return a;
  switch (g.kind) {
    case OreKind::Differentiation:
    case OreKind::Euler:
      return a;
    case OreKind::Shift:
    case OreKind::Difference:
      return a.shift(g.var, Rational(1));
    case OreKind::QDilation:
    case OreKind::ContinuousQDifference:
    case OreKind::QDifferentiation:
    case OreKind::QShift:
    case OreKind::DiscreteQDifference:
      return a.compose(g.var, MPoly::variable(*g.param) * MPoly::variable(g.var));
    case OreKind::Mahler:
      return a.compose(g.var, MPoly::variable(g.var).pow(g.mahler_base));
    case OreKind::DividedDifference:
      return a.compose(g.var, g.point);
  }
  return a;
}

RatFunc OreAlgebra::delta(std::size_t gen, const RatFunc& a) const {
  const auto& g = gens_[gen];
  if (!(a.var_mask() & (1u << g.var))) return RatFunc();
  switch (g.kind) {
    case OreKind::Differentiation:
      return a.derivative(g.var);
    case OreKind::Euler:
      return RatFunc::variable(g.var) * a.derivative(g.var);
    case OreKind::Shift:
    case OreKind::QDilation:
    case OreKind::QShift:
    case OreKind::Mahler:
      return RatFunc();
    case OreKind::Difference:
    case OreKind::ContinuousQDifference:
    case OreKind::DiscreteQDifference:
      return sigma(gen, a) - a;
    case OreKind::QDifferentiation: {
      RatFunc q = RatFunc::variable(*g.param);
      return (sigma(gen, a) - a) / ((q - RatFunc(1)) * RatFunc::variable(g.var));
    }
    case OreKind::DividedDifference:
      return (a - sigma(gen, a)) / (RatFunc::variable(g.var) - g.point);
  }
  return RatFunc();
}

RatFunc OreAlgebra::sigma_pow(std::size_t gen, const RatFunc& a, unsigned e) const {
  const auto& g = gens_[gen];
  if (e == 0 || sigma_is_identity(gen)) return a;
  if (g.kind == OreKind::Shift || g.kind == OreKind::Difference) return a.shift(g.var, Rational(e));
  RatFunc r = a;
  for (unsigned i = 0; i < e; ++i) r = sigma(gen, r);
  return r;
}

bool OreAlgebra::sigma_invertible(std::size_t gen) const {
  auto k = gens_[gen].kind;
  return k != OreKind::Mahler && k != OreKind::DividedDifference;
}

RatFunc OreAlgebra::sigma_inverse(std::size_t gen, const RatFunc& a) const {
  const auto& g = gens_[gen];
  if (!sigma_invertible(gen)) throw Error(ErrorCode::Unsupported, "sigma of " + g.name + " is not invertible");
  if (!(a.var_mask() & (1u << g.var)) || sigma_is_identity(gen)) return a;
  if (g.kind == OreKind::Shift || g.kind == OreKind::Difference) return a.shift(g.var, Rational(-1));
  return a.compose(g.var, RatFunc::variable(g.var) / RatFunc::variable(*g.param));
}

bool OreAlgebra::delta_is_zero(std::size_t gen) const {
  switch (gens_[gen].kind) {
    case OreKind::Shift:
    case OreKind::QDilation:
    case OreKind::QShift:
    case OreKind::Mahler:
      return true;
    default:
      return false;
  }
}

bool OreAlgebra::sigma_is_identity(std::size_t gen) const {
  auto k = gens_[gen].kind;
  return k == OreKind::Differentiation || k == OreKind::Euler;
}

LinearForm OreAlgebra::linear_form(std::size_t gen) const {
  const auto& g = gens_[gen];
  RatFunc zero, one(1);
  switch (g.kind) {
    case OreKind::Differentiation:
    case OreKind::Euler:
      return {zero, one, one};
    case OreKind::Shift:
    case OreKind::QDilation:
    case OreKind::QShift:
    case OreKind::Mahler:
      return {one, zero, zero};
    case OreKind::Difference:
    case OreKind::ContinuousQDifference:
    case OreKind::DiscreteQDifference:
      return {one, one, one};
    case OreKind::QDifferentiation:
      return {(RatFunc::variable(*g.param) - one) * RatFunc::variable(g.var), one, one};
    case OreKind::DividedDifference:
      return {g.point - RatFunc::variable(g.var), one, one};
  }
  throw Error(ErrorCode::NonlinearAlgebra, "no linear form for " + g.name);
}

std::shared_ptr<const OreAlgebra> OreAlgebra::with_kind(const std::vector<std::size_t>& gens, OreKind kind) const {
  auto copy = std::make_shared<OreAlgebra>(*this);
  for (auto i : gens) copy->gens_[i].kind = kind;
  copy->validate();
  return copy;
}

AlgebraPtr make_algebra(std::vector<std::string> ground, std::vector<std::string> params,
                        std::vector<OreGeneratorSpec> gens) {
  return std::make_shared<const OreAlgebra>(std::move(ground), std::move(params), std::move(gens));
}

std::pair<RatFunc, RatFunc> apply_sigma_delta(const OreAlgebra& alg, std::size_t gen, const RatFunc& a) {
  if (gen >= alg.size()) throw Error(ErrorCode::UnknownVariable, "generator index out of range");
  if (a.var_mask() & ~all_vars_mask(alg.field_size()))
    throw Error(ErrorCode::UnknownVariable, "coefficient uses an undeclared variable");
  return {alg.sigma(gen, a), alg.delta(gen, a)};
}

std::optional<std::pair<RatFunc, RatFunc>> telescopable_witness(const OreAlgebra& alg, std::size_t gen,
                                                                  const std::vector<std::size_t>& t_gens) {
  const auto& g = alg.generator(gen);
  RatFunc a = RatFunc::variable(g.var);
  RatFunc b = alg.delta(gen, a);
  if (b.is_zero()) return std::nullopt;
  std::uint32_t t_mask = 0;
  for (auto j : t_gens) t_mask |= 1u << alg.generator(j).var;
  t_mask |= 1u << g.var;
  if (b.var_mask() & t_mask) return std::nullopt;
  // sigma(a) must commute with the other telescoping generators.
  RatFunc sa = alg.sigma(gen, a);
  for (auto j : t_gens) {
    if (j == gen) continue;
    if (alg.sigma(j, sa) != sa || !alg.delta(j, sa).is_zero()) return std::nullopt;
  }
  return std::make_pair(a, b);
}

}  // namespace orealg
