#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orealg/arith/ratfunc.hpp"

namespace orealg {

enum class OreKind {
  Differentiation,
  Shift,
  Difference,
  QDilation,
  ContinuousQDifference,
  QDifferentiation,
  QShift,
  DiscreteQDifference,
  Euler,
  Mahler,
  DividedDifference,
};

std::string_view to_string(OreKind k);
std::optional<OreKind> parse_kind(std::string_view name);

struct OreGeneratorSpec {
  std::string name;
  OreKind kind = OreKind::Shift;
  std::size_t var = 0;                 ///< index of the ground variable in the coefficient field
  std::optional<std::size_t> param;    ///< index of q for the q-kinds
  unsigned mahler_base = 0;            ///< b >= 2 for Mahler
  RatFunc point;                       ///< evaluation point a for DividedDifference

  bool operator==(const OreGeneratorSpec& o) const {
    return name == o.name && kind == o.kind && var == o.var && param == o.param && mahler_base == o.mahler_base &&
           point == o.point;
  }
};

/// sigma(u) = s1 * (d u) + s0 * u and delta(u) = d1 * (d u), where d is the
/// generator acting on u. All catalog kinds admit such a form.
struct LinearForm {
  RatFunc s1, s0, d1;
};

/// Coefficient field Q(vars, params) with a list of pairwise commuting Ore
/// generators. Field indeterminates share one index space: ground variables
/// first, then parameters.
class OreAlgebra {
 public:
  OreAlgebra(std::vector<std::string> ground, std::vector<std::string> params, std::vector<OreGeneratorSpec> gens);

  std::size_t field_size() const { return field_names_.size(); }
  std::size_t ground_count() const { return ground_count_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<std::string>& field_names() const { return field_names_; }
  const std::vector<OreGeneratorSpec>& generators() const { return gens_; }
  const OreGeneratorSpec& generator(std::size_t i) const { return gens_[i]; }
  std::vector<std::string> generator_names() const;

  std::optional<std::size_t> field_index(std::string_view name) const;
  std::optional<std::size_t> generator_index(std::string_view name) const;
  /// Generators attached to the given ground variable.
  std::vector<std::size_t> generators_on(std::size_t var) const;
  bool is_parameter(std::size_t field_index) const { return field_index >= ground_count_; }

  RatFunc sigma(std::size_t gen, const RatFunc& a) const;
  RatFunc delta(std::size_t gen, const RatFunc& a) const;
  RatFunc sigma_pow(std::size_t gen, const RatFunc& a, unsigned e) const;
  /// Inverse of sigma; throws Unsupported for Mahler and DividedDifference.
  RatFunc sigma_inverse(std::size_t gen, const RatFunc& a) const;
  bool sigma_invertible(std::size_t gen) const;
  bool delta_is_zero(std::size_t gen) const;
  bool sigma_is_identity(std::size_t gen) const;

  LinearForm linear_form(std::size_t gen) const;

  /// Copy with some generators switched to another kind (used by the
  /// shift/difference correspondence).
  std::shared_ptr<const OreAlgebra> with_kind(const std::vector<std::size_t>& gens, OreKind kind) const;

  bool operator==(const OreAlgebra& o) const {
    return field_names_ == o.field_names_ && ground_count_ == o.ground_count_ && gens_ == o.gens_;
  }

 private:
  std::vector<std::string> field_names_;
  std::size_t ground_count_;
  std::vector<OreGeneratorSpec> gens_;
  void validate() const;
};

using AlgebraPtr = std::shared_ptr<const OreAlgebra>;

AlgebraPtr make_algebra(std::vector<std::string> ground, std::vector<std::string> params,
                        std::vector<OreGeneratorSpec> gens);

/// (sigma, delta) applied to a.
std::pair<RatFunc, RatFunc> apply_sigma_delta(const OreAlgebra& alg, std::size_t gen, const RatFunc& a);

/// Telescopable witness: some a with delta(a) nonzero and free of every telescoping
/// ground variable; sigma(a) must commute with the other telescoping
/// generators. Returns (a, delta(a)) or nothing.
std::optional<std::pair<RatFunc, RatFunc>> telescopable_witness(const OreAlgebra& alg, std::size_t gen,
                                                                  const std::vector<std::size_t>& t_gens);

}  // namespace orealg
