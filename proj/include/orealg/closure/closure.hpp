#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orealg/dimension/dimension.hpp"
#include "orealg/groebner/groebner.hpp"

namespace orealg {

struct ClosureOptions {
  unsigned max_degree = 3;
  /// Stop at the first degree whose relations reach the dimension bound.
  bool stop_at_bound = true;
  MonomialOrder order = default_order();
  std::uint64_t seed = 1;
};

struct ClosureResult {
  /// Kernel relations with cleared denominators, auto-reduced.
  LeftIdeal ideal;
  Dimension dimension;
  /// Dimension bound for the closure; empty when an input is the unit ideal.
  Dimension bound;
  bool bound_met = false;
  unsigned degree_used = 0;
  /// Number of distinct coordinates reached by ansatz monomials of degree
  /// <= s, for s = 0..degree_used.
  std::vector<std::size_t> coordinate_counts;
};

/// Annihilating ideal of f_1 * ... * f_r from annihilating ideals of the f_i.
ClosureResult closure_product(const std::vector<LeftIdeal>& factors, const ClosureOptions& opt = {});
ClosureResult closure_product(const LeftIdeal& a, const LeftIdeal& b, const ClosureOptions& opt = {});

/// Annihilating ideal of f_1 + ... + f_r.
ClosureResult closure_sum(const std::vector<LeftIdeal>& terms, const ClosureOptions& opt = {});
ClosureResult closure_sum(const LeftIdeal& a, const LeftIdeal& b, const ClosureOptions& opt = {});

/// Annihilating ideal of L * f from an annihilating ideal of f.
ClosureResult closure_apply(const OrePoly& L, const LeftIdeal& I, const ClosureOptions& opt = {});

}  // namespace orealg
