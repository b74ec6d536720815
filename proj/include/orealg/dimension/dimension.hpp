#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orealg/groebner/groebner.hpp"

namespace orealg {

/// Hilbert dimension. `empty` marks the unit ideal, whose quotient is zero.
struct Dimension {
  bool empty = false;
  unsigned value = 0;

  static Dimension of_unit() { return {true, 0}; }
  bool operator==(const Dimension&) const = default;
  std::string to_string() const { return empty ? "empty" : std::to_string(value); }
};

/// Number of exponents of total degree <= s outside the staircase.
std::uint64_t hilbert_function(const GroebnerBasis& G, unsigned s);
std::uint64_t hilbert_function(const LeftIdeal& I, unsigned s);

/// Largest |T| such that no staircase corner is supported inside T.
Dimension hilbert_dimension(const GroebnerBasis& G);
Dimension hilbert_dimension(const LeftIdeal& I);

/// Generator subsets (as bit masks) with no corner supported inside them.
bool subset_is_free(const GroebnerBasis& G, std::uint32_t mask);
/// A free subset of the given size, preferring lexicographically smallest
/// index lists.
std::optional<std::vector<std::size_t>> free_generator_subset(const GroebnerBasis& G, std::size_t size);
std::optional<std::vector<std::size_t>> free_generator_subset(const LeftIdeal& I, std::size_t size);

std::uint32_t support_mask(const Exponents& e);
std::vector<std::size_t> mask_to_indices(std::uint32_t mask);

}  // namespace orealg
