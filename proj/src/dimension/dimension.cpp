#include "orealg/dimension/dimension.hpp"

#include <bit>

namespace orealg {

std::uint32_t support_mask(const Exponents& e) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i]) m |= 1u << i;
  return m;
}

std::vector<std::size_t> mask_to_indices(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

std::uint64_t hilbert_function(const GroebnerBasis& G, unsigned s) {
  if (G.is_unit()) return 0;
  std::uint64_t count = 0;
  for (const auto& e : monomials_up_to(G.algebra()->size(), s))
    if (!G.is_reducible(e)) ++count;
  return count;
}

std::uint64_t hilbert_function(const LeftIdeal& I, unsigned s) { return hilbert_function(*I.groebner(), s); }

bool subset_is_free(const GroebnerBasis& G, std::uint32_t mask) {
  for (const auto& c : G.staircase())
    if ((support_mask(c) & ~mask) == 0) return false;
  return true;
}

Dimension hilbert_dimension(const GroebnerBasis& G) {
  if (G.is_unit()) return Dimension::of_unit();
  const std::size_t n = G.algebra()->size();
  unsigned best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    unsigned size = static_cast<unsigned>(std::popcount(mask));
    if (size > best && subset_is_free(G, mask)) best = size;
  }
  return {false, best};
}

Dimension hilbert_dimension(const LeftIdeal& I) { return hilbert_dimension(*I.groebner()); }

std::optional<std::vector<std::size_t>> free_generator_subset(const GroebnerBasis& G, std::size_t size) {
  const std::size_t n = G.algebra()->size();
  if (G.is_unit() || size > n) return std::nullopt;
  std::optional<std::vector<std::size_t>> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size || !subset_is_free(G, mask)) continue;
    auto idx = mask_to_indices(mask);
    if (!best || idx < *best) best = std::move(idx);
  }
  return best;
}

std::optional<std::vector<std::size_t>> free_generator_subset(const LeftIdeal& I, std::size_t size) {
  return free_generator_subset(*I.groebner(), size);
}

}  // namespace orealg
