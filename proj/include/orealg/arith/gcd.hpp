#pragma once

#include <cstdint>

#include "orealg/arith/mpoly.hpp"

namespace orealg {

/// Greatest common divisor over Q, normalized to leading coefficient 1.
/// gcd(0, b) is the monic associate of b; gcd(0, 0) = 0.
MPoly poly_gcd(const MPoly& a, const MPoly& b);

/// Least common multiple over Q, monic. lcm(0, b) = 0.
MPoly poly_lcm(const MPoly& a, const MPoly& b);

/// gcd of the coefficients of a viewed as a polynomial in the variables of
/// var_mask. The result is monic and free of those variables.
MPoly content_in(const MPoly& a, std::uint32_t var_mask);

/// Product of the distinct irreducible factors of a that involve at least
/// one variable of var_mask, monic. Throws ZeroPolynomial on a = 0.
MPoly squarefree_part(const MPoly& a, std::uint32_t var_mask);

}  // namespace orealg
