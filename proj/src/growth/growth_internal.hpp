#pragma once

#include <cstdint>

#include "orealg/arith/mpoly.hpp"

namespace orealg::growth_detail {

/// p with its t-free content removed, monic; 1 when p is free of t.
MPoly t_primitive(const MPoly& p, std::uint32_t t_mask);
/// lcm in C(x)[t] of two t-primitive polynomials.
MPoly t_lcm(const MPoly& a, const MPoly& b, std::uint32_t t_mask);

}  // namespace orealg::growth_detail
