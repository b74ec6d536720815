#pragma once

#include <string>
#include <vector>

#include "orealg/cli/expr.hpp"
#include "orealg/groebner/groebner.hpp"
#include "orealg/ore/algebra.hpp"

namespace testing_support {

// Q(vars)<S_v : shift on v> with generator names "S" + var.
inline orealg::AlgebraPtr shift_algebra(const std::vector<std::string>& vars,
                                        orealg::OreKind kind = orealg::OreKind::Shift) {
  std::vector<orealg::OreGeneratorSpec> gens;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    orealg::OreGeneratorSpec g;
    g.name = "S" + vars[i];
    g.kind = kind;
    g.var = i;
    gens.push_back(g);
  }
  return orealg::make_algebra(vars, {}, gens);
}

inline orealg::OrePoly op(const std::string& s, const orealg::AlgebraPtr& alg) {
  return orealg::cli::parse_operator(s, alg);
}

inline std::vector<orealg::OrePoly> ops(const std::vector<std::string>& ss, const orealg::AlgebraPtr& alg) {
  std::vector<orealg::OrePoly> out;
  for (const auto& s : ss) out.push_back(op(s, alg));
  return out;
}

// Binomial C(n,k).
inline const std::vector<std::string> kBinomial = {"(k - n - 1)*Sn + n + 1", "(k + 1)*Sk + k - n"};

// Annihilator of C(n,k) S2(k,l) S2(n-k,m) over (n, m, k, l), with a telescoper
// for the sum over k and its certificate.
inline const std::vector<std::string> kDoubleStirlingIdeal = {
    "1 + n + (1 + m)*(1 + n)*Sm - (1 - k + n)*Sn*Sm",
    "(k - n)*Sm + (1 + k)*Sk*Sl + (1 + k)*(1 + m)*Sk*Sl*Sm + (1 + l)*(k - n)*Sl*Sm",
    "1 + n + (1 + l)*(1 + n)*Sl - (1 + k)*Sk*Sl*Sn",
};
inline const std::vector<std::string> kDoubleStirlingVars = {"n", "m", "k", "l"};
inline const std::string kDoubleStirlingTelescoper = "Sm + Sl + (2 + l + m)*Sl*Sm - Sl*Sm*Sn";
inline const std::string kDoubleStirlingCertificate = "k*(k + 1)/((k + 1)*(k - n - 1))*Sl + (m + 1)*k/(k - n - 1)*Sm*Sl";

// u(m,k) = C(2m - 2k - 1, m - 1) / (mk + 1), over (m, k).
inline const std::vector<std::string> kNonProper = {
    "m*(m - 2*k + 1)*((m + 1)*k + 1)*Sm - (m*k + 1)*(2*m - 2*k + 1)*(2*m - 2*k)",
    "(m*k + m + 1)*(2*m - 2*k - 1)*(2*m - 2*k - 2)*Sk - (m*k + 1)*(m - 2*k)*(m - 2*k - 1)",
};

}  // namespace testing_support
