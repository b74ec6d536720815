#include "orealg/arith/linsolve.hpp"

#include <algorithm>
#include <random>

#include "orealg/arith/gcd.hpp"

namespace orealg {

namespace {

constexpr std::uint64_t P = ModularEchelon::kPrime;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % P);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, P - 2); }

std::optional<std::uint64_t> eval_mod(const RatFunc& r, std::span<const std::uint64_t> pt) {
  auto n = r.num().evaluate_mod(pt, P);
  auto d = r.den().evaluate_mod(pt, P);
  if (!n || !d || *d == 0) return std::nullopt;
  return mulmod(*n, invmod(*d));
}

std::size_t entry_cost(const RatFunc& r) {
  return (r.num().total_degree() + r.den().total_degree()) * 64 + r.num().size() + r.den().size();
}

const RatFunc* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

/// row -= f * pivot_row
void axpy(SparseRow& row, const RatFunc& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(f * pivot[j].second));
      ++j;
    } else {
      RatFunc v = row[i].second - f * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

/// Gauss-Jordan elimination over Q(x) choosing the cheapest pivot entry.
std::vector<Vector> exact_kernel(std::vector<SparseRow> rows, std::size_t cols) {
  std::vector<bool> done(rows.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::vector<bool> pivot_col(cols, false);
  while (true) {
    std::size_t best_r = rows.size(), best_c = 0, best_cost = SIZE_MAX;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (done[r]) continue;
      for (const auto& [c, v] : rows[r]) {
        std::size_t cost = entry_cost(v) * 4 + rows[r].size();
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r == rows.size()) break;
    done[best_r] = true;
    SparseRow& pr = rows[best_r];
    RatFunc inv = find_entry(pr, best_c)->inverse();
    for (auto& [c, v] : pr) v = (c == best_c) ? RatFunc(1) : v * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == best_r) continue;
      const RatFunc* e = find_entry(rows[r], best_c);
      if (!e) continue;
      RatFunc f = *e;
      axpy(rows[r], f, pr);
    }
    pivots.emplace_back(best_r, best_c);
    pivot_col[best_c] = true;
  }
  std::vector<Vector> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_col[f]) continue;
    Vector v(cols);
    v[f] = RatFunc(1);
    for (const auto& [r, c] : pivots)
      if (const RatFunc* e = find_entry(rows[r], f)) v[c] = -*e;
    kernel.push_back(normalize_vector(std::move(v)));
  }
  return kernel;
}

}  // namespace

SparseRow to_sparse(const Vector& row) {
  SparseRow out;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (!row[i].is_zero()) out.emplace_back(i, row[i]);
  return out;
}

ModularEchelon::ModularEchelon(std::size_t cols, std::uint64_t seed) : cols_(cols), point_(kMaxVars) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 12345);
  std::uniform_int_distribution<std::uint64_t> dist(2, P - 2);
  for (auto& x : point_) x = dist(rng);
}

bool ModularEchelon::add(const SparseRow& row) {
  std::vector<std::uint64_t> v(cols_, 0);
  for (const auto& [c, e] : row) {
    auto m = eval_mod(e, point_);
    if (!m) return true;
    v[c] = *m;
  }
  for (const auto& [pc, b] : basis_) {
    std::uint64_t f = v[pc];
    if (f == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      if (b[j]) v[j] = (v[j] + P - mulmod(f, b[j])) % P;
  }
  std::size_t pc = 0;
  while (pc < cols_ && v[pc] == 0) ++pc;
  if (pc == cols_) return false;
  std::uint64_t inv = invmod(v[pc]);
  for (auto& x : v) x = mulmod(x, inv);
  basis_.emplace_back(pc, std::move(v));
  return true;
}

bool row_annihilates(const SparseRow& row, const Vector& v) {
  RatFunc s;
  for (const auto& [c, e] : row)
    if (!v[c].is_zero()) s += e * v[c];
  return s.is_zero();
}

Vector normalize_vector(Vector v) {
  MPoly den(1);
  for (const auto& e : v)
    if (!e.is_zero()) den = poly_lcm(den, e.den());
  std::vector<MPoly> nums(v.size());
  MPoly g;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    nums[i] = *MPoly::divexact(v[i].num() * den, v[i].den());
    g = g.is_zero() ? nums[i].monic() : poly_gcd(g, nums[i]);
  }
  if (g.is_zero()) return v;
  // Rational content across all entries, sign fixed by the first entry.
  Integer cnum = 0, cden = 1;
  const MPoly* first = nullptr;
  for (auto& p : nums) {
    if (p.is_zero()) continue;
    p = *MPoly::divexact(p, g);
    if (!first) first = &p;
    for (const auto& t : p.terms()) {
      mpz_gcd(cnum.get_mpz_t(), cnum.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(cden.get_mpz_t(), cden.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  }
  Rational scale(cden, cnum);
  scale.canonicalize();
  if (sgn(first->lead_coeff()) < 0) scale = -scale;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = nums[i].is_zero() ? RatFunc() : RatFunc(nums[i] * scale);
  return v;
}

std::vector<Vector> nullspace(const std::vector<SparseRow>& rows, std::size_t cols, std::uint64_t seed) {
  ModularEchelon ech(cols, seed);
  std::vector<bool> chosen(rows.size(), false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (ech.rank() == cols) break;
    chosen[r] = ech.add(rows[r]);
  }
  // Modular rank is a lower bound, so full rank means a trivial kernel.
  if (ech.rank() == cols) return {};
  while (true) {
    std::vector<SparseRow> sub;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (chosen[r]) sub.push_back(rows[r]);
    std::vector<Vector> kernel = exact_kernel(std::move(sub), cols);
    bool ok = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (chosen[r]) continue;
      for (const auto& v : kernel)
        if (!row_annihilates(rows[r], v)) {
          chosen[r] = true;  // unlucky modular point; include the row
          ok = false;
          break;
        }
    }
    if (ok) return kernel;
  }
}

std::vector<Vector> nullspace(const Matrix& M, std::uint64_t seed) {
  if (M.empty()) return {};
  std::vector<SparseRow> rows;
  rows.reserve(M.size());
  for (const auto& r : M) rows.push_back(to_sparse(r));
  return nullspace(rows, M.front().size(), seed);
}

}  // namespace orealg
