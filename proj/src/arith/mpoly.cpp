#include "orealg/arith/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "orealg/error.hpp"

namespace orealg {

namespace {

bool term_greater(const MPoly::Term& a, const MPoly::Term& b) { return grevlex_cmp(a.exp, b.exp) > 0; }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u64(const Integer& z, std::uint64_t p) {
  // mpz_fdiv_ui works on unsigned long, which is 64-bit on the supported platforms.
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

void sort_and_combine(std::vector<MPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational acc = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].exp == terms[i].exp) {
      acc += terms[j].coeff;
      ++j;
    }
    if (sgn(acc) != 0) {
      terms[out].exp = terms[i].exp;
      terms[out].coeff = std::move(acc);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

MPoly::MPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Exponents{}, c});
}

MPoly MPoly::variable(std::size_t index) {
  if (index >= kMaxVars) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
  MPoly p;
  p.terms_.push_back({Exponents::unit(index), Rational(1)});
  return p;
}

MPoly MPoly::monomial(const Exponents& e, const Rational& c) {
  MPoly p;
  if (sgn(c) != 0) p.terms_.push_back({e, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  sort_and_combine(terms);
  MPoly p;
  p.terms_ = std::move(terms);
  return p;
}

void MPoly::normalize_sorted() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return sgn(t.coeff) == 0; }),
               terms_.end());
}

bool MPoly::is_one() const { return terms_.size() == 1 && terms_[0].exp.is_zero() && terms_[0].coeff == 1; }

Rational MPoly::constant_value() const { return terms_.empty() ? Rational(0) : terms_[0].coeff; }

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().exp.is_zero()) return terms_.back().coeff;
  return Rational(0);
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().exp.total(); }

unsigned MPoly::degree(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exp[var]);
  return d;
}

unsigned MPoly::degree_in(std::uint32_t mask) const {
  unsigned d = 0;
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (mask & (1u << i)) s += t.exp[i];
    d = std::max(d, s);
  }
  return d;
}

std::uint32_t MPoly::var_mask() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.exp[i]) m |= 1u << i;
  return m;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grevlex_cmp(terms_[i].exp, o.terms_[j].exp);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (sgn(s) != 0) out.push_back({terms_[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grevlex_cmp(terms_[i].exp, o.terms_[j].exp);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back({o.terms_[j].exp, -o.terms_[j].coeff});
      ++j;
    } else {
      Rational s = terms_[i].coeff - o.terms_[j].coeff;
      if (sgn(s) != 0) out.push_back({terms_[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back({o.terms_[j].exp, -o.terms_[j].coeff});
  terms_ = std::move(out);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (b.terms_.size() == 1) {
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.exp + b.terms_[0].exp, t.coeff * b.terms_[0].coeff});
    return r;  // multiplying by a monomial preserves the order
  }
  if (a.terms_.size() == 1) return b * a;
  std::unordered_map<Exponents, Rational, ExponentsHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational prod;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prod = s.coeff * t.coeff;
      auto [it, fresh] = acc.try_emplace(s.exp + t.exp, prod);
      if (!fresh) it->second += prod;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (sgn(c) != 0) r.terms_.push_back({e, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MPoly& MPoly::operator/=(const Rational& c) {
  if (sgn(c) == 0) throw Error(ErrorCode::DivisionByZero, "polynomial divided by zero");
  for (auto& t : terms_) t.coeff /= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].exp == b.terms_[i].exp) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<MPoly> MPoly::divexact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "divexact by zero");
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  // Cheap degree screens before running the division.
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (b.degree(v) > a.degree(v)) return std::nullopt;
  if (b.total_degree() > a.total_degree()) return std::nullopt;

  MPoly r = a;
  std::vector<Term> q;
  const Term& lb = b.terms_.front();
  while (!r.is_zero()) {
    const Term& lr = r.terms_.front();
    if (!divides(lb.exp, lr.exp)) return std::nullopt;
    Term qt{lr.exp - lb.exp, lr.coeff / lb.coeff};
    // Remainder trailing terms must stay compatible with b's trailing term.
    r -= b * MPoly::monomial(qt.exp, qt.coeff);
    q.push_back(std::move(qt));
  }
  MPoly out;
  out.terms_ = std::move(q);  // produced in decreasing order
  return out;
}

MPoly MPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term n{t.exp, t.coeff * t.exp[var]};
    n.exp[var] -= 1;
    out.push_back(std::move(n));
  }
  return from_terms(std::move(out));
}

MPoly MPoly::shift(std::size_t var, const Rational& c) const {
  if (sgn(c) == 0) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() * 2);
  std::vector<Rational> cpow{Rational(1)};
  for (const auto& t : terms_) {
    unsigned e = t.exp[var];
    while (cpow.size() <= e) cpow.push_back(cpow.back() * c);
    // (x+c)^e = sum_j binom(e,j) c^(e-j) x^j
    Integer binom = 1;
    for (unsigned j = e + 1; j-- > 0;) {
      // j runs from e down to 0; binom tracks binom(e, j)
      Term n{t.exp, t.coeff * cpow[e - j] * Rational(binom)};
      n.exp[var] = static_cast<std::uint16_t>(j);
      out.push_back(std::move(n));
      if (j > 0) binom = binom * j / (e - j + 1);
    }
  }
  return from_terms(std::move(out));
}

MPoly MPoly::compose(std::size_t var, const MPoly& image) const {
  unsigned d = degree(var);
  if (d == 0) return *this;
  std::vector<MPoly> pw{MPoly(1)};
  for (unsigned i = 1; i <= d; ++i) pw.push_back(pw.back() * image);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exponents rest = t.exp;
    unsigned e = rest[var];
    rest[var] = 0;
    for (const auto& s : pw[e].terms_) out.push_back({rest + s.exp, t.coeff * s.coeff});
  }
  return from_terms(std::move(out));
}

MPoly MPoly::evaluate(std::size_t var, const Rational& value) const {
  if (degree(var) == 0) return *this;
  std::vector<Rational> vp{Rational(1)};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    unsigned e = t.exp[var];
    while (vp.size() <= e) vp.push_back(vp.back() * value);
    Term n{t.exp, t.coeff * vp[e]};
    n.exp[var] = 0;
    out.push_back(std::move(n));
  }
  return from_terms(std::move(out));
}

MPoly MPoly::evaluate(std::uint32_t mask, std::span<const Rational> values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<std::vector<Rational>> pw(kMaxVars);
  for (const auto& t : terms_) {
    Term n{t.exp, t.coeff};
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (!(mask & (1u << v)) || t.exp[v] == 0) continue;
      auto& vp = pw[v];
      if (vp.empty()) vp.push_back(Rational(1));
      while (vp.size() <= t.exp[v]) vp.push_back(vp.back() * values[v]);
      n.coeff *= vp[t.exp[v]];
      n.exp[v] = 0;
    }
    out.push_back(std::move(n));
  }
  return from_terms(std::move(out));
}

Rational MPoly::evaluate_all(std::span<const Rational> values) const {
  Rational s = 0;
  std::vector<std::vector<Rational>> pw(kMaxVars);
  for (const auto& t : terms_) {
    Rational m = t.coeff;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (t.exp[v] == 0) continue;
      if (v >= values.size()) throw Error(ErrorCode::UnknownVariable, "evaluation point too short");
      auto& vp = pw[v];
      if (vp.empty()) vp.push_back(Rational(1));
      while (vp.size() <= t.exp[v]) vp.push_back(vp.back() * values[v]);
      m *= vp[t.exp[v]];
    }
    s += m;
  }
  return s;
}

std::optional<std::uint64_t> MPoly::evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t p) const {
  std::uint64_t s = 0;
  for (const auto& t : terms_) {
    std::uint64_t den = mpz_mod_u64(t.coeff.get_den(), p);
    if (den == 0) return std::nullopt;
    std::uint64_t num = mpz_mod_u64(t.coeff.get_num(), p);
    std::uint64_t m = mulmod(num, powmod(den, p - 2, p), p);
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (t.exp[v]) m = mulmod(m, powmod(point[v], t.exp[v], p), p);
    s = (s + m) % p;
  }
  return s;
}

Rational MPoly::content() const {
  if (terms_.empty()) return Rational(1);
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  if (sgn(terms_.front().coeff) < 0) c = -c;
  return c;
}

MPoly MPoly::primitive() const {
  if (terms_.empty()) return *this;
  MPoly r = *this;
  r /= content();
  return r;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  MPoly r = *this;
  r /= Rational(terms_.front().coeff);
  return r;
}

std::vector<std::pair<Exponents, MPoly>> MPoly::coefficients_in(std::uint32_t mask) const {
  std::unordered_map<Exponents, std::vector<Term>, ExponentsHash> groups;
  std::vector<Exponents> order;
  for (const auto& t : terms_) {
    Exponents key, rest = t.exp;
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (mask & (1u << v)) {
        key[v] = t.exp[v];
        rest[v] = 0;
      }
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh) order.push_back(key);
    it->second.push_back({rest, t.coeff});
  }
  std::sort(order.begin(), order.end(), [](const Exponents& a, const Exponents& b) { return grevlex_cmp(a, b) > 0; });
  std::vector<std::pair<Exponents, MPoly>> out;
  out.reserve(order.size());
  for (const auto& k : order) out.emplace_back(k, from_terms(std::move(groups[k])));
  return out;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool mono = !t.exp.is_zero();
    if (!mono || c != 1) {
      os << c.get_str();
      if (mono) os << "*";
    }
    bool firstv = true;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (!t.exp[v]) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << (v < names.size() ? names[v] : "x" + std::to_string(v));
      if (t.exp[v] > 1) os << "^" << t.exp[v];
    }
  }
  return os.str();
}

}  // namespace orealg
