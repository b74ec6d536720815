#include "orealg/arith/ratfunc.hpp"

#include "orealg/arith/gcd.hpp"
#include "orealg/error.hpp"

namespace orealg {

RatFunc::RatFunc(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    MPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *MPoly::divexact(num_, g);
      den_ = *MPoly::divexact(den_, g);
    }
  }
  normalize_unit();
}

void RatFunc::normalize_unit() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  Rational lc = den_.lead_coeff();
  if (lc != 1) {
    num_ /= lc;
    den_ /= lc;
  }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  RatFunc r(den_, num_, Reduced{});
  r.normalize_unit();
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Reduced{});
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, RatFunc::Reduced{});
  if (b.den_.is_one()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, RatFunc::Reduced{});
  MPoly g = poly_gcd(a.den_, b.den_);
  if (g.is_one()) {
    RatFunc r(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Reduced{});
    r.normalize_unit();
    return r;
  }
  MPoly ad = *MPoly::divexact(a.den_, g);
  MPoly bd = *MPoly::divexact(b.den_, g);
  MPoly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return RatFunc();
  // Only factors of g can cancel.
  MPoly h = poly_gcd(num, g);
  if (!h.is_one()) {
    num = *MPoly::divexact(num, h);
    g = *MPoly::divexact(g, h);
  }
  RatFunc r(std::move(num), ad * bd * g, RatFunc::Reduced{});
  r.normalize_unit();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, MPoly(1), RatFunc::Reduced{});
  MPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_one() && !an.is_constant()) {
    MPoly g = poly_gcd(an, bd);
    if (!g.is_one()) {
      an = *MPoly::divexact(an, g);
      bd = *MPoly::divexact(bd, g);
    }
  }
  if (!ad.is_one() && !bn.is_constant()) {
    MPoly g = poly_gcd(bn, ad);
    if (!g.is_one()) {
      bn = *MPoly::divexact(bn, g);
      ad = *MPoly::divexact(ad, g);
    }
  }
  RatFunc r(an * bn, ad * bd, RatFunc::Reduced{});
  r.normalize_unit();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Reduced{});
  r.normalize_unit();
  return r;
}

RatFunc RatFunc::derivative(std::size_t var) const {
  if (den_.is_one()) return RatFunc(num_.derivative(var));
  // (n/d)' = (n'd - nd')/d^2
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

namespace {

/// p(image_num / image_den) * image_den^deg as a polynomial.
MPoly homogenized(const MPoly& p, std::size_t var, const MPoly& in, const MPoly& id, unsigned deg) {
  std::vector<MPoly> npow{MPoly(1)}, dpow{MPoly(1)};
  for (unsigned i = 1; i <= deg; ++i) {
    npow.push_back(npow.back() * in);
    dpow.push_back(dpow.back() * id);
  }
  MPoly out;
  for (const auto& [e, c] : p.coefficients_in(1u << var)) out += c * npow[e[var]] * dpow[deg - e[var]];
  return out;
}

}  // namespace

RatFunc RatFunc::compose(std::size_t var, const RatFunc& image) const {
  if (image.den_.is_one()) return compose(var, image.num_);
  unsigned d = std::max(num_.degree(var), den_.degree(var));
  return RatFunc(homogenized(num_, var, image.num_, image.den_, d), homogenized(den_, var, image.num_, image.den_, d));
}

RatFunc RatFunc::evaluate(std::size_t var, const Rational& v) const {
  MPoly d = den_.evaluate(var, v);
  if (d.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes at evaluation point");
  return RatFunc(num_.evaluate(var, v), d);
}

RatFunc RatFunc::evaluate(std::uint32_t var_mask, std::span<const Rational> values) const {
  MPoly d = den_.evaluate(var_mask, values);
  if (d.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes at evaluation point");
  return RatFunc(num_.evaluate(var_mask, values), d);
}

Rational RatFunc::evaluate_all(std::span<const Rational> values) const {
  Rational d = den_.evaluate_all(values);
  if (sgn(d) == 0) throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes at evaluation point");
  return num_.evaluate_all(values) / d;
}

std::string RatFunc::to_string(std::span<const std::string> names) const {
  std::string n = num_.to_string(names);
  if (den_.is_one()) return n;
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string(names);
  if (den_.size() > 1 || !den_.lead().exp.is_zero()) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace orealg
