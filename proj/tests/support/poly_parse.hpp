#pragma once

// Minimal infix reader for commutative polynomials used by the tests.
// Accepts integers, variable names, + - * ^, parentheses, and division by
// an integer literal.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "orealg/arith/mpoly.hpp"
#include "orealg/arith/ratfunc.hpp"

namespace testing_support {

class PolyReader {
 public:
  PolyReader(std::string src, std::vector<std::string> names) : s_(std::move(src)), names_(std::move(names)) {}

  orealg::RatFunc read() {
    auto r = expr();
    skip();
    if (i_ != s_.size()) throw std::runtime_error("trailing input in '" + s_ + "'");
    return r;
  }

 private:
  std::string s_;
  std::vector<std::string> names_;
  std::size_t i_ = 0;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  orealg::RatFunc expr() {
    orealg::RatFunc r;
    bool neg = eat('-');
    r = term();
    if (neg) r = -r;
    while (true) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  orealg::RatFunc term() {
    auto r = power();
    while (true) {
      if (eat('*')) r *= power();
      else if (eat('/')) r /= power();
      else return r;
    }
  }
  orealg::RatFunc power() {
    auto b = atom();
    if (eat('^')) {
      skip();
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      b = b.pow(std::stoi(s_.substr(st, i_ - st)));
    }
    return b;
  }
  orealg::RatFunc atom() {
    skip();
    if (eat('(')) {
      auto r = expr();
      if (!eat(')')) throw std::runtime_error("missing )");
      return r;
    }
    if (eat('-')) return -atom();
    std::size_t st = i_;
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return orealg::RatFunc(orealg::Rational(orealg::Integer(s_.substr(st, i_ - st))));
    }
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    std::string name = s_.substr(st, i_ - st);
    for (std::size_t v = 0; v < names_.size(); ++v)
      if (names_[v] == name) return orealg::RatFunc::variable(v);
    throw std::runtime_error("unknown name '" + name + "'");
  }
};

inline orealg::RatFunc rf(const std::string& s, const std::vector<std::string>& names) {
  return PolyReader(s, names).read();
}

inline orealg::MPoly poly(const std::string& s, const std::vector<std::string>& names) {
  auto r = rf(s, names);
  if (!r.is_polynomial()) throw std::runtime_error("not a polynomial: " + s);
  return r.num();
}

}  // namespace testing_support
