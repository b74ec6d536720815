#include <map>
#include <mutex>

#include "orealg/error.hpp"
#include "orealg/verify/verify.hpp"

namespace orealg {

struct SequenceOracle::Memo {
  std::mutex mutex;
  std::map<Index, Rational> table;
};

SequenceOracle::SequenceOracle(std::string name, std::size_t arity, Rule rule, Predicate support, Predicate domain)
    : name_(std::move(name)),
      arity_(arity),
      rule_(std::move(rule)),
      support_(std::move(support)),
      domain_(std::move(domain)),
      memo_(std::make_shared<Memo>()) {}

void SequenceOracle::check(const Index& i) const {
  if (i.size() != arity_)
    throw Error(ErrorCode::OutOfDomain, name_ + " takes " + std::to_string(arity_) + " indices, got " +
                                            std::to_string(i.size()));
  if (!in_domain(i)) {
    std::string s;
    for (long v : i) s += (s.empty() ? "" : ",") + std::to_string(v);
    throw Error(ErrorCode::OutOfDomain, name_ + "(" + s + ") is undefined");
  }
}

Rational SequenceOracle::eval(const Index& i) const {
  if (i.size() == arity_ && !in_support(i)) return Rational(0);
  check(i);
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->table.find(i); it != memo_->table.end()) return it->second;
  }
  Rational v = rule_(i, [this](const Index& j) { return eval(j); });
  std::lock_guard lock(memo_->mutex);
  return memo_->table.emplace(i, std::move(v)).first->second;
}

Rational SequenceOracle::eval_uncached(const Index& i) const {
  if (i.size() == arity_ && !in_support(i)) return Rational(0);
  check(i);
  return rule_(i, [this](const Index& j) { return eval_uncached(j); });
}

std::size_t SequenceOracle::memo_size() const {
  std::lock_guard lock(memo_->mutex);
  return memo_->table.size();
}

namespace {

bool triangle(const Index& i) { return i[0] >= 0 && i[1] >= 0 && i[1] <= i[0]; }
bool nonnegative(const Index& i) { return i[0] >= 0; }

}  // namespace

OraclePtr binomial_oracle() {
  static const OraclePtr o = std::make_shared<SequenceOracle>(
      "binomial", 2,
      [](const Index& i, const SequenceOracle::Recurse& f) -> Rational {
        if (i[0] == 0) return 1;
        return f({i[0] - 1, i[1] - 1}) + f({i[0] - 1, i[1]});
      },
      triangle);
  return o;
}

OraclePtr stirling2_oracle() {
  static const OraclePtr o = std::make_shared<SequenceOracle>(
      "stirling2", 2,
      [](const Index& i, const SequenceOracle::Recurse& f) -> Rational {
        if (i[0] == 0) return i[1] == 0 ? 1 : 0;
        return f({i[0] - 1, i[1] - 1}) + Rational(i[1]) * f({i[0] - 1, i[1]});
      },
      triangle);
  return o;
}

OraclePtr eulerian_oracle() {
  static const OraclePtr o = std::make_shared<SequenceOracle>(
      "eulerian", 2,
      [](const Index& i, const SequenceOracle::Recurse& f) -> Rational {
        const long n = i[0], m = i[1];
        if (n == 0) return m == 0 ? 1 : 0;
        return Rational(m + 1) * f({n - 1, m}) + Rational(n - m) * f({n - 1, m - 1});
      },
      triangle);
  return o;
}

OraclePtr bernoulli_oracle() {
  static const OraclePtr o = std::make_shared<SequenceOracle>(
      "bernoulli", 1,
      [](const Index& i, const SequenceOracle::Recurse& f) -> Rational {
        // sum_{j <= n} C(n+1, j) B_j = 0 for n >= 1.
        const long n = i[0];
        if (n == 0) return 1;
        Rational s = 0;
        for (long j = 0; j < n; ++j) s += binomial_oracle()->eval({n + 1, j}) * f({j});
        return -s / Rational(n + 1);
      },
      SequenceOracle::Predicate{}, nonnegative);
  return o;
}

OraclePtr factorial_oracle() {
  static const OraclePtr o = std::make_shared<SequenceOracle>(
      "factorial", 1,
      [](const Index& i, const SequenceOracle::Recurse& f) -> Rational {
        return i[0] == 0 ? Rational(1) : Rational(i[0]) * f({i[0] - 1});
      },
      SequenceOracle::Predicate{}, nonnegative);
  return o;
}

OraclePtr builtin_oracle(const std::string& name) {
  if (name == "binomial") return binomial_oracle();
  if (name == "stirling2") return stirling2_oracle();
  if (name == "eulerian") return eulerian_oracle();
  if (name == "bernoulli") return bernoulli_oracle();
  if (name == "factorial") return factorial_oracle();
  return nullptr;
}

OraclePtr make_oracle(std::string name, std::size_t arity, std::function<Rational(const Index&)> fn,
                      SequenceOracle::Predicate support) {
  return std::make_shared<SequenceOracle>(
      std::move(name), arity, [fn = std::move(fn)](const Index& i, const SequenceOracle::Recurse&) { return fn(i); },
      std::move(support));
}

}  // namespace orealg
