#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orealg {

enum class ErrorCode {
  ZeroPolynomial,
  DivisionByZero,
  UnknownVariable,
  AlgebraMismatch,
  KindMismatch,
  NonlinearAlgebra,
  NotZeroDimensional,
  NotDifferenceDifferential,
  BudgetExhausted,
  NoTelescopableVariable,
  MultipleTelescopingVars,
  AnsatzInsufficient,
  OutOfDomain,
  DenominatorVanishes,
  NonDiscreteAlgebra,
  SyntaxError,
  UnknownName,
  KindError,
  Unsupported,
};

std::string_view to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orealg
