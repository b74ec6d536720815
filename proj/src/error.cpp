#include "orealg/error.hpp"

namespace orealg {

std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NonlinearAlgebra: return "NonlinearAlgebra";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::NotDifferenceDifferential: return "NotDifferenceDifferential";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NoTelescopableVariable: return "NoTelescopableVariable";
    case ErrorCode::MultipleTelescopingVars: return "MultipleTelescopingVars";
    case ErrorCode::AnsatzInsufficient: return "AnsatzInsufficient";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::NonDiscreteAlgebra: return "NonDiscreteAlgebra";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::KindError: return "KindError";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Error";
}

}  // namespace orealg
