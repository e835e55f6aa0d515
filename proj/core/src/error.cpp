#include "monoconj/error.hpp"

namespace monoconj {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotPlane: return "NotPlane";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::IllFormed: return "IllFormed";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InternalInconsistency, what);
}

}  // namespace monoconj
