#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monoconj {

enum class ErrorKind {
  InvalidInput,
  NotCoprime,
  NotPlane,
  NotRepresentable,
  NotDivisible,
  IllFormed,
  HypothesisViolated,
  NotPolynomial,
  BudgetExceeded,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

// Throws InternalInconsistency when cond is false.
void ensure(bool cond, const std::string& what);

}  // namespace monoconj
