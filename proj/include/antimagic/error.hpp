#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antimagic {

enum class ErrorKind {
  InvalidOrder,
  InvalidSpec,
  UnsupportedStep,
  InvalidPlan,
  LoopCreated,
  ParityViolation,
  OutOfRange,
  InvalidLabeling,
  Precondition,
  NotApplicable,
  OverBudget,
  Disconnected,
  InvalidInput,
  ConstructionFailure,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::UnsupportedStep: return "unsupported-step";
    case ErrorKind::InvalidPlan: return "invalid-plan";
    case ErrorKind::LoopCreated: return "loop";
    case ErrorKind::ParityViolation: return "parity-violation";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::InvalidLabeling: return "invalid-labeling";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::OverBudget: return "over-budget";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::ConstructionFailure: return "construction-failure";
  }
  return "error";
}

}  // namespace antimagic
