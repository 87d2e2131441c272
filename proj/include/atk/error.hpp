// Error type shared by every atk module.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atk {

enum class ErrorCode {
  Parse,
  InvalidPresentation,
  NotSpherical,
  NotIrreducible,
  XNotProper,
  XNotConnected,
  UnsupportedType,
  LatticeBudgetExceeded,
  ClosureBudgetExceeded,
  RankBudgetExceeded,
  EnumerationBudgetExceeded,
  NotARibbon,
  NotInNormalizer,
  NotApplicable,
  ReductionNotApplicable,
  BudgetExceeded,
  Internal,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::XNotProper: return "XNotProper";
    case ErrorCode::XNotConnected: return "XNotConnected";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::LatticeBudgetExceeded: return "LatticeBudgetExceeded";
    case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorCode::RankBudgetExceeded: return "RankBudgetExceeded";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::NotARibbon: return "NotARibbon";
    case ErrorCode::NotInNormalizer: return "NotInNormalizer";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ReductionNotApplicable: return "ReductionNotApplicable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace atk
