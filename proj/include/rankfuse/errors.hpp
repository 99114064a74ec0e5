#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rankfuse {

/// Failure categories shared by every module. The CLI maps each one to a
/// distinct process exit status (see exit_code()).
enum class ErrorCode {
  DuplicateObject,
  EmptyRanking,
  InvalidObjectId,
  UniverseMismatch,
  ZeroTotalWeight,
  InvalidWeight,
  PositionOutOfRange,
  EmptyInput,
  NoConvergence,
  UnsortedPoints,
  TooFewPoints,
  InvalidConfig,
  EmptyItem,
  UnknownItem,
  DuplicateLabel,
  InvalidLabel,
  MissingWeight,
  MissingPrediction,
  ParseError,
  LengthMismatch,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Process exit status for an error category; always in [10, 64).
int exit_code(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

// Non-fatal diagnostics (zero weights, ignored weights, ...). The default
// handler writes to stderr; tests and the CLI may install their own.
using WarningHandler = std::function<void(std::string_view)>;

void warn(std::string_view message);
WarningHandler set_warning_handler(WarningHandler handler);

}  // namespace rankfuse
