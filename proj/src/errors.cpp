#include "rankfuse/errors.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace rankfuse {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateObject: return "DuplicateObject";
    case ErrorCode::EmptyRanking: return "EmptyRanking";
    case ErrorCode::InvalidObjectId: return "InvalidObjectId";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::ZeroTotalWeight: return "ZeroTotalWeight";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::UnsortedPoints: return "UnsortedPoints";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::EmptyItem: return "EmptyItem";
    case ErrorCode::UnknownItem: return "UnknownItem";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::MissingWeight: return "MissingWeight";
    case ErrorCode::MissingPrediction: return "MissingPrediction";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_code(ErrorCode code) noexcept {
  return 10 + static_cast<int>(code);
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

namespace {

std::mutex& handler_mutex() {
  static std::mutex m;
  return m;
}

WarningHandler& handler_slot() {
  static WarningHandler h = [](std::string_view msg) {
    std::cerr << "warning: " << msg << '\n';
  };
  return h;
}

}  // namespace

void warn(std::string_view message) {
  std::lock_guard lock(handler_mutex());
  if (handler_slot()) handler_slot()(message);
}

WarningHandler set_warning_handler(WarningHandler handler) {
  std::lock_guard lock(handler_mutex());
  return std::exchange(handler_slot(), std::move(handler));
}

}  // namespace rankfuse
