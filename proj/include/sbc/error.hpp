#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbc {

enum class ErrorCode {
  InvalidArgument,
  LengthMismatch,
  AlphabetMismatch,
  WordTooShort,
  TableTooLarge,
  SyntaxError,
  IncompleteTable,
  DuplicateRule,
  SymbolOutOfRange,
  DepthTooSmall,
  PreconditionUnverified,
  SpaceTooLarge,
  ContradictoryConstraints,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure in the library is reported with this type.
// Parse errors carry the 1-based line they were detected on (0 = none).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace sbc
