#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cachewright {

enum class ErrorCode {
  NotPrime,
  EvenModulus,
  DivisionByZero,
  SymbolOutOfByteRange,
  ConfigMismatch,
  DemandNotInD,
  LengthMismatch,
  OutOfRange,
  OutsideCharacterizedRegion,
  DegenerateInput,
  OutOfCaseRange,
  IndexOutOfRange,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports carries one of the codes above so the
// CLI can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SymbolOutOfByteRange: return "SymbolOutOfByteRange";
    case ErrorCode::ConfigMismatch: return "ConfigMismatch";
    case ErrorCode::DemandNotInD: return "DemandNotInD";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::OutsideCharacterizedRegion: return "OutsideCharacterizedRegion";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::OutOfCaseRange: return "OutOfCaseRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cachewright
