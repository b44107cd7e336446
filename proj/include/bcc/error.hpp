#pragma once

#include <stdexcept>
#include <string>

namespace bcc {

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  WeightOutOfRange,
  Disconnected,
  KTooLarge,
  MessageTooLarge,
  RoundLimitExceeded,
  MalformedBits,
  EmptySetInFamily,
  InvalidParameter,
  IndexOutOfRange,
  InvalidDensity,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bcc
