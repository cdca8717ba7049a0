#pragma once

#include <stdexcept>
#include <string>

namespace akmove {

enum class ErrorKind {
  Syntax,    // malformed diagram text or site file
  Validity,  // well-formed input that is not a valid diagram
  Site,      // move site does not match the expected pattern
  Argument,  // out-of-range index, unsupported diagram kind
  Budget,    // resource limit exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind);

}  // namespace akmove
