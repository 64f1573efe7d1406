#pragma once

#include <stdexcept>
#include <string>

namespace hidden_ties {

// Error classes map 1:1 onto CLI exit codes.
enum class ErrorClass {
  Usage = 1,     // bad arguments / unknown names
  Input = 2,     // malformed or semantically invalid input data
  Internal = 3,  // broken invariant; never expected on valid inputs
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& message)
      : std::runtime_error(message), cls_(cls) {}

  ErrorClass error_class() const noexcept { return cls_; }

 private:
  ErrorClass cls_;
};

inline Error usage_error(const std::string& message) {
  return Error(ErrorClass::Usage, message);
}

inline Error input_error(const std::string& message) {
  return Error(ErrorClass::Input, message);
}

inline Error internal_error(const std::string& message) {
  return Error(ErrorClass::Internal, message);
}

// CLI exit code for a caught exception: Error carries its class, anything
// else counts as an internal failure (exit 3).
inline int exit_code_for(const std::exception& e) {
  if (const auto* error = dynamic_cast<const Error*>(&e))
    return static_cast<int>(error->error_class());
  return static_cast<int>(ErrorClass::Internal);
}

}  // namespace hidden_ties
