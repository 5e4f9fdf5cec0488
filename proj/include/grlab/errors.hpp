#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grlab {

// Process exit codes double as machine-readable error codes.
enum class ErrorCode : int {
  InternalInconsistency = 1,
  Parse = 2,
  InvalidInput = 3,
  ResourceCap = 4,
  CorpusMismatch = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }
  const char* code_name() const noexcept;

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::Parse, message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  explicit ParseError(const std::string& message) : Error(ErrorCode::Parse, message) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_ = 0;
};

class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& message)
      : Error(ErrorCode::InvalidInput, message) {}
};

class ResourceCapError : public Error {
 public:
  explicit ResourceCapError(const std::string& message)
      : Error(ErrorCode::ResourceCap, message) {}
};

class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& message)
      : Error(ErrorCode::InternalInconsistency, message) {}
};

// Arithmetic misuse (inverting zero). Reported as invalid input when it
// escapes to the command line, e.g. "1/7" read over GF(7).
class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error(ErrorCode::InvalidInput, "division by zero") {}
};

inline const char* Error::code_name() const noexcept {
  switch (code_) {
    case ErrorCode::InternalInconsistency: return "internal_inconsistency";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::ResourceCap: return "resource_cap";
    case ErrorCode::CorpusMismatch: return "corpus_mismatch";
  }
  return "unknown";
}

}  // namespace grlab
