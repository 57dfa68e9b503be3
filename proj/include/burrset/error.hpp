#pragma once

#include <stdexcept>
#include <string>

namespace burr {

enum class ErrorCode {
  Usage = 1,
  Resource = 2,
  InfeasibleBase = 3,
  UnsupportedB1 = 4,
  OutOfRange = 5,
  Internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed request: violated precondition on caller-supplied values.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCode::Usage, what) {}
};

// Capacity request above the configured memory ceiling.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorCode::Resource, what) {}
};

class InfeasibleBaseError : public Error {
 public:
  explicit InfeasibleBaseError(const std::string& what)
      : Error(ErrorCode::InfeasibleBase, what) {}
};

class UnsupportedB1Error : public Error {
 public:
  explicit UnsupportedB1Error(const std::string& what)
      : Error(ErrorCode::UnsupportedB1, what) {}
};

class OutOfRangeError : public Error {
 public:
  explicit OutOfRangeError(const std::string& what)
      : Error(ErrorCode::OutOfRange, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorCode::Internal, what) {}
};

}  // namespace burr
