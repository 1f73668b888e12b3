#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

enum class ErrorKind {
  kInvalidParameter,
  kUnsupportedOperation,
  kNotReached,
  kParse,
  kIo,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by n_half when the record never reaches the threshold.
class NotReachedError : public Error {
 public:
  NotReachedError(double threshold, double max_arrival);

  double max_arrival() const noexcept { return max_arrival_; }

 private:
  double max_arrival_;
};

[[noreturn]] void throw_invalid(const std::string& message);

}  // namespace qwalk
