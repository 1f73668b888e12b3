#include "qwalk/error.hpp"

#include <sstream>

namespace qwalk {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kUnsupportedOperation: return "unsupported-operation";
    case ErrorKind::kNotReached: return "not-reached";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kIo: return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {
std::string not_reached_message(double threshold, double max_arrival) {
  std::ostringstream os;
  os << "arrival never reached " << threshold << " (max " << max_arrival << ")";
  return os.str();
}
}  // namespace

NotReachedError::NotReachedError(double threshold, double max_arrival)
    : Error(ErrorKind::kNotReached, not_reached_message(threshold, max_arrival)),
      max_arrival_(max_arrival) {}

void throw_invalid(const std::string& message) {
  throw Error(ErrorKind::kInvalidParameter, message);
}

}  // namespace qwalk
