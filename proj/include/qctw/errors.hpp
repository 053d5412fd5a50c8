#ifndef QCTW_ERRORS_HPP
#define QCTW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qctw {

// Thrown when an exhaustive codeword enumeration would exceed the guard.
class GuardExceeded : public std::runtime_error {
  public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the builders when the constructed code fails its post-build
// verification (measured parameters differ from the predicted ones).
class VerificationError : public std::runtime_error {
  public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qctw

#endif
