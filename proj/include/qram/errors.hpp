#ifndef QRAM_ERRORS_HPP
#define QRAM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qram {

// Broken precondition or invariant on a library call.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Bad caller-supplied value (empty input, zero count, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration would exceed the configured state cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, double states)
      : std::runtime_error(what), states_(states) {}
  double states() const { return states_; }

 private:
  double states_;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite loss or parameters during training.
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Weight file or JSON document could not be read.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qram

#endif  // QRAM_ERRORS_HPP
