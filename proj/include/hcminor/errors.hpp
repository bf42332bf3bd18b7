#ifndef HCMINOR_ERRORS_HPP
#define HCMINOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hcminor {

// Base of all recoverable errors raised by the library. The CLI maps these
// to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class RetryExhaustedError : public Error {
 public:
  using Error::Error;
};

// Requested host dimension is too small for the guest.
class InfeasibleError : public Error {
 public:
  InfeasibleError(int requested, int minimal)
      : Error("infeasible host dimension d=" + std::to_string(requested) +
              "; minimal feasible d=" + std::to_string(minimal)),
        requested_(requested),
        minimal_(minimal) {}

  int requested() const { return requested_; }
  int minimal_d() const { return minimal_; }

 private:
  int requested_;
  int minimal_;
};

// Broken internal invariant. Never expected on valid input.
class AssertionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const char* what) {
  if (!condition) throw AssertionError(what);
}

}  // namespace hcminor

#endif  // HCMINOR_ERRORS_HPP
