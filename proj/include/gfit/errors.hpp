#ifndef GFIT_ERRORS_HPP
#define GFIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gfit {

// Base class for all errors raised by the library. `name()` returns a
// stable machine-readable identifier (also used by the CLI on stderr).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& msg)
      : std::runtime_error(msg), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Degenerate or malformed input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// A fitting step could not produce a valid Gaussian.
class FitError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public DataError {
 public:
  explicit InvalidArgument(const std::string& msg)
      : DataError("InvalidArgument", msg) {}
};

class TooFewPoints : public DataError {
 public:
  explicit TooFewPoints(const std::string& msg)
      : DataError("TooFewPoints", msg) {}
};

class NonIncreasingX : public DataError {
 public:
  explicit NonIncreasingX(const std::string& msg)
      : DataError("NonIncreasingX", msg) {}
};

class ParseError : public DataError {
 public:
  explicit ParseError(const std::string& msg) : DataError("ParseError", msg) {}
};

class NonPositivePeak : public DataError {
 public:
  explicit NonPositivePeak(const std::string& msg)
      : DataError("NonPositivePeak", msg) {}
};

class SingularSystem : public FitError {
 public:
  explicit SingularSystem(const std::string& msg)
      : FitError("SingularSystem", msg) {}
};

// The fitted log-domain curvature is non-negative, i.e. noise destroyed
// the concavity that a Gaussian requires. Never repaired silently.
class InvalidCurvature : public FitError {
 public:
  explicit InvalidCurvature(const std::string& msg)
      : FitError("InvalidCurvature", msg) {}
};

}  // namespace gfit

#endif  // GFIT_ERRORS_HPP
