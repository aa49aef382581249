#ifndef LINKPARITY_ERRORS_HPP
#define LINKPARITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linkparity {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or vector shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the arguments was violated.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (rationals, subsets, point-set files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The input is not in general position. `detail` names the offending
/// subset when one is known.
class DegeneracyError : public Error {
 public:
  DegeneracyError(const std::string& what, std::string detail = {})
      : Error(what), detail_(std::move(detail)) {}
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
};

/// Rejection sampling ran out of attempts.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// A checked identity failed. `dump` is a machine-readable JSON document
/// describing the counterexample.
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, std::string dump)
      : Error(what), dump_(std::move(dump)) {}
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

}  // namespace linkparity

#endif  // LINKPARITY_ERRORS_HPP
