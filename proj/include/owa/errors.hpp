#ifndef OWA_ERRORS_HPP
#define OWA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace owa {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Mismatched vector/matrix dimensions.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An argument is outside its documented range.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// A solution does not belong to the feasible set of its instance.
class FeasibilityError : public Error {
public:
  using Error::Error;
};

/// The instance has no feasible solution.
class InfeasibleError : public Error {
public:
  using Error::Error;
};

/// The feasible set is larger than the enumeration limit.
class EnumerationLimitError : public Error {
public:
  using Error::Error;
};

/// The requested operation is not supported for this problem kind.
class CapabilityError : public Error {
public:
  using Error::Error;
};

/// A dynamic program or subproblem family exceeded its size budget.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace owa

#endif
