#pragma once

#include <stdexcept>
#include <string>

namespace graphon_cpd {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter violates a precondition.
class parameter_error : public error {
 public:
  using error::error;
};

/// Matrix or sequence dimensions do not agree.
class dimension_error : public parameter_error {
 public:
  using parameter_error::parameter_error;
};

/// An index (time or node) is outside its valid range.
class range_error : public parameter_error {
 public:
  using parameter_error::parameter_error;
};

/// Malformed or inconsistent input data.
class data_error : public error {
 public:
  using error::error;
};

/// Numerical routine failure (e.g. eigendecomposition did not converge).
class numeric_error : public error {
 public:
  using error::error;
};

}  // namespace graphon_cpd
