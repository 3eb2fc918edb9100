#ifndef FAIRDIM_ERROR_HPP
#define FAIRDIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fairdim {

// Base of every error the library raises.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch or an argument outside an operation's domain.
class DimensionError : public Error {
public:
  using Error::Error;
};

// Non-finite values, broken orthonormality, failed convergence.
class NumericError : public Error {
public:
  using Error::Error;
};

// Problems with input files: missing, malformed, wrong schema.
class DataError : public Error {
public:
  using Error::Error;
};

}  // namespace fairdim

#endif
