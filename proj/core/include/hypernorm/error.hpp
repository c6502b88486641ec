#ifndef HYPERNORM_ERROR_HPP_
#define HYPERNORM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hypernorm {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed text or JSON input.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A rational outside [0,1], or a boundary value where (0,1) is required.
  class RangeError : public Error {
   public:
    using Error::Error;
  };

  // Normalising a sub-distribution of total mass zero.
  class ZeroMassError : public Error {
   public:
    ZeroMassError()
        : Error("cannot normalise a sub-distribution of total mass 0") {}
  };

  // A value does not fit the declared sum signature (bad tag, unknown atom,
  // constructor of an uninhabited summand).
  class SignatureError : public Error {
   public:
    using Error::Error;
  };

  // Requested diagram cannot be expressed for the given monad instance.
  class InapplicableLaw : public Error {
   public:
    using Error::Error;
  };

}  // namespace hypernorm

#endif  // HYPERNORM_ERROR_HPP_
