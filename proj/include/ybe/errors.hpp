#ifndef YBE_ERRORS_HPP
#define YBE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ybe {

  // Base of every recoverable error raised by the library. Contract
  // violations (bad indices passed to apply and friends) are not errors of
  // this kind; they are checked with assert only.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: size mismatches, bad table entries, bad files.
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  class InvalidParameter : public Error {
   public:
    using Error::Error;
  };

  class NotACongruence : public Error {
   public:
    using Error::Error;
  };

  class NotASolution : public Error {
   public:
    using Error::Error;
  };

  // A computation would exceed a resource bound (carrier size for
  // exhaustive routines).
  class CarrierTooLarge : public Error {
   public:
    CarrierTooLarge(std::size_t n, std::size_t cap)
        : Error("carrier of size " + std::to_string(n)
                + " exceeds the bound " + std::to_string(cap)),
          size(n),
          bound(cap) {}
    std::size_t size;
    std::size_t bound;
  };

  class CapExceeded : public Error {
   public:
    explicit CapExceeded(std::size_t cap)
        : Error("transformation monoid exceeds the cap of "
                + std::to_string(cap) + " elements"),
          cap(cap) {}
    std::size_t cap;
  };

  // Raised when an internal postcondition fails. Never expected to fire.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace ybe

#endif  // YBE_ERRORS_HPP
