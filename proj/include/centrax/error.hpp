#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "centrax/types.hpp"

namespace centrax {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: bad tables, mismatched signatures, bad files.
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // A configured size cap would be exceeded.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  // An operation was called outside its precondition (invalid system,
  // non-central argument, pair not in the congruence, failed premise).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A map failed to be a homomorphism; carries the violating symbol and tuple.
  class HomomorphismError : public ValidationError {
   public:
    HomomorphismError(std::string const&        what,
                      std::string               symbol,
                      Tuple tuple)
        : ValidationError(what),
          _symbol(std::move(symbol)),
          _tuple(std::move(tuple)) {}

    std::string const& symbol() const noexcept {
      return _symbol;
    }
    Tuple const& tuple() const noexcept {
      return _tuple;
    }

   private:
    std::string               _symbol;
    Tuple _tuple;
  };

}  // namespace centrax
