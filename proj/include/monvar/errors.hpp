#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monvar {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed text input (words, identities, files).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // An argument outside the documented domain of an operation.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // A semigroup-kind substitution assigned the empty word to a used letter.
  class KindViolation : public Error {
   public:
    using Error::Error;
  };

  // A Cayley table that is not a monoid.
  class InvalidTable : public Error {
   public:
    using Error::Error;
  };

  // A presentation the normal-form construction cannot handle.
  class UnsupportedPresentation : public Error {
   public:
    using Error::Error;
  };

  // Search or enumeration exceeded a configured resource cap.
  class ResourceLimit : public Error {
   public:
    using Error::Error;
  };

  // Enumeration of a presentation produced more normal forms than allowed.
  class LikelyInfinite : public ResourceLimit {
   public:
    using ResourceLimit::ResourceLimit;
  };

  // A poset that is not a lattice, or a cyclic cover relation.
  class NotALattice : public Error {
   public:
    using Error::Error;
  };

  // A derivation whose step does not reconstruct its source and target.
  class DerivationError : public Error {
   public:
    DerivationError(std::size_t step, std::string const& what)
        : Error("step " + std::to_string(step) + ": " + what), _step(step) {}

    std::size_t step() const noexcept {
      return _step;
    }

   private:
    std::size_t _step;
  };

  // Name not present in the variety catalog.
  class UnknownVariety : public Error {
   public:
    using Error::Error;
  };

}  // namespace monvar
