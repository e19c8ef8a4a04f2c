// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VBRAID_ERROR_HPP_
#define VBRAID_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vbraid {

  /// Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Malformed token text; `position()` is the 0-based character offset.
  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::size_t position)
        : Error(message), _position(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  /// A generator index outside the range allowed by the strand count.
  class IndexError : public Error {
   public:
    using Error::Error;
  };

  /// A letter whose family does not belong to the alphabet of a group.
  class AlphabetError : public Error {
   public:
    using Error::Error;
  };

  /// A conjugation whose conjugator is not in a strictly lower layer.
  class LayerError : public Error {
   public:
    using Error::Error;
  };

  /// The normal form computation exhausted its step budget or hit a cycle.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  /// A homomorphism check was requested with a backend that cannot decide
  /// triviality in the target group.
  class BackendError : public Error {
   public:
    using Error::Error;
  };

}  // namespace vbraid

#endif  // VBRAID_ERROR_HPP_
