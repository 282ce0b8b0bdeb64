#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hooklab {

/// Input outside an operation's domain (empty tree, wrong arity, n = 0, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed TreeCode or JSON payload. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A sweep would visit more objects than the configured cap allows.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::string estimate, std::uint64_t cap)
      : std::runtime_error(what + ": estimated " + estimate +
                           " objects exceeds guard cap " + std::to_string(cap)),
        estimate_(std::move(estimate)),
        cap_(cap) {}

  const std::string& estimate() const noexcept { return estimate_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::string estimate_;
  std::uint64_t cap_;
};

/// Internal invariant broken. Reaching this is a bug in the library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hooklab
