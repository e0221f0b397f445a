#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group-spec atom or constructor argument violates a family constraint
/// (for example "M2 requires n1 >= 2").
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured order bound.
class SizeLimitExceeded : public Error {
 public:
  SizeLimitExceeded(std::size_t requested, std::size_t bound)
      : Error("group order " + std::to_string(requested) +
              " exceeds the configured bound " + std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}

  std::size_t requested() const { return requested_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t requested_;
  std::size_t bound_;
};

/// Group-spec text could not be parsed. `position()` is a 0-based offset
/// into the original text.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called with inputs outside its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A theorem classifier was applied to a group outside its hypotheses.
class WrongClassifier : public Error {
 public:
  using Error::Error;
};

/// A multiplication table or permutation list does not describe a group.
class InvalidGroup : public Error {
 public:
  using Error::Error;
};

}  // namespace pcl
