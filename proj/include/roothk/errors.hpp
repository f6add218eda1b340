#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace roothk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid (family, rank) pair or malformed selector.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularGram : public Error {
 public:
  using Error::Error;
};

/// Raised when an exhaustive enumeration would exceed the configured cap.
class GroupTooLarge : public Error {
 public:
  GroupTooLarge(std::uint64_t predicted, std::uint64_t cap)
      : Error("group order " + std::to_string(predicted) + " exceeds cap " +
              std::to_string(cap)),
        predicted_(predicted),
        cap_(cap) {}
  std::uint64_t predicted() const { return predicted_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t predicted_;
  std::uint64_t cap_;
};

class DiscriminantTooLarge : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a construction bug.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace roothk
