#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zstab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, JSON documents, CLI arguments).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two operands live in different cohomology rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

/// A class cannot be the Chern character of a sheaf of the declared
/// codimension (nonzero components below the codimension, or a non-positive
/// generalised rank under the chosen polarisation).
class NonEffective : public Error {
 public:
  using Error::Error;
};

/// The stability vector does not satisfy the adaptedness hypothesis
/// required by the lexicographic route.
class NotAdapted : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Sub-object lattice fails structural validation.
class InvalidLattice : public Error {
 public:
  using Error::Error;
};

/// Two inclusion-maximal maximizers of the slope exist.
class NotUnique : public Error {
 public:
  NotUnique(const std::string& what, std::vector<std::string> nodes)
      : Error(what), nodes_(std::move(nodes)) {}
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }

 private:
  std::vector<std::string> nodes_;
};

class NotSemistable : public Error {
 public:
  using Error::Error;
};

/// No interval node yields a stable graded piece.
class NoStablePiece : public Error {
 public:
  using Error::Error;
};

class NoSaturation : public Error {
 public:
  using Error::Error;
};

}  // namespace zstab
