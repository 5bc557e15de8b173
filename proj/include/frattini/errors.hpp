#pragma once

#include <stdexcept>
#include <string>

namespace frattini {

/// Base class for all validation and construction failures in this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The reflexive-transitive closure of the covers violates antisymmetry.
struct CycleDetected : Error {
  using Error::Error;
};

/// No element lies above every other element.
struct NoMaximum : Error {
  using Error::Error;
};

/// A cover or query names an element that was never declared.
struct UnknownElement : Error {
  using Error::Error;
};

/// An element identifier occurs more than once in a declaration list.
struct DuplicateElement : Error {
  using Error::Error;
};

/// A cover pair relates an element to itself.
struct SelfCover : Error {
  using Error::Error;
};

/// A relation handed to the library is not a partial order.
struct OrderViolation : Error {
  using Error::Error;
};

/// A subset is not pairwise comparable (or is empty) where a chain is required.
struct NotAChain : Error {
  using Error::Error;
};

/// An enumeration would exceed its configured cap; never truncated silently.
struct SizeCapExceeded : Error {
  using Error::Error;
};

/// The meet of the empty family was requested; callers must handle that case.
struct EmptyMeetRequest : Error {
  using Error::Error;
};

/// A fresh identifier collides with an existing element.
struct NameClash : Error {
  using Error::Error;
};

/// Moore-family ground set above the configured powerset cap.
struct GroundTooLarge : Error {
  using Error::Error;
};

/// Group order above the exhaustive-enumeration cap.
struct OrderTooLarge : Error {
  using Error::Error;
};

/// A Cayley table fails the group axioms.
struct InvalidGroup : Error {
  using Error::Error;
};

/// A randomized builder exhausted its retry budget.
struct GenerationFailed : Error {
  using Error::Error;
};

/// Malformed input document; carries a 1-based line where known.
struct ParseError : Error {
  explicit ParseError(const std::string& what, long line = -1)
      : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace frattini
