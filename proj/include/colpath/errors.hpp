#pragma once

#include <stdexcept>
#include <string>

namespace colpath {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6 record that cannot be decoded (bad length, byte outside 63..126).
class MalformedGraph6Error : public Error {
 public:
  using Error::Error;
};

// Vertex count above the compiled-in cap.
class GraphTooLargeError : public Error {
 public:
  using Error::Error;
};

// A colouring whose length does not match the graph it is paired with.
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

// Exact-colouring search ran out of its node budget.
class SearchBudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Partition or path enumeration hit its configured limit.
class EnumerationLimitExceededError : public Error {
 public:
  using Error::Error;
};

// An operation that requires a proper colouring was given an improper one.
class ImproperColouringError : public Error {
 public:
  using Error::Error;
};

// Label subset passed to decreasing-path extraction is not within
// {1, ..., alpha(v) - 1}.
class InvalidLabelSubsetError : public Error {
 public:
  using Error::Error;
};

// A decreasing-path witness that the greedy labelling guarantees was not
// found.  Signals a corrupted labelling, never expected for genuine
// refined-greedy output.
class WitnessMissingError : public Error {
 public:
  using Error::Error;
};

// Vertex sequence handed to a path operation is not a path.
class NotAPathError : public Error {
 public:
  using Error::Error;
};

// A stated precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Brute-force oracle refused an input beyond its size guard.
class GraphTooLargeForOracleError : public Error {
 public:
  using Error::Error;
};

// Checkpoint file failed version or digest validation.
class CorruptCheckpointError : public Error {
 public:
  using Error::Error;
};

}  // namespace colpath
