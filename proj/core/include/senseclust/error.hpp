#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace senseclust {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (corpus line, graph file, SERP, gold file).
/// `line()` is 1-based; 0 means the position is unknown.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

/// Average degree <= 1 makes log(N)/log(A_D) meaningless.
class UndefinedBaselineError : public Error {
 public:
  using Error::Error;
};

/// Query graph has no edges: the corpus cannot support the query.
class EmptyQueryGraphError : public Error {
 public:
  using Error::Error;
};

class EmptyInventoryError : public Error {
 public:
  using Error::Error;
};

/// Query graph too sparse for any vertex to qualify as a hub.
class NoHubsError : public Error {
 public:
  using Error::Error;
};

class MissingGoldError : public Error {
 public:
  using Error::Error;
};

}  // namespace senseclust
