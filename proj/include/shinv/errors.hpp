#pragma once

#include <stdexcept>
#include <string>

namespace shinv {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- sample tables / distributions ---

class EmptyTableError : public Error {
 public:
  using Error::Error;
};

class MissingTargetColumnError : public Error {
 public:
  using Error::Error;
};

class EmptyVariableSetError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// --- information measures / invariants ---

class OverlappingSubsetsError : public Error {
 public:
  using Error::Error;
};

// Raised when I(X;Y) is below the ill-defined threshold and a ratio
// invariant (r-bar, v-bar) is requested.
class IllDefinedInvariantError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeInputError : public Error {
 public:
  using Error::Error;
};

// --- lattice / oracle ---

class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

class MismatchedSourceCountError : public Error {
 public:
  using Error::Error;
};

class ZeroProbabilityTargetError : public Error {
 public:
  using Error::Error;
};

// --- quantizer ---

class InvalidDrawError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

// --- file ingestion ---

// Parse failures carry the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace shinv
