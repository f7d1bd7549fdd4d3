#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bentcay {

// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotBent : public Error {
 public:
  NotBent() : Error("not bent") {}
  explicit NotBent(const std::string& what) : Error(what) {}
};

class NotBentWeight : public Error {
 public:
  explicit NotBentWeight(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NonzeroAtOrigin : public Error {
 public:
  NonzeroAtOrigin() : Error("function is nonzero at the origin") {}
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular over GF(2)") {}
};

class WrongParity : public Error {
 public:
  explicit WrongParity(const std::string& what) : Error(what) {}
};

class MalformedGraph6 : public Error {
 public:
  explicit MalformedGraph6(const std::string& what) : Error("malformed graph6: " + what) {}
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& what) : Error(what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(what) {}
};

class VariableOutOfRange : public Error {
 public:
  explicit VariableOutOfRange(const std::string& what) : Error(what) {}
};

class CountError : public Error {
 public:
  explicit CountError(const std::string& what) : Error(what) {}
};

class MissingArchive : public Error {
 public:
  explicit MissingArchive(const std::string& path) : Error("cannot open archive: " + path) {}
};

// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bentcay
