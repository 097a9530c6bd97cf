#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mag {

// Expression-level failure with a 0-based byte offset into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t offset)
      : std::runtime_error(std::move(msg)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownIdentifier : public ParseError {
 public:
  using ParseError::ParseError;
};

// Evaluation outside the domain of log/sqrt/^/division; carries the byte
// offset of the offending sub-expression.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string msg, std::size_t offset)
      : std::runtime_error(std::move(msg)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class SingularMetric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateTetrad : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularJacobian : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotStationary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AxisCrossing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mag
