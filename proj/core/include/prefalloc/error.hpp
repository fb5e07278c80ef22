#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace prefalloc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position()` is a JSON pointer ("/agents/1/arcs/0"),
/// a byte offset ("byte 17") or a line reference ("line 4"), whichever the
/// format offers.
class ParseError : public Error {
 public:
  ParseError(std::string position, const std::string& message);

  const std::string& position() const noexcept { return position_; }

 private:
  std::string position_;
};

/// A precondition of an operation does not hold (unknown item, wrong graph
/// class, invalid source witness, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

struct Violation {
  enum class Kind { Overlap, IrrelevantItem, UnknownItem, UnknownAgent };

  Kind kind;
  std::string agent;
  std::string item;

  std::string message() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// An exhaustive routine refused to run because the instance exceeds its
/// configured size limit.
class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& message, unsigned long long size, unsigned long long limit);

  unsigned long long size() const noexcept { return size_; }
  unsigned long long limit() const noexcept { return limit_; }

 private:
  unsigned long long size_;
  unsigned long long limit_;
};

/// Requested algorithm/objective combination is not applicable.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace prefalloc
