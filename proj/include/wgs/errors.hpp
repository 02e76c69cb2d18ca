#ifndef WGS_ERRORS_HPP_
#define WGS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wgs {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Operand dimensions do not match.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// An index lies outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A parameter violates the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A document or value violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed input text; byte_offset points at the first offending byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t byte_offset)
      : Error(message), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

}  // namespace wgs

#endif  // WGS_ERRORS_HPP_
