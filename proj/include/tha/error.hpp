#ifndef THA_ERROR_HPP
#define THA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tha {

/// Base class for every error the library throws on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input object does not have the structure an operation requires
/// (not a lattice, not distributive, not a congruence, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Malformed formula text. `position` is the 1-based character column.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Malformed frame/algebra/model file. `where` names the offending field.
class FormatError : public Error {
 public:
  FormatError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace tha

#endif
