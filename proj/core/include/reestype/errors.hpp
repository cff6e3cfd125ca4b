#ifndef REESTYPE_ERRORS_HPP
#define REESTYPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reestype {

/// Malformed textual input (ring files, polynomial syntax, CLI arguments).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation was called outside its contract (zero divisor where a
/// regular element is required, mismatched ambient rings, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A Groebner computation produced an element above the configured degree
/// cap and was aborted.
class DegreeCapError : public std::runtime_error {
 public:
  explicit DegreeCapError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace reestype

#endif
