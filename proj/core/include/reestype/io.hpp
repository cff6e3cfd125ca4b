#ifndef REESTYPE_IO_HPP
#define REESTYPE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "reestype/quotient.hpp"

namespace reestype {

/// Parsed ring definition file:
///   char 32003
///   vars x,y,z,w
///   rel w^2
///   rel w*z
/// Blank lines and lines starting with '#' are ignored.
struct RingFile {
  std::uint32_t characteristic = kDefaultPrime;
  std::vector<std::string> vars;
  std::vector<std::string> relations;  // textual generators of the defining ideal

  static RingFile parse(std::istream& in);
  static RingFile load(const std::string& path);

  QuotientRing build(std::uint32_t degree_cap = kDefaultDegreeCap) const;
  std::string canonical_text() const;
};

}  // namespace reestype

#endif
