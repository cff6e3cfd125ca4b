#include "reestype/io.hpp"

#include <fstream>
#include <sstream>

#include "reestype/errors.hpp"

namespace reestype {

namespace {
std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}
}  // namespace

RingFile RingFile::parse(std::istream& in) {
  RingFile rf;
  bool saw_char = false, saw_vars = false;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    rest = trimmed(rest);
    if (key == "char") {
      long long p = -1;
      try {
        p = std::stoll(rest);
      } catch (...) {
        throw ParseError("ring file: bad characteristic '" + rest + "'");
      }
      if (p < 2 || p > 0x7fffffff || !PrimeField::is_prime(static_cast<std::uint32_t>(p))) {
        throw ParseError("ring file: characteristic must be a prime");
      }
      rf.characteristic = static_cast<std::uint32_t>(p);
      saw_char = true;
    } else if (key == "vars") {
      std::string name;
      std::istringstream vs(rest);
      while (std::getline(vs, name, ',')) {
        name = trimmed(name);
        if (!name.empty()) rf.vars.push_back(name);
      }
      if (rf.vars.empty()) throw ParseError("ring file: empty variable list");
      saw_vars = true;
    } else if (key == "rel") {
      if (rest.empty()) throw ParseError("ring file: empty relation");
      rf.relations.push_back(rest);
    } else {
      throw ParseError("ring file: unknown directive '" + key + "'");
    }
  }
  if (!saw_char) throw ParseError("ring file: missing 'char' line");
  if (!saw_vars) throw ParseError("ring file: missing 'vars' line");
  return rf;
}

RingFile RingFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ring file: " + path);
  return parse(in);
}

QuotientRing RingFile::build(std::uint32_t degree_cap) const {
  PolyRing ring(characteristic, vars);
  MonomialOrder ord = ring.grevlex();
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(ring.parse(r, ord));
  return QuotientRing(std::move(ring), std::move(rels), degree_cap);
}

std::string RingFile::canonical_text() const {
  std::string out = "char " + std::to_string(characteristic) + "\n";
  out += "vars ";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ",";
    out += vars[i];
  }
  out += "\n";
  for (const auto& r : relations) out += "rel " + r + "\n";
  return out;
}

}  // namespace reestype
