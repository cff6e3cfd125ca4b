#include "reestype/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "reestype/errors.hpp"

namespace reestype {

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> vars)
    : field_(p), vars_(std::move(vars)) {
  if (vars_.size() > Monomial::kMaxVars) {
    throw PreconditionError("too many ring variables");
  }
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw ParseError("empty variable name");
    if (!std::isalpha(static_cast<unsigned char>(v[0])) && v[0] != '_') {
      throw ParseError("variable name must start with a letter: " + v);
    }
    for (char c : v) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw ParseError("bad character in variable name: " + v);
      }
    }
    if (!seen.insert(v).second) throw ParseError("duplicate variable name: " + v);
  }
}

std::optional<std::size_t> PolyRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

Polynomial PolyRing::constant(long long c, const MonomialOrder& ord) const {
  std::uint32_t r = field_.from_int(c);
  if (r == 0) return Polynomial::zero();
  return Polynomial::normalized({{r, Monomial(nvars())}}, field_, ord);
}

Polynomial PolyRing::var(std::size_t i, const MonomialOrder& ord,
                         std::uint32_t exponent) const {
  Monomial m(nvars());
  m.set(i, exponent);
  return Polynomial::normalized({{1, m}}, field_, ord);
}

Polynomial PolyRing::monomial_poly(const Monomial& m, const MonomialOrder& ord,
                                   std::uint32_t coef) const {
  if (m.nvars() != nvars()) throw PreconditionError("monomial from another ring");
  if (coef % field_.p() == 0) return Polynomial::zero();
  return Polynomial::normalized({{coef % field_.p(), m}}, field_, ord);
}

namespace {

struct Lexer {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  bool take_if(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected integer in polynomial at position " +
                                     std::to_string(start));
    long long v = 0;
    for (std::size_t k = start; k < i; ++k) {
      v = v * 10 + (s[k] - '0');
      if (v > (1ll << 40)) throw ParseError("integer literal too large");
    }
    return v;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      ++i;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
    }
    if (i == start) throw ParseError("expected identifier at position " +
                                     std::to_string(start));
    return std::string(s.substr(start, i - start));
  }
};

}  // namespace

Polynomial PolyRing::parse(std::string_view text, const MonomialOrder& ord) const {
  Lexer lx{text};
  std::vector<Term> raw;
  bool first = true;
  while (!lx.done()) {
    long long sign = 1;
    if (lx.take_if('+')) {
      sign = 1;
    } else if (lx.take_if('-')) {
      sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms");
    }
    first = false;
    if (lx.done()) throw ParseError("dangling sign in polynomial");

    long long coef = 1;
    Monomial mono(nvars());
    bool saw_factor = false;
    for (;;) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= lx.integer();
        coef %= static_cast<long long>(field_.p());
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = lx.identifier();
        auto idx = var_index(name);
        if (!idx) throw ParseError("unknown variable '" + name + "'");
        std::uint32_t e = 1;
        if (lx.take_if('^')) {
          long long ev = lx.integer();
          if (ev < 0) throw ParseError("negative exponent");
          e = static_cast<std::uint32_t>(ev);
        }
        mono.set(*idx, mono[*idx] + e);
        saw_factor = true;
      } else {
        throw ParseError("unexpected character in polynomial");
      }
      if (!lx.take_if('*')) break;
    }
    if (!saw_factor) throw ParseError("empty term");
    raw.push_back({field_.from_int(sign * coef), mono});
  }
  return Polynomial::normalized(std::move(raw), field_, ord);
}

std::vector<Polynomial> PolyRing::parse_list(std::string_view text,
                                             const MonomialOrder& ord) const {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = comma == std::string_view::npos
                                 ? text.substr(start)
                                 : text.substr(start, comma - start);
    bool blank = piece.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (!blank) out.push_back(parse(piece, ord));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string PolyRing::to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars_[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string PolyRing::to_string(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  for (const Term& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono = to_string(t.mono);
    if (mono.empty()) {
      out += std::to_string(t.coef);
    } else if (t.coef == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coef) + "*" + mono;
    }
  }
  return out;
}

PolyRing PolyRing::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> vars = vars_;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return PolyRing(field_.p(), std::move(vars));
}

Polynomial PolyRing::map_to(const Polynomial& f, const PolyRing& target,
                            const MonomialOrder& target_ord) const {
  if (!(field_ == target.field())) {
    throw PreconditionError("ring map across different characteristics");
  }
  std::vector<std::optional<std::size_t>> where(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) where[i] = target.var_index(vars_[i]);
  std::vector<Term> raw;
  raw.reserve(f.size());
  for (const Term& t : f.terms()) {
    Monomial m(target.nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!where[i]) {
        throw PreconditionError("variable '" + vars_[i] +
                                "' has no image in the target ring");
      }
      m.set(*where[i], m[*where[i]] + t.mono[i]);
    }
    raw.push_back({t.coef, m});
  }
  return Polynomial::normalized(std::move(raw), target.field(), target_ord);
}

}  // namespace reestype
