#ifndef REESTYPE_MONOMIAL_HPP
#define REESTYPE_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace reestype {

/// Dense exponent vector. Variable counts in scope are small (<= 12), so
/// exponents live inline and a Monomial is trivially copyable.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;

  Monomial() : n_(0), deg_(0) { exp_.fill(0); }
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<std::uint32_t> exps);
  static Monomial from(std::span<const std::uint32_t> exps);

  std::size_t nvars() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, std::uint32_t e);

  /// Sum of exponents at the given variable indices.
  std::uint32_t degree_at(std::span<const std::size_t> indices) const;

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Quotient this / o; requires o.divides(*this).
  Monomial divided_by(const Monomial& o) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  /// True when gcd(a, b) == 1.
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const;

  std::size_t hash() const;

 private:
  std::array<std::uint32_t, kMaxVars> exp_;
  std::uint8_t n_;
  std::uint32_t deg_;
};

/// Total, multiplicative well-orders on monomials. An order is a cascade of
/// weight comparisons finished by a reverse-lexicographic (or plain
/// lexicographic) tie-break, which covers every kind used here: grevlex,
/// lex, block elimination orders, and weighted-degree-then-grevlex.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, BlockElimination, WeightedGrevlex };

  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);
  /// Eliminates the first `front` variables: any monomial involving them
  /// compares above every monomial in the remaining variables.
  static MonomialOrder block_elimination(std::size_t nvars, std::size_t front);
  /// Eliminates an arbitrary index set instead of a prefix.
  static MonomialOrder block_elimination(std::size_t nvars,
                                         std::span<const std::size_t> front);
  static MonomialOrder weighted_grevlex(std::vector<std::uint32_t> weights);
  /// Elimination of `front` indices refined by a weight row, then degree,
  /// then grevlex tie-break. Used for Rees kernels, where truncations by
  /// weighted degree must be generated by basis elements of bounded weight.
  static MonomialOrder block_weighted(std::size_t nvars,
                                      std::span<const std::size_t> front,
                                      std::vector<std::uint32_t> weights);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  bool operator==(const MonomialOrder& o) const;

 private:
  struct Stage {
    enum class Type { Weight, Revlex, Lex };
    Type type;
    std::vector<std::uint32_t> weights;  // for Weight
  };

  MonomialOrder(Kind kind, std::size_t nvars, std::vector<Stage> stages)
      : kind_(kind), nvars_(nvars), stages_(std::move(stages)) {}

  Kind kind_;
  std::size_t nvars_;
  std::vector<Stage> stages_;
};

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& ord);

}  // namespace reestype

#endif
