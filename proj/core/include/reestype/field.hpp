#ifndef REESTYPE_FIELD_HPP
#define REESTYPE_FIELD_HPP

#include <cstdint>

namespace reestype {

/// Default coefficient prime. Large enough that the small binomial
/// coefficients showing up in desk-scale examples never vanish.
inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Arithmetic in the prime field F_p. Elements are residues 0 <= v < p.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Multiplicative inverse of a nonzero residue.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Reduce an arbitrary signed integer into [0, p).
  std::uint32_t from_int(long long v) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::uint32_t n);

 private:
  std::uint32_t p_;
};

}  // namespace reestype

#endif
