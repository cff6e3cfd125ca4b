#ifndef REESTYPE_MULTIPLIERS_HPP
#define REESTYPE_MULTIPLIERS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "reestype/monres.hpp"
#include "reestype/rees.hpp"

namespace reestype {

/// Evidence that z multiplies every colon ((x_1..x_{k-1}) : x_k) back into
/// the prefix ideal, for one system of parameters. The verdict passes iff
/// every per-index check passes.
struct MultiplierCertificate {
  Polynomial element;            // the power of z that was certified
  std::uint32_t power = 1;       // exponent actually certified
  std::vector<Polynomial> sop;   // the system of parameters used
  std::vector<bool> index_pass;  // one entry per k = 1..d
  bool pass = false;
  bool degenerate_zero = false;  // z == 0 passes vacuously
};

/// Element-wise Cohen-Macaulay multiplier test: for each prefix of the
/// s.o.p., z * ((x_1..x_{k-1}) : x_k) must land in (x_1..x_{k-1}). When
/// the plain element fails and power_cap > 1, successive powers z^2, z^3,
/// ... are tried up to the cap; the certificate reports the first passing
/// power (or the last failing one).
MultiplierCertificate cm_multiplier_check(const QuotientRing& R,
                                          const Polynomial& z,
                                          std::span<const Polynomial> sop,
                                          std::uint32_t power_cap = 1);

/// Checks z*(IR : x^m) == (I : X^m)R for a monomial ideal I and monomial m
/// in the parameter exponents: the quotient-side colon multiplied by z must
/// land in the variable-side colon evaluated at the parameters, and the
/// variable-side colon must sit inside the quotient-side one.
bool colon_transfer_check(const QuotientRing& R, const Polynomial& z,
                          std::span<const Polynomial> sop,
                          const MonomialIdeal& exponents, const Monomial& m);

struct PerturbationReport {
  std::uint32_t rt_base = 0;
  std::uint32_t rt_perturbed = 0;
  bool equal = false;
  bool inhomogeneous_warning = false;
};

/// Computes the relation type of (sop) and of the tuple with sop[index]
/// replaced by sop[index] + alpha, and reports whether the two agree. The
/// perturbed tuple must still be a system of parameters.
PerturbationReport rt_perturbation_experiment(const QuotientRing& R,
                                              std::span<const Polynomial> sop,
                                              const Polynomial& alpha,
                                              std::size_t index);

/// Bounded superficiality check: (I^n : x) meet I^c == I^(n-1) for all
/// c < n <= nmax. Reports false for x = 0. This is an empirical sweep, not
/// a proof.
bool superficial_check(const QuotientRing& R, std::span<const Polynomial> igens,
                       const Polynomial& x, std::uint32_t c, std::uint32_t nmax);

}  // namespace reestype

#endif
