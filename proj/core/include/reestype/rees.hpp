#ifndef REESTYPE_REES_HPP
#define REESTYPE_REES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "reestype/quotient.hpp"

namespace reestype {

/// Ring of relations R[T1..Tn] attached to a chosen generating set of an
/// ideal of R. Variables are laid out as [x..., T...]; the order refines
/// the T-degree so that degree truncations of any ideal of relations are
/// generated by basis elements of bounded T-degree.
class ReesContext {
 public:
  ReesContext(QuotientRing base, std::vector<Polynomial> gens);

  const QuotientRing& base() const { return base_; }
  const std::vector<Polynomial>& ideal_gens() const { return gens_; }
  const PolyRing& relation_ring() const { return tring_; }
  const MonomialOrder& relation_order() const { return tord_; }
  std::size_t num_gens() const { return gens_.size(); }
  std::size_t nx() const { return nx_; }
  const std::vector<std::size_t>& t_indices() const { return t_idx_; }

  Polynomial t_var(std::size_t i, std::uint32_t e = 1) const;
  Polynomial from_base(const Polynomial& f) const;
  std::uint32_t t_degree(const Polynomial& F) const;
  bool is_t_homogeneous(const Polynomial& F) const;

  /// Substitute T_i -> gens_i (ring variables map to themselves) and return
  /// the value in the ambient ring of the base.
  Polynomial substitute_gens(const Polynomial& F) const;
  /// F(gens) == 0 in R. F must be homogeneous in the T-grading.
  bool is_relation(const Polynomial& F) const;
  /// All pairwise relations gens_j*T_i - gens_i*T_j, i < j, of T-degree 1.
  std::vector<Polynomial> koszul_relations() const;

  /// Defining ideal of the quotient, mapped into the relation ring.
  const std::vector<Polynomial>& j_in_relation_ring() const { return j_gens_; }
  Polynomial normal_form(const Polynomial& F) const;

 private:
  QuotientRing base_;
  std::vector<Polynomial> gens_;
  PolyRing tring_;
  MonomialOrder tord_;
  std::size_t nx_;
  std::vector<std::size_t> t_idx_;
  std::vector<Polynomial> j_gens_;  // GB of J mapped into the relation ring
};

/// Presentation ideal Q of the Rees algebra R[It] as a Groebner basis in
/// the relation ring, each element homogeneous in T-degree and with
/// coefficients in normal form mod J.
class ReesPresentation {
 public:
  ReesPresentation(ReesContext ctx, std::vector<Polynomial> q_basis);

  const ReesContext& context() const { return ctx_; }
  const std::vector<Polynomial>& q_generators() const { return q_; }
  std::vector<std::uint32_t> q_degrees() const;
  std::uint32_t max_degree() const;
  /// True when the base ring or the ideal generators carry inhomogeneous
  /// data, where the graded proxy for the local statement is heuristic.
  bool inhomogeneous_input() const { return inhomogeneous_; }

 private:
  ReesContext ctx_;
  std::vector<Polynomial> q_;
  bool inhomogeneous_;
};

/// Kernel of R[T1..Tn] ->> R[It]: eliminate t from J + (T_i - t*gens_i).
ReesPresentation rees_presentation(const QuotientRing& R,
                                   std::vector<Polynomial> gens);

/// Minimal k such that Q is generated by its elements of T-degree <= k
/// (relation type); the zero presentation counts as linear type.
std::uint32_t relation_type(const ReesPresentation& P);

/// F lies in the subideal of Q generated in T-degrees < deg F (plus J).
/// Raises PreconditionError when F is not a relation.
bool reducible_to_lower_degree(const ReesPresentation& P, const Polynomial& F);

struct DescentResult {
  enum class Status { Descended, DegeneratePassThrough, Failed };
  Status status = Status::Failed;
  Polynomial relation;      // the produced relation G (or F when degenerate)
  std::uint32_t degree = 0; // its T-degree
  std::uint32_t steps = 0;  // the p at which the colon chain closed
  std::string message;
};

/// Degree-lowering step for a relation on two parameters: builds the chain
/// gamma*(partial sums) in (y^j), finds the first p with s_{p+1} in
/// (gamma, s_1..s_p), cancels, divides by gamma, and returns a relation of
/// T-degree p < deg F with the same leading coefficient.
DescentResult two_param_descent(const ReesContext& ctx, const Polynomial& F,
                                const Polynomial& gamma);

}  // namespace reestype

#endif
