#ifndef LIEB_INVARIANTS_HPP
#define LIEB_INVARIANTS_HPP

#include "lieb/forms.hpp"

#include <variant>

namespace lieb {

/// The space of g-invariant m-vectors: the common kernel of the derivation
/// lifts of all ad_{e_i} to Lambda^m g.
Subspace invariant_subspace(const LieAlgebra& L, int m);

/// Quotient Lambda^m g / (Lambda^m g)^g presented by a deterministic
/// complement: the non-pivot canonical basis m-vectors of the invariant
/// subspace's echelon form.
class ReducedSpace {
public:
  ReducedSpace() = default;
  ReducedSpace(AlgebraPtr alg, int grade);

  const AlgebraPtr& algebra() const { return alg_; }
  int grade() const { return grade_; }
  const Subspace& invariants() const { return inv_; }
  int quotient_dim() const { return static_cast<int>(complement_.size()); }
  /// Canonical Lambda^m basis indices of the complement representatives.
  const std::vector<int>& complement() const { return complement_; }

  Vec project(const Vec& full) const;
  Vec project(const MultiVector& w) const;
  MultiVector lift(const Vec& coords) const;

private:
  AlgebraPtr alg_;
  int grade_ = 0;
  Subspace inv_;
  std::vector<int> complement_;
};

struct ReducedClass {
  int grade = 0;
  Vec coords; // in the complement basis of the reduced space of that grade
};

/// Reduced Schouten bracket: lift representatives, bracket, project. The
/// result is independent of the chosen representatives.
ReducedClass reduced_schouten(const ReducedSpace& Rp, const ReducedSpace& Rq, const Vec& a, const Vec& b);

/// Pushes an invariant form on Lambda^m whose kernel contains the invariant
/// subspace down to the complement coordinates of the quotient.
MultiLinearForm reduced_form(const ReducedSpace& R, const MultiLinearForm& b);

struct BridgeToInvariant {
  MultiVector invariant; // top wedge of the ideal's echelon basis
  Subspace ideal;
};

struct BridgeToIdeal {
  Subspace ideal;
  std::vector<Rational> restricted_traces;
};

/// Traceless ideal -> decomposable invariant top wedge (certified), and
/// decomposable invariant multivector -> traceless ideal (certified).
BridgeToInvariant ideal_to_invariant(const LieAlgebra& L, const Subspace& h);
BridgeToIdeal invariant_to_ideal(const MultiVector& omega);

struct InvariantGenerators {
  int grade = 0;
  Subspace space;
  std::string rule; // which structural case produced it
};

/// Guaranteed-invariant wedge subspaces of a nilpotent algebra built from the
/// center and the lower central series; each verified against the invariant
/// subspace. Inapplicable cases are skipped.
std::vector<InvariantGenerators> nilpotent_invariant_generators(const LieAlgebra& L);

} // namespace lieb

#endif
