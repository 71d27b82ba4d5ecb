#ifndef LIEB_YBE_HPP
#define LIEB_YBE_HPP

#include "lieb/invariants.hpp"

namespace lieb {

struct RMatrixVerdict {
  MultiVector residual;            // [r,r]_S, grade 3
  bool is_cybe = false;            // residual == 0
  bool is_mcybe = false;           // residual lies in the invariant subspace
  std::optional<Vec> witness;      // coordinates of the residual against the invariant basis
};

/// Schouten square [r,r]_S of a bivector.
MultiVector mcybe_residual(const LieAlgebra& L, const MultiVector& r);

/// Certifies r against the classical / modified Yang-Baxter equations, with an
/// explicit membership witness when the residual is invariant.
RMatrixVerdict certify_r(const LieAlgebra& L, const MultiVector& r);

/// Matrix of v |-> [v, r]_S as a map g -> Lambda^2 g (C(n,2) x n).
Mat cocommutator(const LieAlgebra& L, const MultiVector& r);

/// Whether the bracket on g* transposed from delta satisfies the Jacobi
/// identity; for delta = cocommutator(r) this holds exactly when r solves the
/// modified Yang-Baxter equation.
bool cocommutator_cojacobi(const LieAlgebra& L, const Mat& delta);

/// r1 and r2 induce the same coproduct iff r1 - r2 is invariant; cross-checked
/// against equality of the cocommutator matrices.
bool same_coproduct(const LieAlgebra& L, const MultiVector& r1, const MultiVector& r2);

/// Dimension of the inner orbit through w: the rank of v |-> [v, w]_S.
int orbit_dimension(const LieAlgebra& L, const MultiVector& w);

/// b(r, r) for an invariant symmetric bilinear form on Lambda^2; constant
/// along inner orbits.
Rational quadratic_separator(const LieAlgebra& L, const MultiLinearForm& b, const MultiVector& r);

/// Degree-q cochain with coefficients in Lambda^2 g (raw) or in the reduced
/// quotient's complement coordinates.
struct Cochain {
  int degree = 0;
  bool reduced = false;
  std::map<Tuple, Vec> coeff; // strictly increasing q-tuples -> coefficient vector

  Vec eval(const Tuple& t, int coeff_dim) const; // antisymmetric evaluation on any tuple
};

/// Chevalley-Eilenberg differential with coefficients in Lambda^2 g; pass a
/// reduced space to run the quotient complex (same routine, the raw complex
/// uses the identity quotient).
Cochain ce_differential(const LieAlgebra& L, const ReducedSpace* R, const Cochain& c);

} // namespace lieb

#endif
