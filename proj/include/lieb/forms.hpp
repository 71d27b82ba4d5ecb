#ifndef LIEB_FORMS_HPP
#define LIEB_FORMS_HPP

#include "lieb/multivector.hpp"

namespace lieb {

/// Derivation-mode lift of every ad_{e_i} to Lambda^m g.
std::vector<Mat> module_action(const LieAlgebra& L, int m);

/// True when b satisfies the invariance equation
/// b(rho_v x_1, ..., x_k) + ... + b(x_1, ..., rho_v x_k) = 0 on all basis tuples,
/// with rho the derivation lift of ad to Lambda^m g.
bool is_invariant_form(const LieAlgebra& L, const MultiLinearForm& b);

/// Solution space of the invariance equation, intersected with the symmetry
/// constraint; rows are flattened rank-k tensors over Lambda^m g.
Subspace invariant_forms(const LieAlgebra& L, int m, int k, Symmetry sym,
                         size_t entry_bound = 10000);

/// Extension of an invariant k-linear form on g to Lambda^m g via the
/// antisymmetrized product formula; collapses to a Gram determinant for k=2.
MultiLinearForm extend_form(const LieAlgebra& L, const MultiLinearForm& b, int m);

/// Reference implementation of the extension: the raw normalized sum over
/// k-tuples of permutations. Kept as an independent cross-check path.
MultiLinearForm extend_form_permutation_sum(const LieAlgebra& L, const MultiLinearForm& b, int m);

struct CasimirInducedForm {
  MultiLinearForm form;
  bool invariant = false; // invariance re-checked, true when C was a Casimir
};

/// Form b(v_1,...,v_k) = C(kappa~ v_1, ..., kappa~ v_k) obtained by lowering
/// all arguments of a symmetric tensor C on g* with the Killing form.
CasimirInducedForm casimir_induced_form(const LieAlgebra& L, const MultiLinearForm& C);

} // namespace lieb

#endif
