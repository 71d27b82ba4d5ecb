#include "lieb/invariants.hpp"
#include "lieb/error.hpp"

#include <algorithm>
#include <functional>

namespace lieb {

Subspace invariant_subspace(const LieAlgebra& L, int m) {
  if (m < 0 || m > L.dim()) fail(errc::grade_out_of_range, "invariant subspace grade");
  int N = static_cast<int>(binom(L.dim(), m));
  Mat stacked(0, N);
  for (const Mat& rho : module_action(L, m)) stacked = vstack(stacked, rho);
  if (stacked.rows() == 0) return Subspace::full(N);
  return Subspace::span(N, kernel_basis(stacked));
}

ReducedSpace::ReducedSpace(AlgebraPtr alg, int grade) : alg_(std::move(alg)), grade_(grade) {
  inv_ = invariant_subspace(*alg_, grade);
  int N = static_cast<int>(binom(alg_->dim(), grade));
  std::vector<bool> pivot(N, false);
  for (int p : inv_.pivots()) pivot[p] = true;
  for (int c = 0; c < N; ++c)
    if (!pivot[c]) complement_.push_back(c);
}

Vec ReducedSpace::project(const Vec& full) const {
  Vec residual = inv_.reduce(full);
  Vec out(complement_.size());
  for (size_t i = 0; i < complement_.size(); ++i) out[i] = residual[complement_[i]];
  return out;
}

Vec ReducedSpace::project(const MultiVector& w) const { return project(w.grade_vector(grade_)); }

MultiVector ReducedSpace::lift(const Vec& coords) const {
  if (coords.size() != complement_.size()) fail(errc::dimension_mismatch, "reduced class coordinates");
  int N = static_cast<int>(binom(alg_->dim(), grade_));
  Vec full(N);
  for (size_t i = 0; i < complement_.size(); ++i) full[complement_[i]] = coords[i];
  return MultiVector::from_grade_vector(alg_, grade_, full);
}

ReducedClass reduced_schouten(const ReducedSpace& Rp, const ReducedSpace& Rq, const Vec& a, const Vec& b) {
  if (!Rp.algebra()->same_structure(*Rq.algebra()))
    fail(errc::algebra_mismatch, "reduced classes over different algebras");
  MultiVector bracket = schouten(Rp.lift(a), Rq.lift(b));
  ReducedSpace target(Rp.algebra(), Rp.grade() + Rq.grade() - 1);
  return {target.grade(), target.project(bracket)};
}

MultiLinearForm reduced_form(const ReducedSpace& R, const MultiLinearForm& b) {
  if (b.grade() != R.grade() || b.dim() != static_cast<int>(binom(R.algebra()->dim(), R.grade())))
    fail(errc::arity_grade_mismatch, "form does not live on the reduced space's grade");
  int k = b.arity();
  // kernel condition: b vanishes whenever any slot is an invariant vector
  const Subspace& I = R.invariants();
  int N = b.dim();
  for (int slot = 0; slot < k; ++slot) {
    for (int r = 0; r < I.dim(); ++r) {
      Vec inv_row = I.basis().row(r);
      // contract slot against inv_row, all other slots over all basis indices
      std::vector<int> idx(k, 0);
      bool ok = true;
      std::function<void(int)> walk = [&](int pos) {
        if (!ok) return;
        if (pos == k) {
          Rational total;
          std::vector<int> probe = idx;
          for (int y = 0; y < N; ++y) {
            if (inv_row[y].is_zero()) continue;
            probe[slot] = y;
            total += inv_row[y] * b.at(std::span<const int>(probe.data(), probe.size()));
          }
          if (!total.is_zero()) ok = false;
          return;
        }
        if (pos == slot) {
          walk(pos + 1);
          return;
        }
        for (idx[pos] = 0; idx[pos] < N; ++idx[pos]) walk(pos + 1);
        idx[pos] = 0;
      };
      walk(0);
      if (!ok)
        fail(errc::kernel_condition_failed, "form kernel does not contain the invariant subspace");
    }
  }
  int q = R.quotient_dim();
  MultiLinearForm out(k, R.grade(), q, Symmetry::none);
  std::vector<int> idx(k, 0);
  std::function<void(int)> walk = [&](int pos) {
    if (pos == k) {
      std::vector<int> full(k);
      for (int s = 0; s < k; ++s) full[s] = R.complement()[idx[s]];
      out.at(std::span<const int>(idx.data(), idx.size())) =
          b.at(std::span<const int>(full.data(), full.size()));
      return;
    }
    for (idx[pos] = 0; idx[pos] < q; ++idx[pos]) walk(pos + 1);
    idx[pos] = 0;
  };
  walk(0);
  Symmetry s = Symmetry::none;
  if (out.has_symmetry(Symmetry::symmetric))
    s = Symmetry::symmetric;
  else if (out.has_symmetry(Symmetry::antisymmetric))
    s = Symmetry::antisymmetric;
  return MultiLinearForm(k, R.grade(), q, s, out.data());
}

BridgeToInvariant ideal_to_invariant(const LieAlgebra& L, const Subspace& h) {
  if (h.ambient() != L.dim()) fail(errc::not_a_subspace, "ideal candidate lives in the wrong space");
  if (h.dim() == 0) fail(errc::zero_input, "bridge needs a nonzero ideal");
  IdealReport rep = ideal_report(L, h);
  if (!rep.is_ideal || !rep.is_traceless_ideal)
    fail(errc::not_traceless_ideal, "subspace is not a traceless ideal");
  AlgebraPtr alg = L.ptr();
  MultiVector omega = MultiVector::scalar(alg, Rational(1));
  for (int r = 0; r < h.dim(); ++r)
    omega = wedge(omega, MultiVector::from_vec(alg, h.basis().row(r)));
  Subspace inv = invariant_subspace(L, h.dim());
  if (!inv.contains(omega.grade_vector(h.dim())))
    fail(errc::not_invariant, "ideal wedge is unexpectedly not invariant");
  return {omega, h};
}

BridgeToIdeal invariant_to_ideal(const MultiVector& omega) {
  const LieAlgebra& L = *omega.algebra();
  if (omega.is_zero()) fail(errc::zero_input, "bridge needs a nonzero multivector");
  auto g = omega.homogeneous_grade();
  if (!g || *g < 1) fail(errc::mixed_grade, "bridge needs a homogeneous multivector of grade >= 1");
  for (int i = 0; i < L.dim(); ++i) {
    MultiVector img = schouten(MultiVector::basis_element(omega.algebra(), i), omega);
    if (!img.is_zero()) fail(errc::not_invariant, "multivector is not invariant");
  }
  AnnihilatorSpan ann = annihilator_span(omega);
  if (!ann.decomposable) fail(errc::not_decomposable, "multivector is not decomposable");
  IdealReport rep = ideal_report(L, ann.span);
  if (!rep.is_ideal || !rep.is_traceless_ideal)
    fail(errc::not_traceless_ideal, "factor span is unexpectedly not a traceless ideal");
  return {ann.span, rep.restricted_traces};
}

namespace {

Subspace wedge_span(const LieAlgebra& L, const std::vector<MultiVector>& factors, int grade) {
  int N = static_cast<int>(binom(L.dim(), grade));
  Mat rows(static_cast<int>(factors.size()), N);
  for (size_t r = 0; r < factors.size(); ++r) rows.set_row(static_cast<int>(r), factors[r].grade_vector(grade));
  return Subspace::span(N, rows);
}

std::vector<MultiVector> basis_of(const AlgebraPtr& alg, const Subspace& s) {
  std::vector<MultiVector> out;
  for (int r = 0; r < s.dim(); ++r) out.push_back(MultiVector::from_vec(alg, s.basis().row(r)));
  return out;
}

} // namespace

std::vector<InvariantGenerators> nilpotent_invariant_generators(const LieAlgebra& L) {
  StructureReport rep = structure_report(L);
  if (!rep.nilpotent) fail(errc::not_nilpotent, "algebra is not nilpotent");
  AlgebraPtr alg = L.ptr();
  std::vector<InvariantGenerators> out;

  bool abelian = rep.lower_central.size() >= 2 && rep.lower_central[1].dim() == 0;
  if (abelian) {
    for (int m = 2; m <= std::min(L.dim(), 3); ++m)
      out.push_back({m, Subspace::full(static_cast<int>(binom(L.dim(), m))), "abelian: every wedge invariant"});
    return out;
  }

  int p = static_cast<int>(rep.lower_central.size()) - 1; // first vanishing index
  auto series = [&](int idx) { return rep.lower_central[idx]; };
  const Subspace& z = rep.center;
  int zdim = z.dim();

  auto verify = [&](InvariantGenerators gen) {
    Subspace inv = invariant_subspace(L, gen.grade);
    if (!inv.contains(gen.space))
      fail(errc::not_invariant, "structural generator escaped the invariant subspace");
    out.push_back(std::move(gen));
  };

  std::vector<MultiVector> zb = basis_of(alg, z);

  if (zdim == 1 && p >= 2) {
    std::vector<MultiVector> gens;
    for (const auto& v : basis_of(alg, series(p - 2))) gens.push_back(wedge(zb[0], v));
    verify({2, wedge_span(L, gens, 2), "center ^ series(p-2) in grade 2"});
  }
  if (L.dim() >= 3) {
    if (zdim == 2 && p >= 2) {
      std::vector<MultiVector> gens;
      MultiVector z2 = wedge(zb[0], zb[1]);
      for (const auto& v : basis_of(alg, series(p - 2))) gens.push_back(wedge(z2, v));
      verify({3, wedge_span(L, gens, 3), "wedge of center ^ series(p-2) in grade 3"});
    } else if (zdim == 1 && p >= 2 && series(p - 2).dim() > 1) {
      std::vector<MultiVector> gens;
      auto gb = basis_of(alg, series(p - 2));
      for (size_t a = 0; a < gb.size(); ++a)
        for (size_t b = a + 1; b < gb.size(); ++b) gens.push_back(wedge(zb[0], wedge(gb[a], gb[b])));
      verify({3, wedge_span(L, gens, 3), "center ^ wedge of series(p-2) in grade 3"});
    } else if (zdim == 1 && series(p - 2).dim() == 1 && p >= 3) {
      std::vector<MultiVector> gens;
      MultiVector zw = wedge(zb[0], basis_of(alg, series(p - 2))[0]);
      for (const auto& v : basis_of(alg, series(p - 3))) gens.push_back(wedge(zw, v));
      verify({3, wedge_span(L, gens, 3), "center ^ series(p-2) ^ series(p-3) in grade 3"});
    }
  }
  return out;
}

} // namespace lieb
