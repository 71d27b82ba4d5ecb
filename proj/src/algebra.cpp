#include "lieb/algebra.hpp"
#include "lieb/error.hpp"

#include <algorithm>
#include <functional>

namespace lieb {

AlgebraPtr LieAlgebra::create(const AlgebraDoc& doc) {
  auto L = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  if (doc.dim <= 0) fail(errc::dimension_mismatch, "algebra dimension must be positive");
  L->name_ = doc.name;
  L->dim_ = doc.dim;
  L->basis_ = doc.basis;
  if (L->basis_.empty()) {
    for (int i = 1; i <= doc.dim; ++i) L->basis_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(L->basis_.size()) != doc.dim)
    fail(errc::dimension_mismatch, "basis name count does not match dimension");

  for (const auto& e : doc.brackets) {
    if (e.i < 0 || e.j < 0 || e.i >= doc.dim || e.j >= doc.dim)
      fail(errc::dimension_mismatch, "bracket entry index out of range");
    if (e.i >= e.j) fail(errc::dimension_mismatch, "bracket entries must have i < j");
    if (L->c_.count({e.i, e.j}))
      fail(errc::duplicate_bracket_entry,
           "bracket [" + L->basis_[e.i] + "," + L->basis_[e.j] + "] declared twice");
    SparseVec v;
    for (const auto& [k, coeff] : e.result) {
      if (k < 0 || k >= doc.dim) fail(errc::dimension_mismatch, "bracket result index out of range");
      if (!coeff.is_zero()) v.emplace_back(k, coeff);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t t = 1; t < v.size(); ++t)
      if (v[t].first == v[t - 1].first)
        fail(errc::duplicate_bracket_entry, "bracket result lists a component twice");
    if (!v.empty()) L->c_[{e.i, e.j}] = std::move(v);
  }

  L->ad_.reserve(doc.dim);
  for (int i = 0; i < doc.dim; ++i) {
    Mat m(doc.dim, doc.dim);
    for (int j = 0; j < doc.dim; ++j)
      for (const auto& [k, coeff] : L->bracket(i, j)) m.at(k, j) = coeff;
    L->ad_.push_back(std::move(m));
  }

  // Jacobi identity by full expansion on all basis triples.
  for (int i = 0; i < doc.dim; ++i)
    for (int j = i + 1; j < doc.dim; ++j)
      for (int k = j + 1; k < doc.dim; ++k) {
        Vec total(doc.dim);
        auto add_term = [&](int a, int b, int c) {
          // [[e_a, e_b], e_c]
          for (const auto& [l, coeff] : L->bracket(a, b))
            for (const auto& [m2, coeff2] : L->bracket(l, c)) total[m2] += coeff * coeff2;
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        for (const auto& x : total)
          if (!x.is_zero())
            fail(errc::jacobi_violation, "Jacobi identity fails on (" + L->basis_[i] + "," +
                                             L->basis_[j] + "," + L->basis_[k] + ")");
      }
  return L;
}

SparseVec LieAlgebra::bracket(int i, int j) const {
  if (i == j) return {};
  bool flip = i > j;
  auto it = c_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == c_.end()) return {};
  if (!flip) return it->second;
  SparseVec v = it->second;
  for (auto& [k, coeff] : v) coeff = -coeff;
  return v;
}

Vec LieAlgebra::bracket_vec(const Vec& a, const Vec& b) const {
  if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
    fail(errc::dimension_mismatch, "bracket of vectors of wrong size");
  Vec r(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero() || i == j) continue;
      for (const auto& [k, coeff] : bracket(i, j)) r[k] += a[i] * b[j] * coeff;
    }
  }
  return r;
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
  return dim_ == other.dim_ && c_ == other.c_;
}

EndoMap adjoint(const LieAlgebra& L, const Vec& v) {
  if (static_cast<int>(v.size()) != L.dim()) fail(errc::grade_mismatch, "adjoint argument dimension");
  Mat m(L.dim(), L.dim());
  for (int i = 0; i < L.dim(); ++i)
    if (!v[i].is_zero()) m = m + (v[i] * L.adjoint_matrix(i));
  return {1, m};
}

MultiLinearForm killing_form(const LieAlgebra& L) {
  int n = L.dim();
  Mat k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational t = (L.adjoint_matrix(i) * L.adjoint_matrix(j)).trace();
      k.at(i, j) = t;
      k.at(j, i) = t;
    }
  return MultiLinearForm::from_matrix(1, k, Symmetry::symmetric);
}

MultiLinearForm trace_form(const LieAlgebra& L, int k, Symmetry sym, int bound) {
  if (k < 2) fail(errc::arity_mismatch, "trace form arity must be at least 2");
  if (k > bound) fail(errc::bound_exceeded, "trace form arity exceeds configured bound");
  int n = L.dim();
  MultiLinearForm b(k, 1, n, Symmetry::none);
  std::vector<int> idx(k, 0);
  std::vector<int> perm(k);
  std::function<void(int)> walk = [&](int pos) {
    if (pos == k) {
      Rational total;
      for (int p = 0; p < k; ++p) perm[p] = p;
      do {
        // permutation sign via inversion count
        int inv = 0;
        for (int a = 0; a < k; ++a)
          for (int c = a + 1; c < k; ++c)
            if (perm[a] > perm[c]) ++inv;
        Mat prod = L.adjoint_matrix(idx[perm[0]]);
        for (int p = 1; p < k; ++p) prod = prod * L.adjoint_matrix(idx[perm[p]]);
        Rational t = prod.trace();
        if (sym == Symmetry::antisymmetric && (inv % 2)) t = -t;
        total += t;
      } while (std::next_permutation(perm.begin(), perm.end()));
      b.at(std::span<const int>(idx.data(), idx.size())) = total;
      return;
    }
    for (idx[pos] = 0; idx[pos] < n; ++idx[pos]) walk(pos + 1);
  };
  walk(0);
  return MultiLinearForm(k, 1, n, sym, b.data());
}

namespace {

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<Vec> rows;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) rows.push_back(L.bracket_vec(a.basis().row(i), b.basis().row(j)));
  Mat m(static_cast<int>(rows.size()), L.dim());
  for (size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
  return Subspace::span(L.dim(), m);
}

} // namespace

StructureReport structure_report(const LieAlgebra& L) {
  StructureReport rep;
  int n = L.dim();

  Mat stacked(0, n);
  for (int i = 0; i < n; ++i) stacked = vstack(stacked, L.adjoint_matrix(i));
  rep.center = Subspace::span(n, kernel_basis(stacked));

  Subspace g = Subspace::full(n);
  rep.lower_central.push_back(g);
  while (true) {
    Subspace next = bracket_span(L, g, rep.lower_central.back());
    if (next == rep.lower_central.back()) break;
    rep.lower_central.push_back(next);
    if (next.dim() == 0) break;
  }
  rep.derived.push_back(g);
  while (true) {
    Subspace next = bracket_span(L, rep.derived.back(), rep.derived.back());
    if (next == rep.derived.back()) break;
    rep.derived.push_back(next);
    if (next.dim() == 0) break;
  }
  rep.nilpotent = rep.lower_central.back().dim() == 0;
  rep.solvable = rep.derived.back().dim() == 0;
  rep.unimodular = true;
  for (int i = 0; i < n; ++i)
    if (!L.adjoint_matrix(i).trace().is_zero()) rep.unimodular = false;
  return rep;
}

IdealReport ideal_report(const LieAlgebra& L, const Subspace& h) {
  if (h.ambient() != L.dim()) fail(errc::not_a_subspace, "ideal candidate lives in the wrong space");
  IdealReport rep;
  int n = L.dim();

  rep.is_subalgebra = true;
  for (int i = 0; i < h.dim() && rep.is_subalgebra; ++i)
    for (int j = 0; j < h.dim(); ++j)
      if (!h.contains(L.bracket_vec(h.basis().row(i), h.basis().row(j)))) {
        rep.is_subalgebra = false;
        break;
      }

  rep.is_ideal = true;
  for (int i = 0; i < n && rep.is_ideal; ++i)
    for (int j = 0; j < h.dim(); ++j) {
      Vec ei(n);
      ei[i] = Rational(1);
      if (!h.contains(L.bracket_vec(ei, h.basis().row(j)))) {
        rep.is_ideal = false;
        break;
      }
    }
  if (!rep.is_ideal) return rep;

  // adapted basis: echelon rows of h, completed by non-pivot canonical vectors
  std::vector<bool> pivot(n, false);
  for (int p : h.pivots()) pivot[p] = true;
  Mat P(n, n); // columns are adapted basis vectors
  int col = 0;
  for (int i = 0; i < h.dim(); ++i, ++col)
    for (int r = 0; r < n; ++r) P.at(r, col) = h.basis().at(i, r);
  for (int c = 0; c < n; ++c)
    if (!pivot[c]) {
      P.at(c, col) = Rational(1);
      ++col;
    }
  Mat Pinv = *inverse(P);

  rep.is_traceless_ideal = true;
  for (int i = 0; i < n; ++i) {
    Mat m = Pinv * L.adjoint_matrix(i) * P;
    Rational t;
    for (int d = 0; d < h.dim(); ++d) t += m.at(d, d);
    rep.restricted_traces.push_back(t);
    if (!t.is_zero()) rep.is_traceless_ideal = false;
  }
  return rep;
}

Vec flatten_matrix(const Mat& m) {
  Vec v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Mat unflatten_matrix(const Vec& v, int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<size_t>(i) * n + j];
  return m;
}

DerivationAlgebra derivation_algebra(const LieAlgebra& L) {
  int n = L.dim();
  auto var = [n](int r, int c) { return r * n + c; };

  // rows: one equation per (i<j, output coordinate k)
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Vec row(static_cast<size_t>(n) * n);
        for (const auto& [l, coeff] : L.bracket(i, j)) row[var(k, l)] += coeff;
        // -[D e_i, e_j]_k
        for (int r = 0; r < n; ++r)
          for (const auto& [m2, coeff] : L.bracket(r, j))
            if (m2 == k) row[var(r, i)] -= coeff;
        // -[e_i, D e_j]_k
        for (int r = 0; r < n; ++r)
          for (const auto& [m2, coeff] : L.bracket(i, r))
            if (m2 == k) row[var(r, j)] -= coeff;
        rows.push_back(std::move(row));
      }
    }
  Mat sys(static_cast<int>(rows.size()), n * n);
  for (size_t r = 0; r < rows.size(); ++r) sys.set_row(static_cast<int>(r), rows[r]);

  DerivationAlgebra out;
  out.der = rows.empty() ? Subspace::full(n * n) : Subspace::span(n * n, kernel_basis(sys));
  Mat inner(n, n * n);
  for (int i = 0; i < n; ++i) inner.set_row(i, flatten_matrix(L.adjoint_matrix(i)));
  out.inner = Subspace::span(n * n, inner);
  return out;
}

} // namespace lieb
