#include "lieb/forms.hpp"
#include "lieb/error.hpp"

#include <algorithm>
#include <functional>

namespace lieb {

std::vector<Mat> module_action(const LieAlgebra& L, int m) {
  std::vector<Mat> rho;
  rho.reserve(L.dim());
  for (int i = 0; i < L.dim(); ++i)
    rho.push_back(lambda_power(L, L.adjoint_matrix(i), m, LambdaMode::derivation).m);
  return rho;
}

namespace {

/// Iterates over all multi-indices in {0..dim-1}^k.
template <typename F>
void for_each_index(int dim, int k, F&& body) {
  std::vector<int> idx(k, 0);
  while (true) {
    body(idx);
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == dim) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

size_t flat_index(const std::vector<int>& idx, int dim) {
  size_t f = 0;
  for (int x : idx) f = f * dim + static_cast<size_t>(x);
  return f;
}

} // namespace

bool is_invariant_form(const LieAlgebra& L, const MultiLinearForm& b) {
  auto rho = module_action(L, b.grade());
  int dim = b.dim();
  int k = b.arity();
  bool ok = true;
  for (int v = 0; v < L.dim() && ok; ++v) {
    const Mat& R = rho[v];
    for_each_index(dim, k, [&](const std::vector<int>& idx) {
      if (!ok) return;
      Rational total;
      std::vector<int> mod = idx;
      for (int s = 0; s < k; ++s) {
        for (int y = 0; y < dim; ++y) {
          const Rational& c = R.at(y, idx[s]);
          if (c.is_zero()) continue;
          mod[s] = y;
          total += c * b.at(std::span<const int>(mod.data(), mod.size()));
        }
        mod[s] = idx[s];
      }
      if (!total.is_zero()) ok = false;
    });
  }
  return ok;
}

Subspace invariant_forms(const LieAlgebra& L, int m, int k, Symmetry sym, size_t entry_bound) {
  if (m < 0 || m > L.dim()) fail(errc::grade_out_of_range, "invariant forms grade");
  if (k < 1) fail(errc::arity_mismatch, "invariant forms arity");
  int dim = static_cast<int>(binom(L.dim(), m));
  size_t entries = 1;
  for (int s = 0; s < k; ++s) {
    entries *= static_cast<size_t>(dim);
    if (entries > entry_bound) fail(errc::bound_exceeded, "form tensor exceeds configured entry bound");
  }
  auto rho = module_action(L, m);

  std::vector<Vec> rows;
  for (int v = 0; v < L.dim(); ++v) {
    const Mat& R = rho[v];
    for_each_index(dim, k, [&](const std::vector<int>& idx) {
      Vec row(entries);
      bool nonzero = false;
      std::vector<int> mod = idx;
      for (int s = 0; s < k; ++s) {
        for (int y = 0; y < dim; ++y) {
          const Rational& c = R.at(y, idx[s]);
          if (c.is_zero()) continue;
          mod[s] = y;
          row[flat_index(mod, dim)] += c;
          nonzero = true;
        }
        mod[s] = idx[s];
      }
      if (nonzero) rows.push_back(std::move(row));
    });
  }
  if (sym != Symmetry::none) {
    for_each_index(dim, k, [&](const std::vector<int>& idx) {
      for (int p = 0; p + 1 < k; ++p) {
        std::vector<int> swapped = idx;
        std::swap(swapped[p], swapped[p + 1]);
        Vec row(entries);
        row[flat_index(idx, dim)] += Rational(1);
        if (sym == Symmetry::symmetric)
          row[flat_index(swapped, dim)] -= Rational(1);
        else
          row[flat_index(swapped, dim)] += Rational(1);
        bool trivial = std::all_of(row.begin(), row.end(), [](const Rational& x) { return x.is_zero(); });
        if (!trivial) rows.push_back(std::move(row));
      }
    });
  }
  if (rows.empty()) return Subspace::full(static_cast<int>(entries));
  Mat sys(static_cast<int>(rows.size()), static_cast<int>(entries));
  for (size_t r = 0; r < rows.size(); ++r) sys.set_row(static_cast<int>(r), rows[r]);
  return Subspace::span(static_cast<int>(entries), kernel_basis(sys));
}

namespace {

Symmetry detect_k2_symmetry(const MultiLinearForm& f) {
  if (f.arity() != 2) return Symmetry::none;
  if (f.has_symmetry(Symmetry::symmetric)) return Symmetry::symmetric;
  if (f.has_symmetry(Symmetry::antisymmetric)) return Symmetry::antisymmetric;
  return Symmetry::none;
}

} // namespace

MultiLinearForm extend_form_permutation_sum(const LieAlgebra& L, const MultiLinearForm& b, int m) {
  if (b.grade() != 1 || b.dim() != L.dim())
    fail(errc::arity_grade_mismatch, "extension input must be a form on g");
  if (m < 0 || m > L.dim()) fail(errc::arity_grade_mismatch, "extension grade out of range");
  int k = b.arity();
  int n = L.dim();
  if (m == 0) {
    MultiLinearForm out(k, 0, 1, Symmetry::none);
    out.data()[0] = Rational(1);
    return out;
  }
  int N = static_cast<int>(binom(n, m));
  auto tuples = all_tuples(n, m);

  // all permutations of {0..m-1} with signs
  std::vector<std::pair<std::vector<int>, int>> perms;
  {
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    do {
      int inv = 0;
      for (int a = 0; a < m; ++a)
        for (int c = a + 1; c < m; ++c)
          if (p[a] > p[c]) ++inv;
      perms.emplace_back(p, inv % 2 ? -1 : 1);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  MultiLinearForm out(k, m, N, Symmetry::none);
  Rational inv_mfact = Rational(1, static_cast<long long>(perms.size()));

  std::vector<int> choice(k, 0); // permutation chosen per slot
  std::vector<int> args(k, 0);
  for_each_index(N, k, [&](const std::vector<int>& idx) {
    Rational total;
    std::function<void(int, int)> walk = [&](int slot, int sign_so_far) {
      if (slot == k) {
        Rational prod(1);
        for (int r = 0; r < m && !prod.is_zero(); ++r) {
          for (int s = 0; s < k; ++s) {
            const auto& perm = perms[choice[s]].first;
            // argument v_{J_s(sigma_s^{-1}(r))}: perm[x] = r  <=>  x = inv(r)
            int x = 0;
            while (perm[x] != r) ++x;
            args[s] = tuples[idx[s]][x];
          }
          prod *= b.at(std::span<const int>(args.data(), args.size()));
        }
        if (!prod.is_zero()) total += sign_so_far < 0 ? -prod : prod;
        return;
      }
      for (size_t p = 0; p < perms.size(); ++p) {
        choice[slot] = static_cast<int>(p);
        walk(slot + 1, sign_so_far * perms[p].second);
      }
    };
    walk(0, 1);
    out.at(std::span<const int>(idx.data(), idx.size())) = total * inv_mfact;
  });
  Symmetry s = detect_k2_symmetry(out);
  return MultiLinearForm(k, m, N, s, out.data());
}

MultiLinearForm extend_form(const LieAlgebra& L, const MultiLinearForm& b, int m) {
  if (b.arity() != 2) return extend_form_permutation_sum(L, b, m);
  if (b.grade() != 1 || b.dim() != L.dim())
    fail(errc::arity_grade_mismatch, "extension input must be a form on g");
  if (m < 0 || m > L.dim()) fail(errc::arity_grade_mismatch, "extension grade out of range");
  if (m == 0) {
    MultiLinearForm out(2, 0, 1, Symmetry::none);
    out.data()[0] = Rational(1);
    return out;
  }
  int n = L.dim();
  int N = static_cast<int>(binom(n, m));
  auto tuples = all_tuples(n, m);
  Mat B = b.as_matrix();
  Mat out(N, N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      Mat gram(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) gram.at(i, j) = B.at(tuples[r][i], tuples[c][j]);
      out.at(r, c) = determinant(gram);
    }
  MultiLinearForm f = MultiLinearForm::from_matrix(m, out, Symmetry::none);
  return MultiLinearForm(2, m, N, detect_k2_symmetry(f), f.data());
}

CasimirInducedForm casimir_induced_form(const LieAlgebra& L, const MultiLinearForm& C) {
  if (C.grade() != 1 || C.dim() != L.dim())
    fail(errc::bad_parameter, "Casimir tensor must be a rank-k tensor over the dual of g");
  if (!C.has_symmetry(Symmetry::symmetric)) fail(errc::bad_parameter, "Casimir tensor must be symmetric");
  int n = L.dim();
  int k = C.arity();
  Mat kappa = killing_form(L).as_matrix();

  MultiLinearForm out(k, 1, n, Symmetry::none);
  for_each_index(n, k, [&](const std::vector<int>& idx) {
    // contract C with the Killing-lowered basis arguments
    std::vector<Vec> lowered(k);
    for (int s = 0; s < k; ++s) {
      Vec row(n);
      for (int j = 0; j < n; ++j) row[j] = kappa.at(idx[s], j);
      lowered[s] = std::move(row);
    }
    out.at(std::span<const int>(idx.data(), idx.size())) = C.evaluate(lowered);
  });
  MultiLinearForm form(k, 1, n, C.has_symmetry(Symmetry::symmetric) ? Symmetry::symmetric : Symmetry::none,
                       out.data());
  CasimirInducedForm res{form, is_invariant_form(L, form)};
  return res;
}

} // namespace lieb
