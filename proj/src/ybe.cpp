#include "lieb/ybe.hpp"
#include "lieb/error.hpp"

#include <algorithm>

namespace lieb {

namespace {

void require_grade(const MultiVector& r, int m, const char* what) {
  auto g = r.homogeneous_grade();
  if (!g || (*g != m && !r.is_zero())) fail(errc::grade_mismatch, what);
}

} // namespace

MultiVector mcybe_residual(const LieAlgebra& L, const MultiVector& r) {
  (void)L;
  require_grade(r, 2, "Yang-Baxter residual expects a grade-2 argument");
  return schouten(r, r);
}

RMatrixVerdict certify_r(const LieAlgebra& L, const MultiVector& r) {
  RMatrixVerdict v{mcybe_residual(L, r), false, false, std::nullopt};
  v.is_cybe = v.residual.is_zero();
  Subspace inv = invariant_subspace(L, 3);
  auto coords = inv.coordinates(v.residual.grade_vector(3));
  v.is_mcybe = coords.has_value();
  if (coords) v.witness = std::move(coords);
  return v;
}

Mat cocommutator(const LieAlgebra& L, const MultiVector& r) {
  require_grade(r, 2, "cocommutator expects a grade-2 r-matrix");
  int n = L.dim();
  int N = static_cast<int>(binom(n, 2));
  Mat delta(N, n);
  for (int i = 0; i < n; ++i) {
    MultiVector img = schouten(MultiVector::basis_element(r.algebra(), i), r);
    Vec col = img.grade_vector(2);
    for (int k = 0; k < N; ++k) delta.at(k, i) = col[k];
  }
  return delta;
}

bool cocommutator_cojacobi(const LieAlgebra& L, const Mat& delta) {
  // bracket on g*: [xi, eta]_*(v) = (xi ^ eta)(delta(v)); in coordinates the
  // structure constants are f_{ab}^c = delta[(rank of {a,b})][c] with the sign
  // of sorting (a,b).
  int n = L.dim();
  auto f = [&](int a, int b, int c) -> Rational {
    if (a == b) return Rational(0);
    Tuple t = {a, b};
    auto sorted = sort_tuple(t);
    Rational val = delta.at(tuple_rank(n, sorted->first), c);
    return sorted->second < 0 ? -val : val;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Rational total;
          for (int e = 0; e < n; ++e) {
            total += f(a, b, e) * f(e, c, d);
            total += f(b, c, e) * f(e, a, d);
            total += f(c, a, e) * f(e, b, d);
          }
          if (!total.is_zero()) return false;
        }
  return true;
}

bool same_coproduct(const LieAlgebra& L, const MultiVector& r1, const MultiVector& r2) {
  require_grade(r1, 2, "coproduct comparison expects grade-2 r-matrices");
  require_grade(r2, 2, "coproduct comparison expects grade-2 r-matrices");
  Subspace inv = invariant_subspace(L, 2);
  bool member = inv.contains((r1 - r2).grade_vector(2));
  bool matrices_equal = cocommutator(L, r1) == cocommutator(L, r2);
  if (member != matrices_equal)
    throw std::logic_error("coproduct membership test disagrees with cocommutator matrices");
  return member;
}

int orbit_dimension(const LieAlgebra& L, const MultiVector& w) {
  auto g = w.homogeneous_grade();
  if (!g) fail(errc::mixed_grade, "orbit dimension expects a homogeneous multivector");
  int m = w.is_zero() ? 1 : *g;
  int n = L.dim();
  int N = static_cast<int>(binom(n, m));
  Mat theta(N, n);
  for (int i = 0; i < n; ++i) {
    MultiVector img = schouten(MultiVector::basis_element(w.algebra(), i), w);
    Vec col = img.grade_vector(m);
    for (int k = 0; k < N; ++k) theta.at(k, i) = col[k];
  }
  return rank_of(theta);
}

Rational quadratic_separator(const LieAlgebra& L, const MultiLinearForm& b, const MultiVector& r) {
  if (b.arity() != 2) fail(errc::arity_mismatch, "separator needs a bilinear form");
  if (b.grade() != 2 || b.dim() != static_cast<int>(binom(L.dim(), 2)))
    fail(errc::arity_mismatch, "separator form must live on grade-2 multivectors");
  require_grade(r, 2, "separator expects a grade-2 argument");
  Vec v = r.grade_vector(2);
  return b.evaluate({v, v});
}

Vec Cochain::eval(const Tuple& t, int coeff_dim) const {
  auto sorted = sort_tuple(t);
  if (!sorted) return Vec(coeff_dim);
  auto it = coeff.find(sorted->first);
  if (it == coeff.end()) return Vec(coeff_dim);
  Vec v = it->second;
  if (sorted->second < 0)
    for (auto& x : v) x = -x;
  return v;
}

Cochain ce_differential(const LieAlgebra& L, const ReducedSpace* R, const Cochain& c) {
  int n = L.dim();
  if (c.degree >= n + 1) fail(errc::degree_overflow, "cochain degree exceeds the algebra dimension");
  int coeff_dim = R ? R->quotient_dim() : static_cast<int>(binom(n, 2));
  if (static_cast<bool>(R) != c.reduced)
    fail(errc::dimension_mismatch, "cochain coefficient space does not match the requested complex");

  AlgebraPtr alg = L.ptr();
  std::vector<Mat> action;
  if (R) {
    // reduced module action: project after acting on a lifted representative
    for (int i = 0; i < n; ++i) {
      Mat m(coeff_dim, coeff_dim);
      for (int j = 0; j < coeff_dim; ++j) {
        Vec unit(coeff_dim);
        unit[j] = Rational(1);
        MultiVector lifted = R->lift(unit);
        Vec img = R->project(schouten(MultiVector::basis_element(alg, i), lifted));
        for (int k = 0; k < coeff_dim; ++k) m.at(k, j) = img[k];
      }
      action.push_back(std::move(m));
    }
  } else {
    action = module_action(L, 2);
  }

  Cochain out;
  out.degree = c.degree + 1;
  out.reduced = c.reduced;
  for (const Tuple& I : all_tuples(n, c.degree + 1)) {
    Vec val(coeff_dim);
    // first sum: action of e_{I_t} on the omitted-index coefficient
    for (size_t t = 0; t < I.size(); ++t) {
      Tuple rest;
      for (size_t s = 0; s < I.size(); ++s)
        if (s != t) rest.push_back(I[s]);
      Vec w = c.eval(rest, coeff_dim);
      bool zero = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
      if (zero) continue;
      Vec acted = action[I[t]].apply(w);
      Rational sign((t % 2) ? -1 : 1);
      for (int k = 0; k < coeff_dim; ++k) val[k] += sign * acted[k];
    }
    // second sum: contraction of the bracket into the cochain
    for (size_t s = 0; s < I.size(); ++s)
      for (size_t t = s + 1; t < I.size(); ++t) {
        Rational sign(((s + t) % 2) ? -1 : 1); // (-1)^{p+q} with 1-based p,q
        for (const auto& [k, coeff] : L.bracket(I[s], I[t])) {
          Tuple arg;
          arg.push_back(k);
          for (size_t u = 0; u < I.size(); ++u)
            if (u != s && u != t) arg.push_back(I[u]);
          Vec w = c.eval(arg, coeff_dim);
          for (int x = 0; x < coeff_dim; ++x) val[x] += sign * coeff * w[x];
        }
      }
    bool zero = std::all_of(val.begin(), val.end(), [](const Rational& x) { return x.is_zero(); });
    if (!zero) out.coeff.emplace(I, std::move(val));
  }
  return out;
}

} // namespace lieb
