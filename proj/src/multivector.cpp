#include "lieb/multivector.hpp"
#include "lieb/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lieb {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

int tuple_rank(int n, const Tuple& t) {
  int k = static_cast<int>(t.size());
  long long rank = 0;
  int prev = -1;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = prev + 1; v < t[pos]; ++v) rank += binom(n - 1 - v, k - 1 - pos);
    prev = t[pos];
  }
  return static_cast<int>(rank);
}

Tuple tuple_unrank(int n, int k, int rank) {
  Tuple t(k);
  int v = 0;
  long long r = rank;
  for (int pos = 0; pos < k; ++pos) {
    while (true) {
      long long c = binom(n - 1 - v, k - 1 - pos);
      if (r < c) break;
      r -= c;
      ++v;
    }
    t[pos] = v++;
  }
  return t;
}

std::vector<Tuple> all_tuples(int n, int k) {
  std::vector<Tuple> out;
  long long total = binom(n, k);
  out.reserve(static_cast<size_t>(total));
  for (long long r = 0; r < total; ++r) out.push_back(tuple_unrank(n, k, static_cast<int>(r)));
  return out;
}

std::optional<std::pair<Tuple, int>> sort_tuple(Tuple t) {
  int sign = 1;
  // insertion sort with transposition counting; tuples are tiny
  for (size_t i = 1; i < t.size(); ++i) {
    size_t j = i;
    while (j > 0 && t[j - 1] > t[j]) {
      std::swap(t[j - 1], t[j]);
      sign = -sign;
      --j;
    }
  }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return std::nullopt;
  return std::make_pair(std::move(t), sign);
}

MultiVector MultiVector::scalar(AlgebraPtr alg, const Rational& c) {
  MultiVector v(std::move(alg));
  v.add_term({}, c);
  return v;
}

MultiVector MultiVector::basis_element(AlgebraPtr alg, int i) {
  MultiVector v(std::move(alg));
  v.add_term({i}, Rational(1));
  return v;
}

MultiVector MultiVector::basis_tuple(AlgebraPtr alg, Tuple t) {
  MultiVector v(std::move(alg));
  v.add_term(std::move(t), Rational(1));
  return v;
}

MultiVector MultiVector::from_grade_vector(AlgebraPtr alg, int m, const Vec& coords) {
  int n = alg->dim();
  if (static_cast<long long>(coords.size()) != binom(n, m))
    fail(errc::dimension_mismatch, "grade vector has wrong length");
  MultiVector v(std::move(alg));
  for (size_t r = 0; r < coords.size(); ++r)
    if (!coords[r].is_zero()) v.add_term(tuple_unrank(n, m, static_cast<int>(r)), coords[r]);
  return v;
}

MultiVector MultiVector::from_vec(AlgebraPtr alg, const Vec& coords) {
  return from_grade_vector(std::move(alg), 1, coords);
}

std::optional<int> MultiVector::homogeneous_grade() const {
  std::optional<int> g;
  for (const auto& [t, c] : terms_) {
    int m = static_cast<int>(t.size());
    if (!g)
      g = m;
    else if (*g != m)
      return std::nullopt;
  }
  return g ? g : std::optional<int>(0);
}

int MultiVector::max_grade() const {
  int g = 0;
  for (const auto& [t, c] : terms_) g = std::max(g, static_cast<int>(t.size()));
  return g;
}

void MultiVector::add_term(Tuple t, const Rational& c) {
  if (c.is_zero()) return;
  for (int i : t)
    if (i < 0 || i >= alg_->dim()) fail(errc::dimension_mismatch, "multivector index out of range");
  auto sorted = sort_tuple(std::move(t));
  if (!sorted) return;
  auto& [key, sign] = *sorted;
  Rational v = sign < 0 ? -c : c;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(v));
  } else {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Vec MultiVector::grade_vector(int m) const {
  int n = alg_->dim();
  Vec v(static_cast<size_t>(binom(n, m)));
  for (const auto& [t, c] : terms_)
    if (static_cast<int>(t.size()) == m) v[tuple_rank(n, t)] = c;
  return v;
}

MultiVector MultiVector::grade_part(int m) const {
  MultiVector v(alg_);
  for (const auto& [t, c] : terms_)
    if (static_cast<int>(t.size()) == m) v.terms_.emplace(t, c);
  return v;
}

MultiVector MultiVector::operator-() const {
  MultiVector v(alg_);
  for (const auto& [t, c] : terms_) v.terms_.emplace(t, -c);
  return v;
}

MultiVector operator+(const MultiVector& a, const MultiVector& b) {
  require_same_algebra(a, b);
  MultiVector v = a;
  for (const auto& [t, c] : b.terms_) v.add_term(t, c);
  return v;
}

MultiVector operator-(const MultiVector& a, const MultiVector& b) {
  require_same_algebra(a, b);
  MultiVector v = a;
  for (const auto& [t, c] : b.terms_) v.add_term(t, -c);
  return v;
}

MultiVector operator*(const Rational& c, const MultiVector& a) {
  MultiVector v(a.algebra());
  if (c.is_zero()) return v;
  for (const auto& [t, x] : a.terms()) v.add_term(t, c * x);
  return v;
}

std::string MultiVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.is_negative()) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a.is_negative() ? " - " : " + ");
      if (a.is_negative()) a = -a;
    }
    first = false;
    std::string label;
    for (int i : t) label += alg_->basis_names()[i];
    if (t.empty()) {
      out << a.str();
    } else if (a == Rational(1)) {
      out << label;
    } else {
      out << a.str() << "*" << label;
    }
  }
  return out.str();
}

void require_same_algebra(const MultiVector& a, const MultiVector& b) {
  if (a.algebra() == b.algebra()) return;
  if (!a.algebra()->same_structure(*b.algebra()))
    fail(errc::algebra_mismatch, "multivectors over different algebras");
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  require_same_algebra(a, b);
  MultiVector v(a.algebra());
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) {
      Tuple u = s;
      u.insert(u.end(), t.begin(), t.end());
      v.add_term(std::move(u), cs * ct);
    }
  return v;
}

MultiVector schouten(const MultiVector& a, const MultiVector& b) {
  require_same_algebra(a, b);
  const LieAlgebra& L = *a.algebra();
  MultiVector out(a.algebra());
  for (const auto& [s, cs] : a.terms()) {
    if (s.empty()) continue; // scalars are central
    for (const auto& [t, ct] : b.terms()) {
      if (t.empty()) continue;
      Rational c0 = cs * ct;
      for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = 0; j < t.size(); ++j) {
          SparseVec br = L.bracket(s[i], t[j]);
          if (br.empty()) continue;
          // (-1)^{i+j} with 1-based positions
          bool neg = ((i + j) % 2) != 0;
          Tuple rest;
          rest.reserve(s.size() + t.size() - 1);
          rest.push_back(0); // placeholder for the bracket component
          for (size_t p = 0; p < s.size(); ++p)
            if (p != i) rest.push_back(s[p]);
          for (size_t q = 0; q < t.size(); ++q)
            if (q != j) rest.push_back(t[q]);
          for (const auto& [k, coeff] : br) {
            rest[0] = k;
            out.add_term(rest, neg ? -(c0 * coeff) : c0 * coeff);
          }
        }
    }
  }
  return out;
}

EndoMap lambda_power(const LieAlgebra& L, const Mat& T, int m, LambdaMode mode) {
  int n = L.dim();
  if (T.rows() != n || T.cols() != n) fail(errc::dimension_mismatch, "lambda power of non-endomorphism");
  if (m < 0 || m > n) fail(errc::grade_out_of_range, "grade out of range for lambda power");
  int N = static_cast<int>(binom(n, m));
  Mat out(N, N);
  if (m == 0) {
    if (mode == LambdaMode::multiplicative) out.at(0, 0) = Rational(1);
    return {0, out};
  }
  auto tuples = all_tuples(n, m);
  for (int col = 0; col < N; ++col) {
    const Tuple& J = tuples[col];
    std::map<Tuple, Rational> terms;
    auto add = [&](Tuple t, const Rational& c) {
      if (c.is_zero()) return;
      auto sorted = sort_tuple(std::move(t));
      if (!sorted) return;
      Rational v = sorted->second < 0 ? -c : c;
      auto it = terms.find(sorted->first);
      if (it == terms.end())
        terms.emplace(sorted->first, v);
      else {
        it->second += v;
        if (it->second.is_zero()) terms.erase(it);
      }
    };
    if (mode == LambdaMode::derivation) {
      for (int pos = 0; pos < m; ++pos) {
        for (int r = 0; r < n; ++r) {
          const Rational& c = T.at(r, J[pos]);
          if (c.is_zero()) continue;
          Tuple t = J;
          t[pos] = r;
          add(std::move(t), c);
        }
      }
    } else {
      // expand product of columns T e_{J(1)} ^ ... ^ T e_{J(m)}
      std::vector<int> choice(m, 0);
      std::function<void(int, Rational, Tuple&)> walk = [&](int pos, Rational c, Tuple& partial) {
        if (c.is_zero()) return;
        if (pos == m) {
          add(partial, c);
          return;
        }
        for (int r = 0; r < n; ++r) {
          const Rational& x = T.at(r, J[pos]);
          if (x.is_zero()) continue;
          partial.push_back(r);
          walk(pos + 1, c * x, partial);
          partial.pop_back();
        }
      };
      Tuple partial;
      partial.reserve(m);
      walk(0, Rational(1), partial);
    }
    for (const auto& [t, c] : terms) out.at(tuple_rank(n, t), col) = c;
  }
  return {m, out};
}

EndoMap adjoint(const LieAlgebra& L, const MultiVector& v) {
  auto g = v.homogeneous_grade();
  if (!g || (*g != 1 && !v.is_zero())) fail(errc::grade_mismatch, "adjoint expects a grade-1 argument");
  return adjoint(L, v.grade_vector(1));
}

AnnihilatorSpan annihilator_span(const MultiVector& w) {
  if (w.is_zero()) fail(errc::zero_input, "annihilator span of zero");
  auto g = w.homogeneous_grade();
  if (!g) fail(errc::mixed_grade, "annihilator span needs a homogeneous argument");
  int m = *g;
  if (m < 1) fail(errc::grade_mismatch, "annihilator span needs grade >= 1");
  const AlgebraPtr& alg = w.algebra();
  int n = alg->dim();
  AnnihilatorSpan res;
  if (m == n) {
    res.span = Subspace::full(n);
    res.decomposable = true;
    return res;
  }
  int rows = static_cast<int>(binom(n, m + 1));
  Mat sys(rows, n);
  for (int i = 0; i < n; ++i) {
    MultiVector img = wedge(MultiVector::basis_element(alg, i), w);
    Vec col = img.grade_vector(m + 1);
    for (int r = 0; r < rows; ++r) sys.at(r, i) = col[r];
  }
  res.span = Subspace::span(n, kernel_basis(sys));
  res.decomposable = res.span.dim() == m;
  return res;
}

} // namespace lieb
