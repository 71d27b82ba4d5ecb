#include "lieb/gradation.hpp"
#include "lieb/error.hpp"

#include <algorithm>

namespace lieb {

namespace {

Rational mod_coord(const Rational& x, long q) {
  // x integer, reduce into [0,q)
  BigInt r = x.num() % BigInt(q);
  if (r.is_negative()) r = r + BigInt(q);
  return Rational(r, BigInt(1));
}

std::string degree_str(const Degree& d) {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += d[i].str();
  }
  return s + ")";
}

} // namespace

Degree Gradation::star(const Degree& a, const Degree& b) const {
  Degree r(group_.rank());
  for (int i = 0; i < group_.rank(); ++i) {
    r[i] = a[i] + b[i];
    if (group_.moduli[i] > 0) r[i] = mod_coord(r[i], group_.moduli[i]);
  }
  return r;
}

Degree Gradation::degree_of_tuple(const Tuple& t) const {
  Degree d = zero();
  for (int i : t) d = star(d, degrees_[i]);
  return d;
}

Gradation load_gradation(const LieAlgebra& L, const GradationDoc& doc) {
  int n = L.dim();
  if (static_cast<int>(doc.degrees.size()) != n)
    fail(errc::dimension_mismatch, "gradation must assign a degree per basis vector");
  for (long q : doc.group.moduli)
    if (q < 0) fail(errc::modulus_violation, "negative modulus");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(doc.degrees[i].size()) != doc.group.rank())
      fail(errc::dimension_mismatch, "degree rank mismatch on basis vector " + L.basis_names()[i]);
    for (int c = 0; c < doc.group.rank(); ++c) {
      long q = doc.group.moduli[c];
      if (q > 0) {
        const Rational& x = doc.degrees[i][c];
        if (!x.is_integer() || x.is_negative() || !(x < Rational(q)))
          fail(errc::modulus_violation, "cyclic coordinate of " + L.basis_names()[i] +
                                            " must be an integer in [0," + std::to_string(q) + ")");
      }
    }
  }
  Gradation G(doc.group, doc.degrees);
  for (const auto& [key, result] : L.entries()) {
    Degree expected = G.star(doc.degrees[key.first], doc.degrees[key.second]);
    for (const auto& [k, coeff] : result) {
      if (doc.degrees[k] != expected)
        fail(errc::closure_violation,
             "bracket [" + L.basis_names()[key.first] + "," + L.basis_names()[key.second] +
                 "] has component " + L.basis_names()[k] + " of degree " + degree_str(doc.degrees[k]) +
                 ", expected " + degree_str(expected));
    }
  }
  return G;
}

Subspace Decomposition::fiber_subspace(const LieAlgebra& L, const Degree& d) const {
  int N = static_cast<int>(binom(L.dim(), grade));
  auto it = fibers.find(d);
  if (it == fibers.end()) return Subspace::zero(N);
  Mat rows(static_cast<int>(it->second.size()), N);
  for (size_t r = 0; r < it->second.size(); ++r) rows.at(static_cast<int>(r), it->second[r]) = Rational(1);
  return Subspace::span(N, rows);
}

Decomposition induced_decomposition(const LieAlgebra& L, const Gradation& G, int m) {
  if (m < 0 || m > L.dim()) fail(errc::grade_out_of_range, "decomposition grade");
  Decomposition dec;
  dec.grade = m;
  auto tuples = all_tuples(L.dim(), m);
  for (size_t r = 0; r < tuples.size(); ++r)
    dec.fibers[G.degree_of_tuple(tuples[r])].push_back(static_cast<int>(r));
  return dec;
}

namespace {

bool is_zero_degree(const Degree& d) {
  return std::all_of(d.begin(), d.end(), [](const Rational& x) { return x.is_zero(); });
}

} // namespace

GradationReport gradation_report(const LieAlgebra& L, const Gradation& G) {
  GradationReport rep;
  int n = L.dim();

  // ---- root detection ----
  std::vector<int> zero_basis, nonzero_basis;
  for (int i = 0; i < n; ++i)
    (is_zero_degree(G.degree_of(i)) ? zero_basis : nonzero_basis).push_back(i);
  int free_rank = 0;
  for (long q : G.group().moduli)
    if (q == 0) ++free_rank;

  rep.is_root = true;
  if (static_cast<int>(zero_basis.size()) != free_rank ||
      free_rank != G.group().rank()) {
    rep.is_root = false;
    rep.root_failure = "degree-zero part has dimension " + std::to_string(zero_basis.size()) +
                       ", free rank is " + std::to_string(free_rank);
  }
  if (rep.is_root) {
    // degree-zero part must be abelian
    for (int a : zero_basis)
      for (int b : zero_basis)
        if (!L.bracket(a, b).empty()) {
          rep.is_root = false;
          rep.root_failure = "degree-zero part is not abelian";
        }
  }
  if (rep.is_root) {
    // simultaneous eigenvector condition with one functional per degree
    std::map<Degree, Vec, DegreeLess> functionals;
    for (int x : nonzero_basis) {
      const Degree& alpha = G.degree_of(x);
      Vec lambda(zero_basis.size());
      for (size_t e = 0; e < zero_basis.size() && rep.is_root; ++e) {
        Vec img(n);
        for (const auto& [k, c] : L.bracket(zero_basis[e], x)) img[k] = c;
        // img must be a multiple of e_x
        Rational factor = img[x];
        img[x] = Rational(0);
        for (int j = 0; j < n; ++j)
          if (!img[j].is_zero()) {
            rep.is_root = false;
            rep.root_failure = L.basis_names()[x] + " is not an eigenvector of the degree-zero action";
          }
        lambda[e] = factor;
      }
      if (!rep.is_root) break;
      auto it = functionals.find(alpha);
      if (it == functionals.end())
        functionals.emplace(alpha, lambda);
      else if (it->second != lambda) {
        rep.is_root = false;
        rep.root_failure = "degree " + degree_str(alpha) + " carries two different eigenvalue functionals";
      }
    }
    if (rep.is_root) {
      // T extends by T(0) = 0; require injectivity on occurring degrees and
      // additivity whenever alpha, beta and alpha*beta all occur.
      functionals.emplace(G.zero(), Vec(zero_basis.size(), Rational(0)));
      for (auto it1 = functionals.begin(); it1 != functionals.end() && rep.is_root; ++it1)
        for (auto it2 = std::next(it1); it2 != functionals.end(); ++it2)
          if (it1->second == it2->second) {
            rep.is_root = false;
            rep.root_failure = "degree-to-functional map is not injective on occurring degrees";
            break;
          }
      if (rep.is_root) {
        for (const auto& [a, la] : functionals) {
          for (const auto& [b, lb] : functionals) {
            Degree ab = G.star(a, b);
            auto it = functionals.find(ab);
            if (it == functionals.end()) continue;
            for (size_t e = 0; e < la.size(); ++e)
              if (it->second[e] != la[e] + lb[e]) {
                rep.is_root = false;
                rep.root_failure = "degree-to-functional map is not additive on occurring degrees";
              }
          }
        }
      }
      if (rep.is_root) rep.eigenvalue_functionals = std::move(functionals);
    }
  }

  // ---- limit degrees of Lambda^2 ----
  Decomposition d2 = induced_decomposition(L, G, 2);
  Decomposition d3 = induced_decomposition(L, G, 3);
  for (const auto& [alpha, fiber] : d2.fibers) {
    Degree doubled = G.star(alpha, alpha);
    if (!d3.fibers.count(doubled)) rep.limit_degrees.push_back(alpha);
  }

  // ---- Schouten compatibility of the induced decomposition ----
  rep.schouten_compatible = true;
  AlgebraPtr alg = L.ptr();
  for (int p = 1; p <= 2 && rep.schouten_compatible; ++p) {
    for (int q = 1; q <= 2 && rep.schouten_compatible; ++q) {
      if (p + q - 1 > n) continue;
      auto tp = all_tuples(n, p);
      auto tq = all_tuples(n, q);
      for (const auto& a : tp) {
        for (const auto& b : tq) {
          MultiVector br = schouten(MultiVector::basis_tuple(alg, a), MultiVector::basis_tuple(alg, b));
          Degree expected = G.star(G.degree_of_tuple(a), G.degree_of_tuple(b));
          for (const auto& [t, c] : br.terms())
            if (G.degree_of_tuple(t) != expected) rep.schouten_compatible = false;
        }
      }
    }
  }
  return rep;
}

} // namespace lieb
