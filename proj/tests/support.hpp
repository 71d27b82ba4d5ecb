#ifndef LIEB_TESTS_SUPPORT_HPP
#define LIEB_TESTS_SUPPORT_HPP

#include "lieb/catalog.hpp"
#include "lieb/ybe.hpp"

#include <vector>

namespace lieb::testing {

// xorshift64: deterministic across platforms, fixed seeds per test site
struct Rng {
  unsigned long long state;
  explicit Rng(unsigned long long seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  unsigned long long next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
  }
  Rational rational(long long max_num = 9, long long max_den = 3) {
    return Rational(int_in(-max_num, max_num), int_in(1, max_den));
  }
  /// sparse homogeneous multivector with up to `max_terms` nonzero terms
  MultiVector multivector(const AlgebraPtr& alg, int grade, int max_terms = 3) {
    MultiVector v(alg);
    long long count = binom(alg->dim(), grade);
    for (int t = 0; t < max_terms; ++t) {
      int idx = static_cast<int>(int_in(0, count - 1));
      v.add_term(tuple_unrank(alg->dim(), grade, idx), rational());
    }
    return v;
  }
  Vec vec(int n, long long max_num = 9) {
    Vec v(n);
    for (auto& x : v) x = rational(max_num);
    return v;
  }
};

/// Catalog instances used by the property suites; parameterized entries are
/// instantiated at fixed rational parameters.
inline std::vector<std::pair<std::string, CatalogAlgebra>> full_catalog() {
  std::vector<std::pair<std::string, CatalogAlgebra>> out;
  for (const auto& name : catalog_names()) {
    if (name == "r3_lambda") {
      out.emplace_back("r3_lambda(1/2)", catalog_algebra(name, {Rational(1, 2)}));
      out.emplace_back("r3_lambda(-1/2)", catalog_algebra(name, {Rational(-1, 2)}));
      out.emplace_back("r3_lambda(0)", catalog_algebra(name, {Rational(0)}));
    } else if (name == "r3_lambda_p") {
      out.emplace_back("r3_lambda_p(1/2)", catalog_algebra(name, {Rational(1, 2)}));
      out.emplace_back("r3_lambda_p(-3/4)", catalog_algebra(name, {Rational(-3, 4)}));
    } else {
      out.emplace_back(name, catalog_algebra(name));
    }
  }
  return out;
}

inline std::vector<std::pair<std::string, CatalogAlgebra>> small_catalog() {
  auto all = full_catalog();
  std::vector<std::pair<std::string, CatalogAlgebra>> out;
  for (auto& e : all)
    if (e.second.algebra->dim() <= 6) out.push_back(std::move(e));
  return out;
}

} // namespace lieb::testing

#endif
