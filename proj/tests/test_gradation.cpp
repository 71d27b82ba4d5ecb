#include "lieb/gradation.hpp"
#include "lieb/catalog.hpp"
#include "lieb/error.hpp"
#include "lieb/ybe.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace lieb;

namespace {

GradationDoc doc1(std::vector<long long> degs, long modulus = 0) {
  GradationDoc d;
  d.group.moduli = {modulus};
  for (long long x : degs) d.degrees.push_back({Rational(x)});
  return d;
}

} // namespace

TEST_CASE("gradation loading and closure") {
  auto sl2 = catalog_algebra("sl2");
  CHECK_NOTHROW(static_cast<void>(load_gradation(*sl2.algebra, doc1({0, 1, -1}))));

  auto su2 = catalog_algebra("su2");
  CHECK_NOTHROW(static_cast<void>(load_gradation(*su2.algebra, doc1({0, 1, 1}, 2))));

  auto h = catalog_algebra("h");
  try {
    static_cast<void>(load_gradation(*h.algebra, doc1({1, 2, 4})));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::closure_violation);
    CHECK(std::string(e.what()).find("e3") != std::string::npos);
  }

  // cyclic coordinates must hold integers in range
  GradationDoc bad = doc1({0, 1, 3}, 2);
  try {
    static_cast<void>(load_gradation(*su2.algebra, bad));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::modulus_violation);
  }
}

TEST_CASE("induced decomposition partitions the canonical basis") {
  for (const auto& [name, cat] : testing::full_catalog()) {
    CAPTURE(name);
    int n = cat.algebra->dim();
    for (const auto& G : cat.gradations) {
      for (int m = 1; m <= std::min(3, n); ++m) {
        Decomposition dec = induced_decomposition(*cat.algebra, G, m);
        long long total = 0;
        for (const auto& [deg, fiber] : dec.fibers) {
          CHECK(!fiber.empty()); // empty fibers omitted
          total += static_cast<long long>(fiber.size());
        }
        CHECK(total == binom(n, m));
      }
    }
  }
}

TEST_CASE("all-zero degrees give the trivial decomposition") {
  auto sl2 = catalog_algebra("sl2");
  Gradation G = load_gradation(*sl2.algebra, doc1({0, 0, 0}));
  Decomposition dec = induced_decomposition(*sl2.algebra, G, 2);
  REQUIRE(dec.fibers.size() == 1);
  CHECK(dec.fibers.begin()->second.size() == 3);
}

TEST_CASE("root flags across the catalog") {
  std::map<std::string, std::vector<bool>> expect = {
      {"sl2", {true}},      {"su2", {false}},        {"h", {false}},
      {"r3_0p", {false}},   {"r3_m1", {true}},       {"r3_1", {true, false}},
      {"r3", {false}},      {"r3_lambda(1/2)", {true}}, {"r3_lambda(-1/2)", {true}},
      {"r3_lambda(0)", {false}}, {"r3_lambda_p(1/2)", {false}}, {"r3_lambda_p(-3/4)", {false}},
      {"so22", {true}},     {"so32", {true}}};
  for (const auto& [name, cat] : testing::full_catalog()) {
    CAPTURE(name);
    REQUIRE(expect.count(name));
    REQUIRE(cat.gradations.size() == expect[name].size());
    for (size_t gi = 0; gi < cat.gradations.size(); ++gi) {
      GradationReport rep = gradation_report(*cat.algebra, cat.gradations[gi]);
      CHECK(rep.is_root == expect[name][gi]);
      CHECK(rep.schouten_compatible);
    }
  }
}

TEST_CASE("schouten respects the grading on random homogeneous elements") {
  testing::Rng rng(2718);
  for (const auto& [name, cat] : testing::full_catalog()) {
    CAPTURE(name);
    int n = cat.algebra->dim();
    for (const auto& G : cat.gradations) {
      for (int t = 0; t < (n > 6 ? 4 : 12); ++t) {
        int p = static_cast<int>(rng.int_in(1, std::min(3, n)));
        int q = static_cast<int>(rng.int_in(1, std::min(3, n)));
        Decomposition dp = induced_decomposition(*cat.algebra, G, p);
        Decomposition dq = induced_decomposition(*cat.algebra, G, q);
        // pick random fibers and random elements inside them
        auto pick = [&](const Decomposition& d) {
          int which = static_cast<int>(rng.int_in(0, static_cast<long long>(d.fibers.size()) - 1));
          auto it = d.fibers.begin();
          std::advance(it, which);
          MultiVector v(cat.algebra);
          for (int idx : it->second)
            v.add_term(tuple_unrank(n, d.grade, idx), rng.rational());
          return std::make_pair(it->first, v);
        };
        auto [alpha, a] = pick(dp);
        auto [beta, b] = pick(dq);
        MultiVector br = schouten(a, b);
        Degree expected = G.star(alpha, beta);
        for (const auto& [tup, c] : br.terms()) CHECK(G.degree_of_tuple(tup) == expected);
      }
    }
  }
}

TEST_CASE("limit degrees certify classical Yang-Baxter solutions") {
  testing::Rng rng(31415);
  for (const auto& [name, cat] : testing::full_catalog()) {
    CAPTURE(name);
    int n = cat.algebra->dim();
    for (const auto& G : cat.gradations) {
      GradationReport rep = gradation_report(*cat.algebra, G);
      Decomposition d2 = induced_decomposition(*cat.algebra, G, 2);
      for (const Degree& alpha : rep.limit_degrees) {
        const auto& fiber = d2.fibers.at(alpha);
        for (int t = 0; t < 5; ++t) {
          MultiVector r(cat.algebra);
          for (int idx : fiber) r.add_term(tuple_unrank(n, 2, idx), rng.rational());
          CHECK(schouten(r, r).is_zero());
        }
      }
    }
  }
}

TEST_CASE("root gradations make the zero-part wedge solve the classical equation") {
  testing::Rng rng(9);
  for (const auto& [name, cat] : testing::full_catalog()) {
    CAPTURE(name);
    for (const auto& G : cat.gradations) {
      GradationReport rep = gradation_report(*cat.algebra, G);
      if (!rep.is_root) continue;
      std::vector<int> zero_idx;
      for (int i = 0; i < cat.algebra->dim(); ++i) {
        bool zero = true;
        for (const auto& x : G.degree_of(i))
          if (!x.is_zero()) zero = false;
        if (zero) zero_idx.push_back(i);
      }
      for (int t = 0; t < 5; ++t) {
        MultiVector r(cat.algebra);
        for (size_t a = 0; a < zero_idx.size(); ++a)
          for (size_t b = a + 1; b < zero_idx.size(); ++b)
            r.add_term({zero_idx[a], zero_idx[b]}, rng.rational());
        CHECK(schouten(r, r).is_zero());
      }
    }
  }
}

TEST_CASE("invariants split across the gradation fibers") {
  // projecting an invariant onto each degree fiber yields invariants
  for (const auto& [name, cat] : testing::small_catalog()) {
    CAPTURE(name);
    int n = cat.algebra->dim();
    for (const auto& G : cat.gradations) {
      for (int m = 2; m <= std::min(3, n); ++m) {
        Subspace inv = invariant_subspace(*cat.algebra, m);
        Decomposition dec = induced_decomposition(*cat.algebra, G, m);
        for (int r = 0; r < inv.dim(); ++r) {
          Vec row = inv.basis().row(r);
          for (const auto& [deg, fiber] : dec.fibers) {
            Vec proj(row.size());
            for (int idx : fiber) proj[idx] = row[idx];
            CHECK(inv.contains(proj));
          }
        }
      }
    }
  }
}

TEST_CASE("root gradations confine invariants to degree zero") {
  for (const auto& [name, cat] : testing::full_catalog()) {
    CAPTURE(name);
    for (const auto& G : cat.gradations) {
      GradationReport rep = gradation_report(*cat.algebra, G);
      if (!rep.is_root) continue;
      int n = cat.algebra->dim();
      for (int m = 2; m <= std::min(3, n); ++m) {
        Subspace inv = invariant_subspace(*cat.algebra, m);
        Decomposition dec = induced_decomposition(*cat.algebra, G, m);
        Subspace zero_fiber = dec.fiber_subspace(*cat.algebra, G.zero());
        CHECK(zero_fiber.contains(inv));
      }
    }
  }
}

TEST_CASE("three-dimensional gradations have a single top fiber") {
  for (const auto& [name, cat] : testing::full_catalog()) {
    if (cat.algebra->dim() != 3) continue;
    CAPTURE(name);
    for (const auto& G : cat.gradations)
      CHECK(induced_decomposition(*cat.algebra, G, 3).fibers.size() == 1);
  }
}

TEST_CASE("decomposition grade bounds") {
  auto sl2 = catalog_algebra("sl2");
  try {
    static_cast<void>(induced_decomposition(*sl2.algebra, sl2.gradations[0], 5));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::grade_out_of_range);
  }
}
