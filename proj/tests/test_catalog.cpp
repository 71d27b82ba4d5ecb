#include "lieb/catalog.hpp"
#include "lieb/error.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace lieb;

TEST_CASE("catalog names and parameters") {
  CHECK(catalog_names().size() == 11);
  CHECK_THROWS_AS(static_cast<void>(catalog_algebra("nope")), Error);
  CHECK_THROWS_AS(static_cast<void>(catalog_algebra("sl2", {Rational(1)})), Error);
  CHECK_THROWS_AS(static_cast<void>(catalog_algebra("r3_lambda")), Error);
  CHECK_THROWS_AS(static_cast<void>(catalog_algebra("r3_lambda", {Rational(2)})), Error);
  CHECK_THROWS_AS(static_cast<void>(catalog_algebra("r3_lambda_p", {Rational(0)})), Error);
}

TEST_CASE("catalog brackets match the printed relations") {
  auto su2 = catalog_algebra("su2");
  // [e1,e2]=e3, [e1,e3]=-e2, [e3,e2]=-e1
  CHECK(su2.algebra->bracket(0, 1) == SparseVec{{2, Rational(1)}});
  CHECK(su2.algebra->bracket(0, 2) == SparseVec{{1, Rational(-1)}});
  CHECK(su2.algebra->bracket(2, 1) == SparseVec{{0, Rational(-1)}});

  auto r3l = catalog_algebra("r3_lambda", {Rational(1, 2)});
  CHECK(r3l.algebra->bracket(2, 1) == SparseVec{{1, Rational(1, 2)}}); // [e3,e2] = (1/2) e2

  auto so32 = catalog_algebra("so32");
  CHECK(so32.algebra->dim() == 10);
  // [R+,R-] = -4(K3+J3)
  CHECK(so32.algebra->bracket(6, 7) == SparseVec{{0, Rational(-4)}, {1, Rational(-4)}});

  auto so22 = catalog_algebra("so22");
  CHECK(so22.algebra->dim() == 6);
  // the two copies commute
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) CHECK(so22.algebra->bracket(i, j).empty());
}

TEST_CASE("full fixture regression") {
  for (const auto& name : catalog_names()) {
    std::vector<Rational> params;
    if (catalog_requires_parameter(name)) params.push_back(Rational(1, 2));
    auto checks = run_fixture_checks(name, params);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
      CAPTURE(name);
      CAPTURE(c.label);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
  }
  // a second parameter point for the lambda families
  for (const auto& name : {"r3_lambda", "r3_lambda_p"}) {
    for (const auto& c : run_fixture_checks(name, {Rational(-1, 2)})) {
      CAPTURE(name);
      CAPTURE(c.label);
      CHECK(c.pass);
    }
  }
  for (const auto& c : run_fixture_checks("r3_lambda", {Rational(0)})) {
    CAPTURE(c.label);
    CHECK(c.pass);
  }
}
