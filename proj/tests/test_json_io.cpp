#include "lieb/json_io.hpp"
#include "lieb/error.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace lieb;

TEST_CASE("algebra document round trip") {
  json j = json::parse(R"({
    "name": "sl2",
    "dim": 3,
    "basis": ["e1", "e2", "e3"],
    "brackets": [
      {"i": 1, "j": 2, "result": {"2": 1}},
      {"i": 1, "j": 3, "result": {"3": "-1"}},
      {"i": 2, "j": 3, "result": {"1": "1"}}
    ]
  })");
  AlgebraPtr L = LieAlgebra::create(algebra_doc_from_json(j));
  CHECK(L->same_structure(*catalog_algebra("sl2").algebra));
  json back = algebra_doc_to_json(*L);
  AlgebraPtr L2 = LieAlgebra::create(algebra_doc_from_json(back));
  CHECK(L2->same_structure(*L));
}

TEST_CASE("gradation document parsing") {
  json j = json::parse(R"({
    "group": {"rank": 1, "moduli": [0]},
    "degrees": [["0"], ["1"], ["-1"]]
  })");
  auto sl2 = catalog_algebra("sl2");
  Gradation G = load_gradation(*sl2.algebra, gradation_doc_from_json(j));
  CHECK(G.degree_of(1) == Degree{Rational(1)});
  json back = gradation_to_json(G);
  Gradation G2 = load_gradation(*sl2.algebra, gradation_doc_from_json(back));
  CHECK(G2.degrees() == G.degrees());
}

TEST_CASE("multivector json round trip") {
  auto sl2 = catalog_algebra("sl2");
  testing::Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    MultiVector v = rng.multivector(sl2.algebra, 2);
    v.add_term({0}, rng.rational());
    MultiVector back = multivector_from_json(sl2.algebra, multivector_to_json(v));
    CHECK(back == v);
  }
  MultiVector w = multivector_from_json(sl2.algebra, json::parse(R"({"terms": {"1,2": "3/2"}})"));
  CHECK(w == Rational(3, 2) * MultiVector::basis_tuple(sl2.algebra, {0, 1}));
}

TEST_CASE("expression parsing") {
  auto sl2 = catalog_algebra("sl2");
  MultiVector v = parse_multivector(sl2.algebra, "3/2*e12 - e13 + e123");
  CHECK(v.terms().size() == 3);
  CHECK(v.terms().at({0, 1}) == Rational(3, 2));
  CHECK(v.terms().at({0, 2}) == Rational(-1));
  CHECK(v.terms().at({0, 1, 2}) == Rational(1));

  CHECK(parse_multivector(sl2.algebra, "e2e1") == -MultiVector::basis_tuple(sl2.algebra, {0, 1}));
  CHECK(parse_multivector(sl2.algebra, "2") == MultiVector::scalar(sl2.algebra, Rational(2)));
  CHECK_THROWS_AS(static_cast<void>(parse_multivector(sl2.algebra, "e12 e13")), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_multivector(sl2.algebra, "e4")), Error);

  auto so32 = catalog_algebra("so32");
  MultiVector r = parse_multivector(so32.algebra, "JpKp - 2*J3Rm");
  CHECK(r.terms().at({2, 4}) == Rational(1));
  CHECK(r.terms().at({0, 7}) == Rational(-2));

  // expressions round trip through the printed form
  testing::Rng rng(12);
  for (const auto& [name, cat] : testing::small_catalog()) {
    for (int t = 0; t < 10; ++t) {
      MultiVector v2 = rng.multivector(cat.algebra, static_cast<int>(rng.int_in(1, 2)));
      if (v2.is_zero()) continue;
      CHECK(parse_multivector(cat.algebra, v2.str()) == v2);
    }
  }
}

TEST_CASE("serialized output is canonical") {
  auto sl2 = catalog_algebra("sl2");
  MultiVector a = parse_multivector(sl2.algebra, "e13 + e12");
  MultiVector b = parse_multivector(sl2.algebra, "e12 + e13");
  CHECK(multivector_to_json(a).dump() == multivector_to_json(b).dump());
  CHECK(rational_to_json(Rational(4, 8)) == json("1/2"));
}
