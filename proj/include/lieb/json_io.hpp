#ifndef LIEB_JSON_IO_HPP
#define LIEB_JSON_IO_HPP

#include "lieb/catalog.hpp"

#include <json.hpp>

namespace lieb {

using json = nlohmann::ordered_json;

/// Algebra document:
/// {"name": str, "dim": int, "basis": [str],
///  "brackets": [{"i": int, "j": int, "result": {"k": "p/q", ...}}]}
/// with 1-based indices; rationals are strings "p/q" or plain integers.
AlgebraDoc algebra_doc_from_json(const json& j);
json algebra_doc_to_json(const LieAlgebra& L);

/// Gradation document:
/// {"group": {"rank": k, "moduli": [..]}, "degrees": [[..rationals..], ...]}
GradationDoc gradation_doc_from_json(const json& j);
json gradation_to_json(const Gradation& G);

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

/// MultiVector JSON: {"terms": {"1,2": "3/2", ...}} with 1-based index tuples.
MultiVector multivector_from_json(AlgebraPtr alg, const json& j);
json multivector_to_json(const MultiVector& v);
json terms_to_json(const MultiVector& v); // just the terms object

/// CLI text syntax: "3/2*e12 - e13 + e123"; basis-name concatenation is
/// resolved against the algebra's declared names.
MultiVector parse_multivector(AlgebraPtr alg, const std::string& text);

json subspace_to_json(const Subspace& s);
json matrix_to_json(const Mat& m);
json form_to_json(const MultiLinearForm& f, const std::vector<std::string>& axis_labels);
json degree_to_json(const Degree& d);

std::vector<std::string> lambda_basis_labels(const LieAlgebra& L, int m);

} // namespace lieb

#endif
