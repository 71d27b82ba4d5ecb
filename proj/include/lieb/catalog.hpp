#ifndef LIEB_CATALOG_HPP
#define LIEB_CATALOG_HPP

#include "lieb/gradation.hpp"
#include "lieb/ybe.hpp"

#include <optional>

namespace lieb {

struct CatalogAlgebra {
  AlgebraPtr algebra;
  std::vector<Gradation> gradations;
  std::vector<std::string> gradation_labels;
};

std::vector<std::string> catalog_names();
bool catalog_requires_parameter(const std::string& name);

/// Built-in algebras with their gradations. Parameterized families take the
/// parameter value as `params[0]`.
CatalogAlgebra catalog_algebra(const std::string& name, const std::vector<Rational>& params = {});

struct OuterAutomorphismFixture {
  std::string label;
  Mat matrix; // columns are the images of the basis vectors
  /// expected images of basis bivectors under the induced grade-2 map
  std::vector<std::pair<Tuple, Vec>> lambda2_images;
};

struct ResidualFixture {
  /// coefficient of the top form in [r,r]_S equals r^T Q r for r = (x,y,z)
  Mat quadratic;
  /// whether the residual lies in the invariant subspace at every point
  bool membership_always = false;
};

struct FixtureSet {
  std::optional<Mat> killing;
  std::optional<Mat> killing_l2;
  std::optional<Mat> killing_l3;
  std::optional<Mat> invariants_l2; // expected echelon rows (possibly 0 rows)
  std::optional<Mat> invariants_l3;
  std::vector<bool> root_flags;                  // aligned with gradations
  std::vector<std::vector<Degree>> limit_degrees; // aligned with gradations
  std::map<Degree, int, DegreeLess> lambda2_fiber_dims; // gradation 0
  std::map<Degree, int, DegreeLess> lambda3_fiber_dims; // gradation 0
  std::optional<ResidualFixture> residual;
  std::optional<Mat> separator_quadratic;  // double Killing metric as a matrix
  std::optional<Mat> separator_normalized; // the normalized quadratic, when listed
  std::optional<Rational> separator_scale; // separator_quadratic = scale * normalized
  std::optional<int> generic_orbit_dim;
  std::optional<int> der_dim;
  std::optional<int> inner_dim;
  std::vector<OuterAutomorphismFixture> outer_automorphisms;
  std::optional<std::vector<Tuple>> zero_fiber_basis_l2; // so(2,2) degree-(0,0) cell
  std::optional<std::vector<int>> reduced_complement_l2; // expected complement tuple indices
  std::optional<Mat> reduced_form_family; // rows: flattened expected reduced symmetric forms
  std::optional<std::vector<int>> reduced_ad_ranks_l2; // rank of the reduced grade-2 action per basis vector
};

FixtureSet expected_results(const std::string& name, const std::vector<Rational>& params = {});

struct FixtureCheck {
  std::string label;
  bool pass = false;
  std::string detail;
};

/// Replays every fixture of a catalog entry against the live computation.
std::vector<FixtureCheck> run_fixture_checks(const std::string& name,
                                             const std::vector<Rational>& params = {});

} // namespace lieb

#endif
