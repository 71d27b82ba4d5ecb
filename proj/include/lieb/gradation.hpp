#ifndef LIEB_GRADATION_HPP
#define LIEB_GRADATION_HPP

#include "lieb/multivector.hpp"

#include <map>

namespace lieb {

/// Commutative group G inside Q^rank: coordinate i is free when moduli[i] == 0,
/// cyclic Z_q when moduli[i] == q > 0 (holding integers in [0,q)).
struct GroupDescriptor {
  std::vector<long> moduli;
  int rank() const { return static_cast<int>(moduli.size()); }
};

using Degree = std::vector<Rational>;

struct DegreeLess {
  bool operator()(const Degree& a, const Degree& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  }
};

struct GradationDoc {
  GroupDescriptor group;
  std::vector<Degree> degrees; // one per basis element, aligned with basis order
};

/// Validated G-gradation of a Lie algebra: a degree per basis vector such that
/// every bracket lands in the degree given by the group operation.
class Gradation {
public:
  Gradation() = default;
  Gradation(GroupDescriptor group, std::vector<Degree> degrees)
      : group_(std::move(group)), degrees_(std::move(degrees)) {}

  const GroupDescriptor& group() const { return group_; }
  const Degree& degree_of(int basis_index) const { return degrees_[basis_index]; }
  const std::vector<Degree>& degrees() const { return degrees_; }

  Degree zero() const { return Degree(group_.rank(), Rational(0)); }
  Degree star(const Degree& a, const Degree& b) const;
  Degree degree_of_tuple(const Tuple& t) const;

private:
  GroupDescriptor group_;
  std::vector<Degree> degrees_;
};

/// Validates moduli ranges and bracket closure; reports the offending pair and
/// stray component on failure.
Gradation load_gradation(const LieAlgebra& L, const GradationDoc& doc);

struct Decomposition {
  int grade = 0;
  /// degree -> canonical basis tuple indices of Lambda^m whose factor degrees
  /// star-sum to it; empty fibers omitted, sorted by degree
  std::map<Degree, std::vector<int>, DegreeLess> fibers;

  Subspace fiber_subspace(const LieAlgebra& L, const Degree& d) const;
};

Decomposition induced_decomposition(const LieAlgebra& L, const Gradation& G, int m);

struct GradationReport {
  bool is_root = false;
  std::string root_failure; // diagnostic when not a root gradation
  /// For a root gradation, the eigenvalue functional per occurring degree,
  /// expressed on the basis of the degree-zero part.
  std::map<Degree, Vec, DegreeLess> eigenvalue_functionals;
  std::vector<Degree> limit_degrees; // Lambda^2 degrees whose doubled fiber in Lambda^3 is empty
  bool schouten_compatible = false;
};

GradationReport gradation_report(const LieAlgebra& L, const Gradation& G);

} // namespace lieb

#endif
