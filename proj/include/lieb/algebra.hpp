#ifndef LIEB_ALGEBRA_HPP
#define LIEB_ALGEBRA_HPP

#include "lieb/linalg.hpp"
#include "lieb/multilinear_form.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lieb {

/// One stored bracket entry: coefficients of [e_i, e_j] with i < j (0-based).
using SparseVec = std::vector<std::pair<int, Rational>>;

/// Validated input document for a Lie algebra (indices 0-based here;
/// the JSON surface uses 1-based indices).
struct AlgebraDoc {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;
  struct Entry {
    int i = 0, j = 0;
    SparseVec result;
  };
  std::vector<Entry> brackets;
};

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Finite-dimensional Lie algebra over exact rationals, fixed by structure
/// constants on a named basis. Antisymmetry is structural: only i<j entries
/// are stored. The Jacobi identity is verified on construction.
class LieAlgebra : public std::enable_shared_from_this<LieAlgebra> {
public:
  static AlgebraPtr create(const AlgebraDoc& doc);

  AlgebraPtr ptr() const { return shared_from_this(); }

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_; }

  /// Coefficients of [e_i, e_j] for any i, j (sign-adjusted; empty on diagonal).
  SparseVec bracket(int i, int j) const;
  /// Bracket of two coordinate vectors.
  Vec bracket_vec(const Vec& a, const Vec& b) const;

  /// Matrix of ad_{e_i} in the canonical basis.
  const Mat& adjoint_matrix(int i) const { return ad_[i]; }

  bool same_structure(const LieAlgebra& other) const;

  const std::map<std::pair<int, int>, SparseVec>& entries() const { return c_; }

private:
  LieAlgebra() = default;
  std::string name_;
  int dim_ = 0;
  std::vector<std::string> basis_;
  std::map<std::pair<int, int>, SparseVec> c_; // i<j only
  std::vector<Mat> ad_;
};

struct EndoMap {
  int grade = 1;
  Mat m;
};

/// Matrix of ad_v for a grade-1 coordinate vector v.
EndoMap adjoint(const LieAlgebra& L, const Vec& v);

/// Killing form kappa(v,w) = tr(ad_v ad_w); symmetric bilinear on g.
MultiLinearForm killing_form(const LieAlgebra& L);

/// Fully (anti)symmetrized k-fold trace form
/// b(v_1,...,v_k) = sum over permutations [sg] tr(ad_{v_.} o ... o ad_{v_.}).
MultiLinearForm trace_form(const LieAlgebra& L, int k, Symmetry sym, int bound = 4);

struct StructureReport {
  Subspace center;
  std::vector<Subspace> lower_central; // g_0 = g, then strictly until stabilization
  std::vector<Subspace> derived;
  bool nilpotent = false;
  bool solvable = false;
  bool unimodular = false;
};

StructureReport structure_report(const LieAlgebra& L);

struct IdealReport {
  bool is_subalgebra = false;
  bool is_ideal = false;
  bool is_traceless_ideal = false;
  std::vector<Rational> restricted_traces; // Tr(ad_{e_i}|_h), only when is_ideal
};

IdealReport ideal_report(const LieAlgebra& L, const Subspace& h);

struct DerivationAlgebra {
  Subspace der;   // subspace of gl(g), vectors are row-major flattened matrices
  Subspace inner; // span of the ad_{e_i}
};

/// Solves the derivation equation D[v,w] = [Dv,w] + [v,Dw] over gl(g).
DerivationAlgebra derivation_algebra(const LieAlgebra& L);

Vec flatten_matrix(const Mat& m);
Mat unflatten_matrix(const Vec& v, int n);

} // namespace lieb

#endif
