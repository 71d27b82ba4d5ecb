#ifndef LIEB_MULTIVECTOR_HPP
#define LIEB_MULTIVECTOR_HPP

#include "lieb/algebra.hpp"

#include <map>
#include <optional>

namespace lieb {

using Tuple = std::vector<int>; // strictly increasing 0-based basis indices

long long binom(int n, int k);

/// Lexicographic rank of a strictly increasing k-tuple among all k-subsets of {0..n-1}.
int tuple_rank(int n, const Tuple& t);
Tuple tuple_unrank(int n, int k, int rank);
std::vector<Tuple> all_tuples(int n, int k); // lex order

/// Sorts an index tuple, returning sign of the permutation; nullopt when an
/// index repeats (the wedge vanishes).
std::optional<std::pair<Tuple, int>> sort_tuple(Tuple t);

/// Sparse element of the Grassmann algebra of a Lie algebra: a map from
/// strictly increasing index tuples to nonzero rationals. Grade-0 terms are
/// keyed by the empty tuple. Mixed grades are allowed.
class MultiVector {
public:
  explicit MultiVector(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static MultiVector scalar(AlgebraPtr alg, const Rational& c);
  static MultiVector basis_element(AlgebraPtr alg, int i); // grade 1
  static MultiVector basis_tuple(AlgebraPtr alg, Tuple t);
  static MultiVector from_grade_vector(AlgebraPtr alg, int m, const Vec& coords);
  static MultiVector from_vec(AlgebraPtr alg, const Vec& coords); // grade 1

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Tuple, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Grade when homogeneous (zero counts as any grade); nullopt when mixed.
  std::optional<int> homogeneous_grade() const;
  int max_grade() const;

  /// Adds c * e_t, sorting t with sign bookkeeping; drops cancellations.
  void add_term(Tuple t, const Rational& c);

  Vec grade_vector(int m) const; // coordinates in the canonical Lambda^m basis
  MultiVector grade_part(int m) const;

  MultiVector operator-() const;
  friend MultiVector operator+(const MultiVector& a, const MultiVector& b);
  friend MultiVector operator-(const MultiVector& a, const MultiVector& b);
  friend MultiVector operator*(const Rational& c, const MultiVector& a);
  friend bool operator==(const MultiVector& a, const MultiVector& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiVector& a, const MultiVector& b) { return !(a == b); }

  std::string str() const;

private:
  AlgebraPtr alg_;
  std::map<Tuple, Rational> terms_;
};

void require_same_algebra(const MultiVector& a, const MultiVector& b);

/// Exterior product; associative, bilinear, graded-commutative.
MultiVector wedge(const MultiVector& a, const MultiVector& b);

/// Algebraic Schouten bracket on the Grassmann algebra, the degree -1 graded
/// bracket extending the Lie bracket; grade-0 elements bracket to zero.
MultiVector schouten(const MultiVector& a, const MultiVector& b);

enum class LambdaMode { derivation, multiplicative };

/// Lifts an endomorphism T of g to Lambda^m g, either as a derivation
/// (sum of T on one factor) or multiplicatively (T on every factor).
EndoMap lambda_power(const LieAlgebra& L, const Mat& T, int m, LambdaMode mode);

EndoMap adjoint(const LieAlgebra& L, const MultiVector& v);

struct AnnihilatorSpan {
  Subspace span; // {v in g : v ^ w = 0}
  bool decomposable = false;
};

/// Factor span of a homogeneous nonzero multivector; equals the span of the
/// factors exactly when w is decomposable (detected via dim == grade).
AnnihilatorSpan annihilator_span(const MultiVector& w);

} // namespace lieb

#endif
