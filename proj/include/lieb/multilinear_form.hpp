#ifndef LIEB_MULTILINEAR_FORM_HPP
#define LIEB_MULTILINEAR_FORM_HPP

#include "lieb/linalg.hpp"

#include <span>
#include <vector>

namespace lieb {

enum class Symmetry { none, symmetric, antisymmetric };

/// Dense k-linear form on the canonical basis of a module of dimension `dim`
/// (for us: Lambda^m g, so `grade` records m and `dim` = C(n,m)).
class MultiLinearForm {
public:
  MultiLinearForm() = default;
  MultiLinearForm(int arity, int grade, int dim, Symmetry declared);
  MultiLinearForm(int arity, int grade, int dim, Symmetry declared, std::vector<Rational> data);

  int arity() const { return arity_; }
  int grade() const { return grade_; }
  int dim() const { return dim_; }
  Symmetry declared_symmetry() const { return declared_; }

  size_t size() const { return t_.size(); }
  const std::vector<Rational>& data() const { return t_; }
  std::vector<Rational>& data() { return t_; }

  Rational& at(std::span<const int> idx);
  const Rational& at(std::span<const int> idx) const;
  Rational& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx.begin(), idx.size())); }
  const Rational& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  /// Full multilinear contraction against `arity` coordinate vectors.
  Rational evaluate(const std::vector<Vec>& args) const;

  bool is_zero() const;
  Mat as_matrix() const; // arity 2 only

  static MultiLinearForm from_matrix(int grade, const Mat& m, Symmetry declared);

  /// Checks whether the stored tensor satisfies the given symmetry.
  bool has_symmetry(Symmetry s) const;

  friend bool operator==(const MultiLinearForm& a, const MultiLinearForm& b) {
    return a.arity_ == b.arity_ && a.grade_ == b.grade_ && a.dim_ == b.dim_ && a.t_ == b.t_;
  }
  friend bool operator!=(const MultiLinearForm& a, const MultiLinearForm& b) { return !(a == b); }

private:
  int arity_ = 0, grade_ = 0, dim_ = 0;
  Symmetry declared_ = Symmetry::none;
  std::vector<Rational> t_;

  size_t flat(std::span<const int> idx) const;
  void verify_symmetry() const;
};

} // namespace lieb

#endif
