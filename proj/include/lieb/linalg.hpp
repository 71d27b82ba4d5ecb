#ifndef LIEB_LINALG_HPP
#define LIEB_LINALG_HPP

#include "lieb/rational.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace lieb {

using Vec = std::vector<Rational>;

/// Dense matrix over exact rationals.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  void set_row(int i, const Vec& v);

  Mat transpose() const;
  bool is_zero() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Rational& c, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Vec apply(const Vec& v) const; // matrix * column vector
  Rational trace() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Mat vstack(const Mat& a, const Mat& b);

struct RrefResult {
  Mat m;
  std::vector<int> pivots; // pivot column per nonzero row
  int rank = 0;
};

/// Reduced row-echelon form; unique canonical representative of the row space.
RrefResult rref(Mat m);

int rank_of(const Mat& m);

/// Rows form a basis of {x : m x = 0}.
Mat kernel_basis(const Mat& m);

Rational determinant(Mat m);
std::optional<Mat> inverse(const Mat& m);

/// Linear span in canonical (RREF) form; value-comparable.
class Subspace {
public:
  Subspace() = default;

  static Subspace span(int ambient, const Mat& rows);
  static Subspace zero(int ambient);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Residual of v after eliminating all pivot coordinates.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v against the echelon basis rows, if v is a member.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  int ambient_ = 0;
  Mat basis_; // RREF, rank rows
  std::vector<int> pivots_;
};

} // namespace lieb

#endif
