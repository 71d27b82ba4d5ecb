#include "lieb/linalg.hpp"
#include "lieb/error.hpp"

namespace lieb {

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) fail(errc::dimension_mismatch, "ragged matrix literal");
    for (const auto& x : r) a_.push_back(x);
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Mat::set_row(int i, const Vec& v) {
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(errc::dimension_mismatch, "matrix addition");
  Mat r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(errc::dimension_mismatch, "matrix subtraction");
  Mat r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) fail(errc::dimension_mismatch, "matrix product");
  Mat r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += x * b.at(k, j);
      }
    }
  return r;
}

Mat operator*(const Rational& c, const Mat& a) {
  Mat r = a;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(errc::dimension_mismatch, "matrix-vector product");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational s;
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      s += at(i, j) * v[j];
    }
    r[i] = s;
  }
  return r;
}

Rational Mat::trace() const {
  Rational s;
  for (int i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
  return s;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) fail(errc::dimension_mismatch, "vstack");
  Mat r(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

RrefResult rref(Mat m) {
  RrefResult res;
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rational inv = m.at(r, c).inv();
    for (int j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  Mat out(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
  res.m = out;
  return res;
}

int rank_of(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  RrefResult r = rref(m);
  int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat ker(static_cast<int>(free_cols.size()), cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ker.at(static_cast<int>(k), fc) = Rational(1);
    for (int i = 0; i < r.rank; ++i) ker.at(static_cast<int>(k), r.pivots[i]) = -r.m.at(i, fc);
  }
  return ker;
}

Rational determinant(Mat m) {
  if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "determinant of non-square matrix");
  int n = m.rows();
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rational inv = m.at(c, c).inv();
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c) * inv;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "inverse of non-square matrix");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  RrefResult r = rref(aug);
  // the identity block forces full row rank; m is invertible exactly when all
  // pivots fall in the left block
  if (n == 0) return Mat(0, 0);
  if (r.pivots.back() >= n) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
  return inv;
}

Subspace Subspace::span(int ambient, const Mat& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient) fail(errc::dimension_mismatch, "subspace span");
  Subspace s;
  s.ambient_ = ambient;
  if (rows.rows() == 0) {
    s.basis_ = Mat(0, ambient);
    return s;
  }
  RrefResult r = rref(rows);
  s.basis_ = r.m;
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::zero(int ambient) { return span(ambient, Mat(0, ambient)); }

Subspace Subspace::full(int ambient) { return span(ambient, Mat::identity(ambient)); }

Vec Subspace::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != ambient_) fail(errc::dimension_mismatch, "subspace reduce");
  for (int i = 0; i < basis_.rows(); ++i) {
    const Rational& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Rational f = c;
    for (int j = 0; j < ambient_; ++j) {
      if (basis_.at(i, j).is_zero()) continue;
      v[j] -= f * basis_.at(i, j);
    }
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec w = v;
  Vec coeff(basis_.rows());
  for (int i = 0; i < basis_.rows(); ++i) {
    Rational c = w[pivots_[i]];
    coeff[i] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j) {
      if (basis_.at(i, j).is_zero()) continue;
      w[j] -= c * basis_.at(i, j);
    }
  }
  for (const auto& x : w)
    if (!x.is_zero()) return std::nullopt;
  return coeff;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(errc::dimension_mismatch, "subspace sum");
  return span(ambient_, vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(errc::dimension_mismatch, "subspace intersection");
  int a = dim(), b = other.dim();
  if (a == 0 || b == 0) return zero(ambient_);
  // solve alpha^T A = beta^T B: kernel of [A^T | -B^T]
  Mat sys(ambient_, a + b);
  for (int i = 0; i < ambient_; ++i) {
    for (int j = 0; j < a; ++j) sys.at(i, j) = basis_.at(j, i);
    for (int j = 0; j < b; ++j) sys.at(i, a + j) = -other.basis_.at(j, i);
  }
  Mat ker = kernel_basis(sys);
  Mat rows(ker.rows(), ambient_);
  for (int k = 0; k < ker.rows(); ++k)
    for (int j = 0; j < ambient_; ++j) {
      Rational s;
      for (int i = 0; i < a; ++i) s += ker.at(k, i) * basis_.at(i, j);
      rows.at(k, j) = s;
    }
  return span(ambient_, rows);
}

} // namespace lieb
