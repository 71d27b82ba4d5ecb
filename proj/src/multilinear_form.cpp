#include "lieb/multilinear_form.hpp"
#include "lieb/error.hpp"

#include <algorithm>

namespace lieb {

namespace {
size_t pow_size(int dim, int arity) {
  size_t s = 1;
  for (int i = 0; i < arity; ++i) s *= static_cast<size_t>(dim);
  return s;
}
} // namespace

MultiLinearForm::MultiLinearForm(int arity, int grade, int dim, Symmetry declared)
    : arity_(arity), grade_(grade), dim_(dim), declared_(declared), t_(pow_size(dim, arity)) {}

MultiLinearForm::MultiLinearForm(int arity, int grade, int dim, Symmetry declared,
                                 std::vector<Rational> data)
    : arity_(arity), grade_(grade), dim_(dim), declared_(declared), t_(std::move(data)) {
  if (t_.size() != pow_size(dim, arity)) fail(errc::dimension_mismatch, "form tensor size");
  verify_symmetry();
}

size_t MultiLinearForm::flat(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != arity_) fail(errc::arity_mismatch, "form index arity");
  size_t f = 0;
  for (int s = 0; s < arity_; ++s) {
    if (idx[s] < 0 || idx[s] >= dim_) fail(errc::dimension_mismatch, "form index out of range");
    f = f * dim_ + static_cast<size_t>(idx[s]);
  }
  return f;
}

Rational& MultiLinearForm::at(std::span<const int> idx) { return t_[flat(idx)]; }
const Rational& MultiLinearForm::at(std::span<const int> idx) const { return t_[flat(idx)]; }

Rational MultiLinearForm::evaluate(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity_) fail(errc::arity_mismatch, "form evaluate arity");
  for (const auto& a : args)
    if (static_cast<int>(a.size()) != dim_) fail(errc::dimension_mismatch, "form evaluate argument");
  Rational total;
  std::vector<int> idx(arity_, 0);
  size_t count = pow_size(dim_, arity_);
  for (size_t f = 0; f < count; ++f) {
    if (!t_[f].is_zero()) {
      Rational term = t_[f];
      size_t rest = f;
      for (int s = arity_ - 1; s >= 0; --s) {
        int i = static_cast<int>(rest % dim_);
        rest /= dim_;
        term *= args[s][i];
        if (term.is_zero()) break;
      }
      total += term;
    }
  }
  return total;
}

bool MultiLinearForm::is_zero() const {
  return std::all_of(t_.begin(), t_.end(), [](const Rational& x) { return x.is_zero(); });
}

Mat MultiLinearForm::as_matrix() const {
  if (arity_ != 2) fail(errc::arity_mismatch, "as_matrix requires a bilinear form");
  Mat m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(i, j) = t_[static_cast<size_t>(i) * dim_ + j];
  return m;
}

MultiLinearForm MultiLinearForm::from_matrix(int grade, const Mat& m, Symmetry declared) {
  if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "bilinear form matrix must be square");
  std::vector<Rational> data;
  data.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) data.push_back(m.at(i, j));
  return MultiLinearForm(2, grade, m.rows(), declared, std::move(data));
}

bool MultiLinearForm::has_symmetry(Symmetry s) const {
  if (s == Symmetry::none) return true;
  // adjacent transpositions generate the symmetric group
  std::vector<int> idx(arity_, 0);
  size_t count = pow_size(dim_, arity_);
  std::vector<int> swapped(arity_);
  for (size_t f = 0; f < count; ++f) {
    size_t rest = f;
    for (int s2 = arity_ - 1; s2 >= 0; --s2) {
      idx[s2] = static_cast<int>(rest % dim_);
      rest /= dim_;
    }
    for (int p = 0; p + 1 < arity_; ++p) {
      swapped = idx;
      std::swap(swapped[p], swapped[p + 1]);
      const Rational& a = t_[f];
      const Rational& b = at(std::span<const int>(swapped.data(), swapped.size()));
      if (s == Symmetry::symmetric && a != b) return false;
      if (s == Symmetry::antisymmetric && a != -b) return false;
    }
  }
  return true;
}

void MultiLinearForm::verify_symmetry() const {
  if (declared_ == Symmetry::none) return;
  if (!has_symmetry(declared_)) fail(errc::arity_mismatch, "declared form symmetry violated by tensor");
}

} // namespace lieb
