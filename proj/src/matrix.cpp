#include "tautilt/matrix.hpp"

#include <stdexcept>

namespace tautilt {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::columns(const std::vector<std::size_t>& which) const {
  Matrix m(rows_, which.size());
  for (std::size_t j = 0; j < which.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) m(r, j) = (*this)(r, which[j]);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

namespace linalg {

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) m(i, j) += x * b(k, j);
      }
    }
  }
  if (f.is_prime()) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.reduce(m(i, j));
  }
  return m;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = f.add(a(i, j), b(i, j));
  return m;
}

Matrix subtract(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("subtract: shape mismatch");
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = f.sub(a(i, j), b(i, j));
  return m;
}

Matrix scale(const Field& f, const Scalar& s, const Matrix& a) {
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = f.mul(s, a(i, j));
  return m;
}

std::vector<Scalar> apply(const Field& f, const Matrix& a, const std::vector<Scalar>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Scalar> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0 && v[j] != 0) s += a(i, j) * v[j];
    }
    out[i] = f.reduce(s);
  }
  return out;
}

Echelon rref(const Field& f, Matrix a) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    const Scalar inv = f.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (a(row, c) != 0) a(r, c) = f.sub(a(r, c), factor * a(row, c));
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Field& f, const Matrix& a) {
  if (a.empty()) return 0;
  return rref(f, a).pivots.size();
}

Matrix kernel(const Field& f, const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return Matrix::identity(n);
  Echelon e = rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(n, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      k(e.pivots[r], j) = f.neg(e.reduced(r, free[j]));
    }
  }
  return k;
}

Matrix column_basis(const Field& f, const Matrix& a) {
  if (a.empty()) return Matrix(a.rows(), 0);
  return a.columns(rref(f, a).pivots);
}

Matrix complement(const Field& f, const Matrix& basis, std::size_t n) {
  Matrix full = Matrix::hstack(basis.cols() == 0 ? Matrix(n, 0) : basis, Matrix::identity(n));
  Echelon e = rref(f, full);
  std::vector<std::size_t> extra;
  for (auto p : e.pivots) {
    if (p >= basis.cols()) extra.push_back(p);
  }
  return full.columns(extra);
}

std::optional<Matrix> solve(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  Matrix x(n, b.cols());
  if (a.rows() == 0) return x;
  Echelon e = rref(f, Matrix::hstack(a, b));
  for (auto p : e.pivots) {
    if (p >= n) return std::nullopt;
  }
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[r], c) = e.reduced(r, n + c);
  return x;
}

Matrix inverse(const Field& f, const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  auto x = solve(f, a, Matrix::identity(a.rows()));
  if (!x || rank(f, a) != a.rows()) throw std::domain_error("inverse: singular matrix");
  return *x;
}

bool in_span(const Field& f, const Matrix& basis, const std::vector<Scalar>& v) {
  Matrix col = Matrix::from_columns(v.size(), {v});
  if (basis.cols() == 0) return col.is_zero();
  return solve(f, basis, col).has_value();
}

Coordinates::Coordinates(const Field& f, const Matrix& basis) : field_(f), basis_(basis) {
  if (basis.cols() == 0) return;
  Echelon e = rref(f, basis.transpose());
  if (e.pivots.size() != basis.cols()) throw std::invalid_argument("Coordinates: dependent basis");
  pivot_rows_ = e.pivots;
  Matrix square(basis.cols(), basis.cols());
  for (std::size_t i = 0; i < pivot_rows_.size(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) square(i, j) = basis(pivot_rows_[i], j);
  inverse_ = inverse(f, square);
}

std::vector<Scalar> Coordinates::of(const std::vector<Scalar>& v) const {
  std::vector<Scalar> picked(pivot_rows_.size());
  for (std::size_t i = 0; i < pivot_rows_.size(); ++i) picked[i] = v[pivot_rows_[i]];
  if (picked.empty()) return {};
  return apply(field_, inverse_, picked);
}

bool Coordinates::contains(const std::vector<Scalar>& v) const {
  if (pivot_rows_.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  return apply(field_, basis_, of(v)) == v;
}

}  // namespace linalg
}  // namespace tautilt
