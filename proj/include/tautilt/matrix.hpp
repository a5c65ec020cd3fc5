#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tautilt/field.hpp"

namespace tautilt {

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  std::vector<Scalar> column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& which) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

namespace linalg {

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix subtract(const Field& f, const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, const Scalar& s, const Matrix& a);
std::vector<Scalar> apply(const Field& f, const Matrix& a, const std::vector<Scalar>& v);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
Echelon rref(const Field& f, Matrix a);
std::size_t rank(const Field& f, const Matrix& a);
/// Columns form a basis of {x : a x = 0}.
Matrix kernel(const Field& f, const Matrix& a);
/// Subset of the columns of `a` forming a basis of its column space.
Matrix column_basis(const Field& f, const Matrix& a);
/// Standard basis vectors extending the (independent) columns of `basis`
/// to a basis of k^n.
Matrix complement(const Field& f, const Matrix& basis, std::size_t n);
/// Some x with a x = b, if one exists.
std::optional<Matrix> solve(const Field& f, const Matrix& a, const Matrix& b);
Matrix inverse(const Field& f, const Matrix& a);
bool in_span(const Field& f, const Matrix& basis, const std::vector<Scalar>& v);

/// Coordinates with respect to a fixed set of independent column vectors.
class Coordinates {
 public:
  Coordinates() = default;
  Coordinates(const Field& f, const Matrix& basis);
  std::size_t size() const { return pivot_rows_.size(); }
  /// Assumes `v` lies in the span; use `contains` first when unsure.
  std::vector<Scalar> of(const std::vector<Scalar>& v) const;
  bool contains(const std::vector<Scalar>& v) const;

 private:
  Field field_ = Field::rational();
  Matrix basis_;
  std::vector<std::size_t> pivot_rows_;
  Matrix inverse_;
};

}  // namespace linalg
}  // namespace tautilt
