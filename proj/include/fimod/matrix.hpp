#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fimod/scalar.hpp"

namespace fimod {

/// Dense matrix over a Field, row-major, entries always canonical.
/// Matrices act on column vectors from the left: mat_mul(a, b) is "b, then a".
class Matrix {
public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(Field f, std::size_t rows, std::size_t cols)
  : field_(f), rows_(rows), cols_(cols), data_(rows * cols)
  {}

  static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
  static Matrix identity(Field f, std::size_t n);
  /// Rows given as small integers; reduced into the field.
  static Matrix from_ints(Field f, const std::vector<std::vector<long>>& rows);

  const Field& field() const { return field_; }
  ScalarOps ops() const { return ScalarOps(field_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;
  /// Square 0/1 matrix with exactly one 1 in every row and column.
  bool is_permutation() const;

  Matrix transpose() const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const Matrix& m);
  Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Throws FimodError unless a.cols() == b.rows() and fields agree.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix scale(const Scalar& c, const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form; pivot = first nonzero entry in column order.
RowEchelon rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Columns form the canonical basis of {v : a v = 0}: one column per free
/// column j of rref(a), with a 1 in coordinate j and 0 in the other free
/// coordinates.
Matrix nullspace(const Matrix& a);

struct CokernelData {
  Matrix projection;  ///< (t - r) x t, projection * a == 0, surjective
  Matrix section;     ///< t x (t - r), projection * section == identity
  std::vector<std::size_t> basis_coordinates;  ///< non-pivot rows of a
};

/// The cokernel basis is given by the coordinates that are not pivots of the
/// reduced column echelon form of a.
CokernelData cokernel_data(const Matrix& a);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& a);

/// True iff every column of b lies in the column span of a.
bool column_span_contains(const Matrix& a, const Matrix& b);

}  // namespace fimod
