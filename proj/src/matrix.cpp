#include "fimod/matrix.hpp"

#include <sstream>

namespace fimod {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op)
{
  if (!(a.field() == b.field()))
    throw FimodError(std::string(op) + ": field mismatch");
}

std::string shape(const Matrix& m)
{
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix Matrix::identity(Field f, std::size_t n)
{
  Matrix m(f, n, n);
  ScalarOps ops(f);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = ops.one();
  return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long>>& rows)
{
  std::size_t nrows = rows.size();
  std::size_t ncols = nrows ? rows[0].size() : 0;
  Matrix m(f, nrows, ncols);
  ScalarOps ops(f);
  for (std::size_t i = 0; i < nrows; ++i) {
    if (rows[i].size() != ncols)
      throw FimodError("from_ints: ragged rows");
    for (std::size_t j = 0; j < ncols; ++j)
      m(i, j) = ops.from_int(rows[i][j]);
  }
  return m;
}

bool Matrix::is_zero() const
{
  for (const auto& x : data_)
    if (!x.is_zero())
      return false;
  return true;
}

bool Matrix::is_identity() const
{
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero())
        return false;
    }
  return true;
}

bool Matrix::is_permutation() const
{
  if (rows_ != cols_)
    return false;
  std::vector<int> col_count(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (x.is_zero())
        continue;
      if (!x.is_one())
        return false;
      ++row_count;
      ++col_count[j];
    }
    if (row_count != 1)
      return false;
  }
  for (int c : col_count)
    if (c != 1)
      return false;
  return true;
}

Matrix Matrix::transpose() const
{
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const
{
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw FimodError("block out of range of " + shape(*this));
  Matrix b(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j)
      b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& m)
{
  require_same_field(*this, m, "set_block");
  if (row0 + m.rows() > rows_ || col0 + m.cols() > cols_)
    throw FimodError("set_block: " + shape(m) + " block does not fit in " + shape(*this));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      (*this)(row0 + i, col0 + j) = m(i, j);
}

std::string Matrix::to_string() const
{
  ScalarOps o = ops();
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      out << (j ? "," : "") << o.to_string((*this)(i, j));
    out << ']';
  }
  out << ']';
  return out.str();
}

bool operator==(const Matrix& a, const Matrix& b)
{
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
  require_same_field(a, b, "mat_mul");
  if (a.cols() != b.rows())
    throw FimodError("mat_mul: shape mismatch " + shape(a) + " * " + shape(b));
  ScalarOps ops = a.ops();
  Matrix c(a.field(), a.rows(), b.cols());
  // Structure matrices are mostly 0/1 and sparse, so skip zero entries of a
  // and use plain addition when an entry is one.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero())
        continue;
      bool unit = aik.is_one();
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero())
          continue;
        c(i, j) = unit ? ops.add(c(i, j), bkj) : ops.add(c(i, j), ops.mul(aik, bkj));
      }
    }
  return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b)
{
  require_same_field(a, b, "mat_add");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw FimodError("mat_add: shape mismatch " + shape(a) + " + " + shape(b));
  ScalarOps ops = a.ops();
  Matrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = ops.add(a(i, j), b(i, j));
  return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b)
{
  require_same_field(a, b, "mat_sub");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw FimodError("mat_sub: shape mismatch " + shape(a) + " - " + shape(b));
  ScalarOps ops = a.ops();
  Matrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = ops.sub(a(i, j), b(i, j));
  return c;
}

Matrix scale(const Scalar& s, const Matrix& a)
{
  ScalarOps ops = a.ops();
  Matrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = ops.mul(s, a(i, j));
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
  require_same_field(a, b, "hstack");
  if (a.rows() != b.rows())
    throw FimodError("hstack: row mismatch " + shape(a) + " | " + shape(b));
  Matrix c(a.field(), a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
  require_same_field(a, b, "vstack");
  if (a.cols() != b.cols())
    throw FimodError("vstack: column mismatch " + shape(a) + " / " + shape(b));
  Matrix c(a.field(), a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

Matrix block_diag(const Matrix& a, const Matrix& b)
{
  require_same_field(a, b, "block_diag");
  Matrix c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

RowEchelon rref(const Matrix& a)
{
  ScalarOps ops = a.ops();
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero())
      ++sel;
    if (sel == m.rows())
      continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(sel, j), m(row, j));
    Scalar inv = ops.inv(m(row, col));
    if (!inv.is_one())
      for (std::size_t j = col; j < m.cols(); ++j)
        m(row, j) = ops.mul(m(row, j), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero())
        continue;
      Scalar factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero())
          m(r, j) = ops.sub(m(r, j), ops.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a)
{
  return rref(a).pivots.size();
}

Matrix nullspace(const Matrix& a)
{
  RowEchelon e = rref(a);
  ScalarOps ops = a.ops();
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots)
    is_pivot[p] = true;
  std::size_t nfree = a.cols() - e.pivots.size();
  Matrix basis(a.field(), a.cols(), nfree);
  std::size_t k = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (is_pivot[j])
      continue;
    basis(j, k) = ops.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], k) = ops.neg(e.reduced(r, j));
    ++k;
  }
  return basis;
}

CokernelData cokernel_data(const Matrix& a)
{
  ScalarOps ops = a.ops();
  std::size_t t = a.rows();
  // Rows of rref(a^T) are the reduced column echelon basis of the image.
  RowEchelon e = rref(a.transpose());
  std::size_t r = e.pivots.size();
  std::vector<bool> is_pivot(t, false);
  for (std::size_t p : e.pivots)
    is_pivot[p] = true;
  CokernelData out{Matrix(a.field(), t - r, t), Matrix(a.field(), t, t - r), {}};
  std::size_t k = 0;
  for (std::size_t j = 0; j < t; ++j) {
    if (is_pivot[j])
      continue;
    out.basis_coordinates.push_back(j);
    out.section(j, k) = ops.one();
    out.projection(k, j) = ops.one();
    for (std::size_t q = 0; q < r; ++q)
      out.projection(k, e.pivots[q]) = ops.neg(e.reduced(q, j));
    ++k;
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& a)
{
  if (a.rows() != a.cols())
    return std::nullopt;
  std::size_t n = a.rows();
  RowEchelon e = rref(hstack(a, Matrix::identity(a.field(), n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

bool column_span_contains(const Matrix& a, const Matrix& b)
{
  return rank(a) == rank(hstack(a, b));
}

}  // namespace fimod
