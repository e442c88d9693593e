#pragma once

// Independent oracles for the unit and acceptance tests. Nothing here calls
// the library's enumeration, elimination or Hom solver.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "fimod/matrix.hpp"
#include "fimod/module.hpp"

namespace oracle {

inline std::size_t falling_factorial(std::size_t n, std::size_t m)
{
  if (m > n)
    return 0;
  std::size_t r = 1;
  for (std::size_t k = 0; k < m; ++k)
    r *= n - k;
  return r;
}

/// All injective image lists [m] -> [n] in lex order, by filtering every
/// map [m] -> [n] in odometer order.
inline std::vector<std::vector<int>> all_injections(std::size_t m, std::size_t n)
{
  std::vector<std::vector<int>> out;
  if (m > n)
    return out;
  std::vector<int> digits(m, 1);
  while (true) {
    bool distinct = true;
    for (std::size_t i = 0; i < m && distinct; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (digits[i] == digits[j]) {
          distinct = false;
          break;
        }
    if (distinct)
      out.push_back(digits);
    std::size_t pos = m;
    while (pos > 0 && digits[pos - 1] == static_cast<int>(n))
      digits[--pos] = 1;
    if (pos == 0)
      break;
    ++digits[pos - 1];
  }
  return out;
}

/// Rank by plain Gaussian elimination on mpq entries, optionally mod p.
inline std::size_t rank(std::vector<std::vector<mpq_class>> a, std::uint64_t p = 0)
{
  auto reduce = [p](mpq_class& x) {
    if (p == 0)
      return;
    mpz_class num = x.get_num() % static_cast<unsigned long>(p);
    mpz_class den = x.get_den() % static_cast<unsigned long>(p);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
    mpz_class v = (num * inv) % static_cast<unsigned long>(p);
    if (v < 0)
      v += static_cast<unsigned long>(p);
    x = mpq_class(v);
  };
  for (auto& row : a)
    for (auto& x : row)
      reduce(x);
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      mpq_class factor = a[i][c] / a[r][c];
      reduce(factor);
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] -= factor * a[r][j];
        reduce(a[i][j]);
      }
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<mpq_class>> to_rows(const fimod::Matrix& m)
{
  std::vector<std::vector<mpq_class>> rows(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows[i][j] = m(i, j).value();
  return rows;
}

/// dim Hom over degrees <= window with a constraint for every injection
/// [m] -> [n], m <= n <= window (not just generators), solved densely.
inline std::size_t hom_dim_all_injections(const fimod::TruncatedFIModule& v, const fimod::TruncatedFIModule& w,
                                          std::size_t window)
{
  std::vector<std::size_t> offset(window + 2, 0);
  for (std::size_t n = 0; n <= window; ++n)
    offset[n + 1] = offset[n] + w.dim(n) * v.dim(n);
  std::size_t unknowns = offset[window + 1];
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t n = 0; n <= window; ++n)
    for (std::size_t m = 0; m <= n; ++m)
      for (const auto& images : all_injections(m, n)) {
        fimod::Injection f(n, images);
        fimod::Matrix vf = v.matrix_of_injection(f);
        fimod::Matrix wf = w.matrix_of_injection(f);
        // (phi_n V(f) - W(f) phi_m)[r][c] = 0
        for (std::size_t r = 0; r < w.dim(n); ++r)
          for (std::size_t c = 0; c < v.dim(m); ++c) {
            std::vector<mpq_class> row(unknowns);
            for (std::size_t k = 0; k < v.dim(n); ++k)
              row[offset[n] + r * v.dim(n) + k] += vf(k, c).value();
            for (std::size_t k = 0; k < w.dim(m); ++k)
              row[offset[m] + k * v.dim(m) + c] -= wf(r, k).value();
            rows.push_back(std::move(row));
          }
      }
  if (rows.empty())
    return unknowns;
  return unknowns - rank(std::move(rows), v.field().modulus());
}

}  // namespace oracle
