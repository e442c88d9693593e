#include "fimod/hom.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace fimod {

namespace {

// Element policies for the elimination kernel. Prime fields run on machine
// words; the rationals on GMP.
struct ModPElems {
  using T = std::uint64_t;
  std::uint64_t p;

  T from(const Scalar& s) const { return s.value().get_num().get_ui(); }
  Scalar to(T v) const { return Scalar(mpq_class(static_cast<unsigned long>(v))); }
  static bool is_zero(T v) { return v == 0; }
  T mul(T a, T b) const { return a * b % p; }
  T add(T a, T b) const { T s = a + b; return s >= p ? s - p : s; }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T neg(T a) const { return a ? p - a : 0; }
  T inv(T a) const
  {
    // a^(p-2)
    T r = 1, base = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1)
        r = r * base % p;
      base = base * base % p;
    }
    return r;
  }
};

struct RatElems {
  using T = mpq_class;

  T from(const Scalar& s) const { return s.value(); }
  Scalar to(const T& v) const { return Scalar(v); }
  static bool is_zero(const T& v) { return sgn(v) == 0; }
  T mul(const T& a, const T& b) const { return a * b; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
};

using Term = std::pair<std::uint32_t, Scalar>;

struct SparseEntry {
  std::uint32_t index;
  Scalar value;
};

// Nonzeros of a matrix grouped by column and by row.
struct SparseView {
  std::vector<std::vector<SparseEntry>> by_col;  // by_col[c] = {(row, value)}
  std::vector<std::vector<SparseEntry>> by_row;  // by_row[r] = {(col, value)}

  explicit SparseView(const Matrix& m) : by_col(m.cols()), by_row(m.rows())
  {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) {
          by_col[j].push_back({static_cast<std::uint32_t>(i), m(i, j)});
          by_row[i].push_back({static_cast<std::uint32_t>(j), m(i, j)});
        }
  }
};

template <class E>
class Eliminator {
public:
  using T = typename E::T;
  using Row = std::vector<std::pair<std::uint32_t, T>>;

  Eliminator(E elems, std::size_t ncols) : e_(std::move(elems)), pivot_of_(ncols, -1) {}

  void add(std::vector<Term>& terms)
  {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Row row;
    for (std::size_t k = 0; k < terms.size();) {
      std::uint32_t col = terms[k].first;
      T acc = e_.from(terms[k].second);
      for (++k; k < terms.size() && terms[k].first == col; ++k)
        acc = e_.add(acc, e_.from(terms[k].second));
      if (!E::is_zero(acc))
        row.emplace_back(col, std::move(acc));
    }
    reduce_and_store(std::move(row));
  }

  std::vector<std::size_t> free_columns() const
  {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < pivot_of_.size(); ++c)
      if (pivot_of_[c] < 0)
        out.push_back(c);
    return out;
  }

  // One solution per free column (ascending): 1 there, 0 at the other free
  // columns, pivots read off the fully reduced rows.
  std::vector<std::vector<T>> null_basis(const std::vector<std::size_t>& free) const
  {
    std::size_t ncols = pivot_of_.size();
    std::size_t K = free.size();
    std::vector<long> free_index(ncols, -1);
    for (std::size_t k = 0; k < K; ++k)
      free_index[free[k]] = static_cast<long>(k);
    // reduced[c] = free-coordinate part of the fully reduced pivot row at c.
    std::vector<std::vector<T>> reduced(ncols);
    for (std::size_t c = ncols; c-- > 0;) {
      if (pivot_of_[c] < 0)
        continue;
      const Row& row = rows_[static_cast<std::size_t>(pivot_of_[c])];
      std::vector<T> dense(K, T(0));
      for (std::size_t t = 1; t < row.size(); ++t) {
        auto [col, val] = row[t];
        if (free_index[col] >= 0) {
          T& d = dense[static_cast<std::size_t>(free_index[col])];
          d = e_.add(d, val);
        } else {
          const std::vector<T>& other = reduced[col];
          for (std::size_t k = 0; k < K; ++k)
            if (!E::is_zero(other[k]))
              dense[k] = e_.sub(dense[k], e_.mul(val, other[k]));
        }
      }
      reduced[c] = std::move(dense);
    }
    std::vector<std::vector<T>> basis(K, std::vector<T>(ncols, T(0)));
    for (std::size_t k = 0; k < K; ++k) {
      basis[k][free[k]] = T(1);
      for (std::size_t c = 0; c < ncols; ++c)
        if (pivot_of_[c] >= 0)
          basis[k][c] = e_.neg(reduced[c][k]);
    }
    return basis;
  }

  const E& elems() const { return e_; }

private:
  void reduce_and_store(Row row)
  {
    while (!row.empty()) {
      std::uint32_t lead = row.front().first;
      long p = pivot_of_[lead];
      if (p < 0) {
        T inv = e_.inv(row.front().second);
        for (auto& [c, v] : row)
          v = e_.mul(v, inv);
        pivot_of_[lead] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(row));
        return;
      }
      row = subtract(row, rows_[static_cast<std::size_t>(p)]);
    }
  }

  // row - row[0] * pivot, where pivot has leading coefficient one at the same
  // column; the leading entry cancels.
  Row subtract(const Row& row, const Row& pivot) const
  {
    T factor = row.front().second;
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t a = 1, b = 1;
    while (a < row.size() || b < pivot.size()) {
      if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
        out.push_back(row[a++]);
      } else if (a == row.size() || pivot[b].first < row[a].first) {
        out.emplace_back(pivot[b].first, e_.neg(e_.mul(factor, pivot[b].second)));
        ++b;
      } else {
        T v = e_.sub(row[a].second, e_.mul(factor, pivot[b].second));
        if (!E::is_zero(v))
          out.emplace_back(row[a].first, std::move(v));
        ++a;
        ++b;
      }
    }
    return out;
  }

  E e_;
  std::vector<long> pivot_of_;
  std::vector<Row> rows_;
};

// Emits every naturality equation to sink(terms).
template <class Sink>
std::size_t emit_constraints(const TruncatedFIModule& v, const TruncatedFIModule& w, std::size_t window,
                             const std::vector<std::size_t>& offsets, Sink&& sink)
{
  ScalarOps ops(v.field());
  std::size_t count = 0;
  auto var = [&](std::size_t n, std::size_t r, std::size_t k) {
    return static_cast<std::uint32_t>(offsets[n] + r * v.dim(n) + k);
  };
  std::vector<Term> terms;
  // phi_{n'} A - B phi_n = 0 with A : V_n -> V_{n'}, B : W_n -> W_{n'}.
  auto emit = [&](std::size_t n, std::size_t n2, const Matrix& a, const Matrix& b) {
    SparseView sa(a), sb(b);
    for (std::size_t r = 0; r < w.dim(n2); ++r)
      for (std::size_t c = 0; c < v.dim(n); ++c) {
        terms.clear();
        for (const auto& [k, val] : sa.by_col[c])
          terms.emplace_back(var(n2, r, k), val);
        for (const auto& [k, val] : sb.by_row[r])
          terms.emplace_back(var(n, k, c), ops.neg(val));
        if (terms.empty())
          continue;
        sink(terms);
        ++count;
      }
  };
  for (std::size_t n = 2; n <= window; ++n)
    for (std::size_t i = 1; i < n; ++i)
      emit(n, n, v.transposition(n, i), w.transposition(n, i));
  for (std::size_t n = 0; n < window; ++n)
    emit(n, n + 1, v.inclusion(n), w.inclusion(n));
  return count;
}

template <class E>
std::pair<std::vector<std::size_t>, std::vector<std::vector<Scalar>>>
solve(E elems, const TruncatedFIModule& v, const TruncatedFIModule& w, std::size_t window,
      const std::vector<std::size_t>& offsets, std::size_t unknowns, std::size_t& constraints)
{
  Eliminator<E> elim(std::move(elems), unknowns);
  constraints = emit_constraints(v, w, window, offsets, [&](std::vector<Term>& t) { elim.add(t); });
  std::vector<std::size_t> free = elim.free_columns();
  auto raw = elim.null_basis(free);
  std::vector<std::vector<Scalar>> out;
  out.reserve(raw.size());
  for (const auto& vec : raw) {
    std::vector<Scalar> s;
    s.reserve(vec.size());
    for (const auto& x : vec)
      s.push_back(elim.elems().to(x));
    out.push_back(std::move(s));
  }
  return {std::move(free), std::move(out)};
}

}  // namespace

HomSpace::HomSpace(const TruncatedFIModule& v, const TruncatedFIModule& w, std::size_t window)
: source_(v), target_(w), window_(window)
{
  if (!(v.field() == w.field()))
    throw FimodError("hom: field mismatch (" + v.field().name() + " vs " + w.field().name() + ")");
  if (window > v.trunc() || window > w.trunc())
    throw FimodError("hom: window " + std::to_string(window) + " exceeds truncation (" +
                     std::to_string(v.trunc()) + ", " + std::to_string(w.trunc()) + ")");
  source_ = truncate(v, window);
  target_ = truncate(w, window);
  offsets_.resize(window + 2);
  for (std::size_t n = 0; n <= window; ++n)
    offsets_[n + 1] = offsets_[n] + v.dim(n) * w.dim(n);
  unknowns_ = offsets_[window + 1];

  std::vector<std::vector<Scalar>> vectors;
  if (v.field().is_prime_field())
    std::tie(free_columns_, vectors) =
        solve(ModPElems{v.field().modulus()}, source_, target_, window, offsets_, unknowns_, constraints_);
  else
    std::tie(free_columns_, vectors) =
        solve(RatElems{}, source_, target_, window, offsets_, unknowns_, constraints_);

  Field f = v.field();
  for (const auto& vec : vectors) {
    std::vector<Matrix> comps;
    for (std::size_t n = 0; n <= window; ++n) {
      Matrix c(f, w.dim(n), v.dim(n));
      std::size_t base = offsets_[n];
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t k = 0; k < c.cols(); ++k)
          c(r, k) = vec[base + r * c.cols() + k];
      comps.push_back(std::move(c));
    }
    basis_.emplace_back(source_, target_, std::move(comps));
  }
}

std::vector<Scalar> HomSpace::coordinates(const FIModuleMap& phi) const
{
  if (phi.trunc() < window_)
    throw FimodError("hom coordinates: map is truncated below the window");
  std::vector<Scalar> coeffs;
  coeffs.reserve(free_columns_.size());
  for (std::size_t col : free_columns_) {
    std::size_t n = 0;
    while (offsets_[n + 1] <= col)
      ++n;
    std::size_t local = col - offsets_[n];
    std::size_t cols = source_.dim(n);
    coeffs.push_back(phi.component(n)(local / cols, local % cols));
  }
  FIModuleMap rebuilt = combination(coeffs);
  for (std::size_t n = 0; n <= window_; ++n)
    if (!(rebuilt.component(n) == phi.component(n)))
      throw FimodError("hom coordinates: map is not in the hom space (degree " + std::to_string(n) + ")");
  return coeffs;
}

FIModuleMap HomSpace::combination(const std::vector<Scalar>& coeffs) const
{
  if (coeffs.size() != basis_.size())
    throw FimodError("hom combination: wrong number of coefficients");
  FIModuleMap acc = FIModuleMap::zero(source_, target_);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero())
      acc = add_maps(acc, scale_map(coeffs[k], basis_[k]));
  return acc;
}

std::vector<FIModuleMap> hom_basis(const TruncatedFIModule& v, const TruncatedFIModule& w, std::size_t window)
{
  return HomSpace(v, w, window).basis();
}

std::size_t dim_hom(const TruncatedFIModule& v, const TruncatedFIModule& w, std::size_t window)
{
  return HomSpace(v, w, window).dim();
}

}  // namespace fimod
