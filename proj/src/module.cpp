#include "fimod/module.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace fimod {

struct TruncatedFIModule::Cache {
  std::mutex mutex;
  std::map<Injection, Matrix> matrices;
};

namespace {

std::string shape(const Matrix& m)
{
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void expect_shape(const Matrix& m, std::size_t r, std::size_t c, const std::string& what)
{
  if (m.rows() != r || m.cols() != c)
    throw FimodError(what + ": expected " + std::to_string(r) + "x" + std::to_string(c) +
                     ", got " + shape(m));
}

}  // namespace

TruncatedFIModule::TruncatedFIModule(Field field, std::size_t trunc, std::vector<std::size_t> dims,
                                     std::vector<std::vector<Matrix>> transpositions,
                                     std::vector<Matrix> inclusions)
{
  if (dims.size() != trunc + 1)
    throw FimodError("module: dims has " + std::to_string(dims.size()) + " entries, expected " +
                     std::to_string(trunc + 1));
  if (transpositions.size() != trunc + 1)
    throw FimodError("module: transposition table has wrong length");
  if (inclusions.size() != trunc)
    throw FimodError("module: inclusion list has wrong length");
  for (std::size_t n = 0; n <= trunc; ++n) {
    std::size_t expected = n >= 2 ? n - 1 : 0;
    if (transpositions[n].size() != expected)
      throw FimodError("module: degree " + std::to_string(n) + " needs " +
                       std::to_string(expected) + " transpositions");
    for (std::size_t i = 0; i < expected; ++i) {
      const Matrix& t = transpositions[n][i];
      if (!(t.field() == field))
        throw FimodError("module: field mismatch in transposition");
      expect_shape(t, dims[n], dims[n],
                   "transposition T[" + std::to_string(n) + "][" + std::to_string(i + 1) + "]");
    }
  }
  for (std::size_t n = 0; n < trunc; ++n) {
    if (!(inclusions[n].field() == field))
      throw FimodError("module: field mismatch in inclusion");
    expect_shape(inclusions[n], dims[n + 1], dims[n], "inclusion I[" + std::to_string(n) + "]");
  }
  impl_ = std::make_shared<const Impl>(Impl{field, trunc, std::move(dims), std::move(transpositions),
                                            std::move(inclusions), std::make_shared<Cache>()});
}

TruncatedFIModule TruncatedFIModule::zero(Field field, std::size_t trunc)
{
  std::vector<std::vector<Matrix>> ts(trunc + 1);
  for (std::size_t n = 2; n <= trunc; ++n)
    ts[n].assign(n - 1, Matrix(field, 0, 0));
  return TruncatedFIModule(field, trunc, std::vector<std::size_t>(trunc + 1, 0), std::move(ts),
                           std::vector<Matrix>(trunc, Matrix(field, 0, 0)));
}

std::size_t TruncatedFIModule::total_dim() const
{
  std::size_t s = 0;
  for (std::size_t d : impl_->dims)
    s += d;
  return s;
}

const Matrix& TruncatedFIModule::transposition(std::size_t n, std::size_t i) const
{
  if (n > trunc() || i < 1 || i >= n)
    throw FimodError("no transposition s_" + std::to_string(i) + " in degree " + std::to_string(n));
  return impl_->transpositions[n][i - 1];
}

const Matrix& TruncatedFIModule::inclusion(std::size_t n) const
{
  if (n >= trunc())
    throw FimodError("no inclusion out of degree " + std::to_string(n) + " (truncation " +
                     std::to_string(trunc()) + ")");
  return impl_->inclusions[n];
}

Matrix TruncatedFIModule::matrix_of_injection(const Injection& f) const
{
  if (f.target_size() > trunc())
    throw FimodError("matrix_of_injection: " + f.to_string() + " exceeds truncation " +
                     std::to_string(trunc()));
  {
    std::lock_guard lock(impl_->cache->mutex);
    auto it = impl_->cache->matrices.find(f);
    if (it != impl_->cache->matrices.end())
      return it->second;
  }
  GeneratorWord w = canonical_factorization(f);
  Matrix m = Matrix::identity(field(), dim(w.source_size));
  for (std::size_t n = w.source_size; n < w.target_size; ++n)
    m = mat_mul(inclusion(n), m);
  for (std::size_t a : w.transpositions)
    m = mat_mul(transposition(w.target_size, a), m);
  std::lock_guard lock(impl_->cache->mutex);
  impl_->cache->matrices.emplace(f, m);
  return m;
}

bool operator==(const TruncatedFIModule& a, const TruncatedFIModule& b)
{
  if (a.impl_ == b.impl_)
    return true;
  return a.field() == b.field() && a.trunc() == b.trunc() && a.dims() == b.dims() &&
         a.transpositions() == b.transpositions() && a.inclusions() == b.inclusions();
}

std::string Violation::to_string() const
{
  std::ostringstream out;
  out << relation << " relation fails in degree " << degree;
  if (i)
    out << " at s_" << i;
  if (j)
    out << ", s_" << j;
  return out.str();
}

std::string ValidationReport::summary() const
{
  if (ok())
    return "valid";
  std::ostringstream out;
  out << violations.size() << " violation(s); first: " << violations.front().to_string();
  return out.str();
}

ValidationReport validate(const TruncatedFIModule& v)
{
  ValidationReport rep;
  std::size_t N = v.trunc();
  for (std::size_t n = 2; n <= N; ++n) {
    for (std::size_t i = 1; i < n; ++i) {
      const Matrix& t = v.transposition(n, i);
      if (!mat_mul(t, t).is_identity())
        rep.violations.push_back({"involution", n, i, 0});
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const Matrix& a = v.transposition(n, i);
      const Matrix& b = v.transposition(n, i + 1);
      if (!(mat_mul(a, mat_mul(b, a)) == mat_mul(b, mat_mul(a, b))))
        rep.violations.push_back({"braid", n, i, i + 1});
    }
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 2; j < n; ++j) {
        const Matrix& a = v.transposition(n, i);
        const Matrix& b = v.transposition(n, j);
        if (!(mat_mul(a, b) == mat_mul(b, a)))
          rep.violations.push_back({"commute", n, i, j});
      }
  }
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 1; i < n; ++i)
      if (!(mat_mul(v.inclusion(n), v.transposition(n, i)) ==
            mat_mul(v.transposition(n + 1, i), v.inclusion(n))))
        rep.violations.push_back({"inclusion", n, i, 0});
  for (std::size_t n = 0; n + 2 <= N; ++n) {
    Matrix twice = mat_mul(v.inclusion(n + 1), v.inclusion(n));
    if (!(mat_mul(v.transposition(n + 2, n + 1), twice) == twice))
      rep.violations.push_back({"stabilizer", n, n + 1, 0});
  }
  return rep;
}

TruncatedFIModule truncate(const TruncatedFIModule& v, std::size_t k)
{
  if (k > v.trunc())
    throw FimodError("cannot truncate degree-" + std::to_string(v.trunc()) + " module to " +
                     std::to_string(k));
  if (k == v.trunc())
    return v;
  std::vector<std::size_t> dims(v.dims().begin(), v.dims().begin() + static_cast<long>(k) + 1);
  std::vector<std::vector<Matrix>> ts(v.transpositions().begin(),
                                      v.transpositions().begin() + static_cast<long>(k) + 1);
  std::vector<Matrix> incs(v.inclusions().begin(), v.inclusions().begin() + static_cast<long>(k));
  return TruncatedFIModule(v.field(), k, std::move(dims), std::move(ts), std::move(incs));
}

FIModuleMap::FIModuleMap(TruncatedFIModule source, TruncatedFIModule target, std::vector<Matrix> components)
: source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
  if (!(source_.field() == target_.field()))
    throw FimodError("module map: field mismatch");
  if (source_.trunc() != target_.trunc())
    throw FimodError("module map: truncation mismatch (" + std::to_string(source_.trunc()) +
                     " vs " + std::to_string(target_.trunc()) + ")");
  if (components_.size() != source_.trunc() + 1)
    throw FimodError("module map: wrong number of components");
  for (std::size_t n = 0; n < components_.size(); ++n)
    expect_shape(components_[n], target_.dim(n), source_.dim(n),
                 "map component " + std::to_string(n));
}

FIModuleMap FIModuleMap::identity(const TruncatedFIModule& v)
{
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= v.trunc(); ++n)
    comps.push_back(Matrix::identity(v.field(), v.dim(n)));
  return FIModuleMap(v, v, std::move(comps));
}

FIModuleMap FIModuleMap::zero(const TruncatedFIModule& source, const TruncatedFIModule& target)
{
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= source.trunc(); ++n)
    comps.emplace_back(source.field(), target.dim(n), source.dim(n));
  return FIModuleMap(source, target, std::move(comps));
}

bool operator==(const FIModuleMap& a, const FIModuleMap& b)
{
  return a.components_ == b.components_ && a.source_ == b.source_ && a.target_ == b.target_;
}

ValidationReport check_naturality(const FIModuleMap& phi)
{
  ValidationReport rep;
  const auto& v = phi.source();
  const auto& w = phi.target();
  for (std::size_t n = 2; n <= phi.trunc(); ++n)
    for (std::size_t i = 1; i < n; ++i)
      if (!(mat_mul(phi.component(n), v.transposition(n, i)) ==
            mat_mul(w.transposition(n, i), phi.component(n))))
        rep.violations.push_back({"natural-transposition", n, i, 0});
  for (std::size_t n = 0; n < phi.trunc(); ++n)
    if (!(mat_mul(phi.component(n + 1), v.inclusion(n)) ==
          mat_mul(w.inclusion(n), phi.component(n))))
      rep.violations.push_back({"natural-inclusion", n, 0, 0});
  return rep;
}

FIModuleMap compose_maps(const FIModuleMap& b, const FIModuleMap& a)
{
  if (!(a.target() == b.source()))
    throw FimodError("compose_maps: target of first map is not the source of the second");
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= a.trunc(); ++n)
    comps.push_back(mat_mul(b.component(n), a.component(n)));
  return FIModuleMap(a.source(), b.target(), std::move(comps));
}

FIModuleMap add_maps(const FIModuleMap& a, const FIModuleMap& b)
{
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw FimodError("add_maps: maps have different source or target");
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= a.trunc(); ++n)
    comps.push_back(mat_add(a.component(n), b.component(n)));
  return FIModuleMap(a.source(), a.target(), std::move(comps));
}

FIModuleMap scale_map(const Scalar& c, const FIModuleMap& a)
{
  std::vector<Matrix> comps;
  for (const Matrix& m : a.components())
    comps.push_back(scale(c, m));
  return FIModuleMap(a.source(), a.target(), std::move(comps));
}

FIModuleMap truncate_map(const FIModuleMap& phi, std::size_t k)
{
  std::vector<Matrix> comps(phi.components().begin(),
                            phi.components().begin() + static_cast<long>(k) + 1);
  return FIModuleMap(truncate(phi.source(), k), truncate(phi.target(), k), std::move(comps));
}

bool map_is_iso(const FIModuleMap& phi)
{
  for (const Matrix& m : phi.components())
    if (m.rows() != m.cols() || rank(m) != m.rows())
      return false;
  return true;
}

std::vector<Matrix> kernel_of(const FIModuleMap& phi)
{
  std::vector<Matrix> out;
  for (const Matrix& m : phi.components())
    out.push_back(nullspace(m));
  return out;
}

std::vector<Matrix> image_of(const FIModuleMap& phi)
{
  std::vector<Matrix> out;
  for (const Matrix& m : phi.components())
    out.push_back(column_basis(m));
  return out;
}

FIModuleMap inverse_map(const FIModuleMap& phi)
{
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= phi.trunc(); ++n) {
    auto inv = inverse(phi.component(n));
    if (!inv)
      throw FimodError("inverse_map: component " + std::to_string(n) + " is not invertible");
    comps.push_back(std::move(*inv));
  }
  return FIModuleMap(phi.target(), phi.source(), std::move(comps));
}

DirectSum direct_sum(const TruncatedFIModule& a, const TruncatedFIModule& b)
{
  if (!(a.field() == b.field()))
    throw FimodError("direct_sum: field mismatch");
  if (a.trunc() != b.trunc())
    throw FimodError("direct_sum: truncation mismatch");
  Field f = a.field();
  std::size_t N = a.trunc();
  std::vector<std::size_t> dims(N + 1);
  std::vector<std::vector<Matrix>> ts(N + 1);
  std::vector<Matrix> incs;
  for (std::size_t n = 0; n <= N; ++n) {
    dims[n] = a.dim(n) + b.dim(n);
    for (std::size_t i = 1; i < n; ++i)
      ts[n].push_back(block_diag(a.transposition(n, i), b.transposition(n, i)));
  }
  for (std::size_t n = 0; n < N; ++n)
    incs.push_back(block_diag(a.inclusion(n), b.inclusion(n)));
  TruncatedFIModule sum(f, N, std::move(dims), std::move(ts), std::move(incs));

  std::vector<Matrix> ia, ib, pa, pb;
  for (std::size_t n = 0; n <= N; ++n) {
    std::size_t da = a.dim(n), db = b.dim(n);
    Matrix inj_a(f, da + db, da), inj_b(f, da + db, db);
    inj_a.set_block(0, 0, Matrix::identity(f, da));
    inj_b.set_block(da, 0, Matrix::identity(f, db));
    pa.push_back(inj_a.transpose());
    pb.push_back(inj_b.transpose());
    ia.push_back(std::move(inj_a));
    ib.push_back(std::move(inj_b));
  }
  return DirectSum{sum, FIModuleMap(a, sum, std::move(ia)), FIModuleMap(b, sum, std::move(ib)),
                   FIModuleMap(sum, a, std::move(pa)), FIModuleMap(sum, b, std::move(pb))};
}

Matrix column_basis(const Matrix& m)
{
  RowEchelon e = rref(m.transpose());
  return e.reduced.block(0, 0, e.pivots.size(), m.rows()).transpose();
}

std::vector<Matrix> saturate_submodule(const TruncatedFIModule& v, const std::vector<DegreeVector>& seeds)
{
  Field f = v.field();
  std::size_t N = v.trunc();
  std::vector<Matrix> basis;
  for (std::size_t n = 0; n <= N; ++n)
    basis.emplace_back(f, v.dim(n), 0);
  for (const DegreeVector& s : seeds) {
    if (s.degree > N)
      throw FimodError("saturate_submodule: seed degree " + std::to_string(s.degree) +
                       " exceeds truncation");
    if (s.coords.size() != v.dim(s.degree))
      throw FimodError("saturate_submodule: seed has wrong length");
    Matrix col(f, s.coords.size(), 1);
    for (std::size_t k = 0; k < s.coords.size(); ++k)
      col(k, 0) = s.coords[k];
    basis[s.degree] = hstack(basis[s.degree], col);
  }
  // Inclusions only raise degree, so one ascending sweep reaches the fixpoint.
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0)
      basis[n] = hstack(basis[n], mat_mul(v.inclusion(n - 1), basis[n - 1]));
    Matrix span = column_basis(basis[n]);
    // Transpositions are involutions, so closing under them closes under S_n.
    for (;;) {
      Matrix grown = span;
      for (std::size_t i = 1; i < n; ++i)
        grown = hstack(grown, mat_mul(v.transposition(n, i), span));
      Matrix next = column_basis(grown);
      bool stable = next.cols() == span.cols();
      span = std::move(next);
      if (stable)
        break;
    }
    basis[n] = std::move(span);
  }
  return basis;
}

Quotient quotient_module(const TruncatedFIModule& v, const std::vector<Matrix>& sub)
{
  Field f = v.field();
  std::size_t N = v.trunc();
  if (sub.size() != N + 1)
    throw FimodError("quotient_module: need one basis matrix per degree");
  std::vector<CokernelData> cok;
  for (std::size_t n = 0; n <= N; ++n) {
    if (sub[n].rows() != v.dim(n))
      throw FimodError("quotient_module: basis in degree " + std::to_string(n) + " has wrong height");
    cok.push_back(cokernel_data(sub[n]));
  }
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t i = 1; i < n; ++i)
      if (!mat_mul(cok[n].projection, mat_mul(v.transposition(n, i), sub[n])).is_zero())
        throw FimodError("quotient_module: subspace in degree " + std::to_string(n) +
                         " is not stable under s_" + std::to_string(i));
    if (n < N && !mat_mul(cok[n + 1].projection, mat_mul(v.inclusion(n), sub[n])).is_zero())
      throw FimodError("quotient_module: subspace in degree " + std::to_string(n) +
                       " is not stable under the inclusion");
  }
  std::vector<std::size_t> dims(N + 1);
  std::vector<std::vector<Matrix>> ts(N + 1);
  std::vector<Matrix> incs;
  for (std::size_t n = 0; n <= N; ++n) {
    dims[n] = cok[n].projection.rows();
    for (std::size_t i = 1; i < n; ++i)
      ts[n].push_back(mat_mul(cok[n].projection, mat_mul(v.transposition(n, i), cok[n].section)));
  }
  for (std::size_t n = 0; n < N; ++n)
    incs.push_back(mat_mul(cok[n + 1].projection, mat_mul(v.inclusion(n), cok[n].section)));
  TruncatedFIModule q(f, N, std::move(dims), std::move(ts), std::move(incs));
  std::vector<Matrix> proj, sect;
  for (auto& c : cok) {
    proj.push_back(std::move(c.projection));
    sect.push_back(std::move(c.section));
  }
  return Quotient{q, FIModuleMap(v, q, std::move(proj)), std::move(sect)};
}

}  // namespace fimod
