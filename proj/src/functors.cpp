#include "fimod/functors.hpp"

namespace fimod {

std::string functor_name(FunctorTag tag)
{
  switch (tag) {
  case FunctorTag::Shift: return "S";
  case FunctorTag::Derivative: return "D";
  case FunctorTag::NegShift: return "Sneg";
  case FunctorTag::QPrime: return "Qprime";
  }
  return "?";
}

FunctorTag parse_functor(std::string_view name)
{
  if (name == "S")
    return FunctorTag::Shift;
  if (name == "D")
    return FunctorTag::Derivative;
  if (name == "Sneg")
    return FunctorTag::NegShift;
  if (name == "Qprime")
    return FunctorTag::QPrime;
  throw FimodError("unknown functor '" + std::string(name) + "' (expected S, D, Sneg or Qprime)");
}

TruncatedFIModule shift(const TruncatedFIModule& v)
{
  if (v.trunc() == 0)
    throw FimodError("shift: module truncated at degree 0 has no shift");
  std::size_t N = v.trunc() - 1;
  std::vector<std::size_t> dims(N + 1);
  std::vector<std::vector<Matrix>> ts(N + 1);
  std::vector<Matrix> incs;
  for (std::size_t n = 0; n <= N; ++n) {
    dims[n] = v.dim(n + 1);
    // sigma(s_i) is s_i on [n+1].
    for (std::size_t i = 1; i < n; ++i)
      ts[n].push_back(v.transposition(n + 1, i));
  }
  for (std::size_t n = 0; n < N; ++n)
    incs.push_back(v.matrix_of_injection(sigma_extend(Injection::standard_inclusion(n, n + 1))));
  return TruncatedFIModule(v.field(), N, std::move(dims), std::move(ts), std::move(incs));
}

FIModuleMap shift_map(const FIModuleMap& phi)
{
  if (phi.trunc() == 0)
    throw FimodError("shift_map: map truncated at degree 0");
  std::vector<Matrix> comps(phi.components().begin() + 1, phi.components().end());
  return FIModuleMap(shift(phi.source()), shift(phi.target()), std::move(comps));
}

FIModuleMap iota_nat(const TruncatedFIModule& v)
{
  if (v.trunc() == 0)
    throw FimodError("iota_nat: module truncated at degree 0");
  return FIModuleMap(truncate(v, v.trunc() - 1), shift(v), v.inclusions());
}

namespace {

struct CokernelTower {
  std::vector<CokernelData> per_degree;
};

CokernelTower iota_cokernels(const TruncatedFIModule& v)
{
  CokernelTower t;
  for (std::size_t n = 0; n < v.trunc(); ++n)
    t.per_degree.push_back(cokernel_data(v.inclusion(n)));
  return t;
}

}  // namespace

Derivative derivative(const TruncatedFIModule& v)
{
  TruncatedFIModule sv = shift(v);
  CokernelTower cok = iota_cokernels(v);
  std::size_t N = sv.trunc();
  std::vector<std::size_t> dims(N + 1);
  std::vector<std::vector<Matrix>> ts(N + 1);
  std::vector<Matrix> incs;
  for (std::size_t n = 0; n <= N; ++n) {
    const CokernelData& c = cok.per_degree[n];
    dims[n] = c.projection.rows();
    for (std::size_t i = 1; i < n; ++i)
      ts[n].push_back(mat_mul(c.projection, mat_mul(sv.transposition(n, i), c.section)));
  }
  for (std::size_t n = 0; n < N; ++n)
    incs.push_back(mat_mul(cok.per_degree[n + 1].projection,
                           mat_mul(sv.inclusion(n), cok.per_degree[n].section)));
  TruncatedFIModule dv(v.field(), N, std::move(dims), std::move(ts), std::move(incs));
  std::vector<Matrix> proj, sect;
  for (auto& c : cok.per_degree) {
    proj.push_back(std::move(c.projection));
    sect.push_back(std::move(c.section));
  }
  FIModuleMap pi(sv, dv, std::move(proj));
  return Derivative{dv, std::move(pi), std::move(sect)};
}

FIModuleMap derivative_map(const FIModuleMap& phi)
{
  Derivative ds = derivative(phi.source());
  Derivative dt = derivative(phi.target());
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= ds.module.trunc(); ++n)
    comps.push_back(mat_mul(dt.quotient.component(n), mat_mul(phi.component(n + 1), ds.section[n])));
  return FIModuleMap(ds.module, dt.module, std::move(comps));
}

Matrix neg_shift_matrix(const TruncatedFIModule& v, const Injection& f)
{
  std::size_t m = f.source_size();
  std::size_t n = f.target_size();
  std::size_t dm = m ? v.dim(m - 1) : 0;
  std::size_t dn = n ? v.dim(n - 1) : 0;
  Matrix out(v.field(), n * dn, m * dm);
  for (std::size_t x = 1; x <= m; ++x) {
    std::size_t fx = static_cast<std::size_t>(f(x));
    out.set_block((fx - 1) * dn, (x - 1) * dm,
                  v.matrix_of_injection(restrict_removing(f, static_cast<int>(x))));
  }
  return out;
}

TruncatedFIModule neg_shift(const TruncatedFIModule& v)
{
  std::size_t N = v.trunc();
  std::vector<std::size_t> dims(N + 1);
  std::vector<std::vector<Matrix>> ts(N + 1);
  std::vector<Matrix> incs;
  for (std::size_t n = 0; n <= N; ++n) {
    dims[n] = n ? n * v.dim(n - 1) : 0;
    for (std::size_t i = 1; i < n; ++i)
      ts[n].push_back(neg_shift_matrix(v, Injection::transposition(n, i)));
  }
  for (std::size_t n = 0; n < N; ++n)
    incs.push_back(neg_shift_matrix(v, Injection::standard_inclusion(n, n + 1)));
  return TruncatedFIModule(v.field(), N, std::move(dims), std::move(ts), std::move(incs));
}

FIModuleMap neg_shift_map(const FIModuleMap& phi)
{
  Field f = phi.source().field();
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= phi.trunc(); ++n) {
    if (n == 0) {
      comps.emplace_back(f, 0, 0);
      continue;
    }
    const Matrix& c = phi.component(n - 1);
    Matrix block(f, n * c.rows(), n * c.cols());
    for (std::size_t x = 0; x < n; ++x)
      block.set_block(x * c.rows(), x * c.cols(), c);
    comps.push_back(std::move(block));
  }
  return FIModuleMap(neg_shift(phi.source()), neg_shift(phi.target()), std::move(comps));
}

Matrix partial_matrix(const TruncatedFIModule& v, const Injection& f)
{
  std::size_t m = f.source_size();
  std::size_t n = f.target_size();
  std::size_t dn = n ? v.dim(n - 1) : 0;
  Matrix out(v.field(), n * dn, v.dim(m));
  for (std::size_t y = 1; y <= n; ++y) {
    if (f.in_image(static_cast<int>(y)))
      continue;
    out.set_block((y - 1) * dn, 0, v.matrix_of_injection(boundary_removal(f, static_cast<int>(y))));
  }
  return out;
}

Matrix q_prime_matrix(const TruncatedFIModule& v, const Injection& f)
{
  std::size_t m = f.source_size();
  std::size_t n = f.target_size();
  Matrix vf = v.matrix_of_injection(f);
  Matrix nf = neg_shift_matrix(v, f);
  Matrix out(v.field(), vf.rows() + nf.rows(), vf.cols() + nf.cols());
  out.set_block(0, 0, vf);
  out.set_block(vf.rows(), vf.cols(), nf);
  if (n > m)
    out.set_block(vf.rows(), 0, partial_matrix(v, f));
  return out;
}

QPrime q_prime(const TruncatedFIModule& v)
{
  Field field = v.field();
  std::size_t N = v.trunc();
  std::vector<std::size_t> dims(N + 1);
  std::vector<std::vector<Matrix>> ts(N + 1);
  std::vector<Matrix> incs;
  for (std::size_t n = 0; n <= N; ++n) {
    dims[n] = v.dim(n) + (n ? n * v.dim(n - 1) : 0);
    for (std::size_t i = 1; i < n; ++i)
      ts[n].push_back(q_prime_matrix(v, Injection::transposition(n, i)));
  }
  for (std::size_t n = 0; n < N; ++n)
    incs.push_back(q_prime_matrix(v, Injection::standard_inclusion(n, n + 1)));
  TruncatedFIModule q(field, N, std::move(dims), std::move(ts), std::move(incs));
  TruncatedFIModule sneg = neg_shift(v);

  std::vector<Matrix> kappa, proj;
  for (std::size_t n = 0; n <= N; ++n) {
    std::size_t dv = v.dim(n), ds = sneg.dim(n);
    Matrix k(field, dv + ds, ds);
    k.set_block(dv, 0, Matrix::identity(field, ds));
    Matrix p(field, dv, dv + ds);
    p.set_block(0, 0, Matrix::identity(field, dv));
    kappa.push_back(std::move(k));
    proj.push_back(std::move(p));
  }
  return QPrime{q, FIModuleMap(sneg, q, std::move(kappa)), FIModuleMap(q, v, std::move(proj))};
}

FIModuleMap q_prime_map(const FIModuleMap& phi)
{
  FIModuleMap nphi = neg_shift_map(phi);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= phi.trunc(); ++n)
    comps.push_back(block_diag(phi.component(n), nphi.component(n)));
  return FIModuleMap(q_prime(phi.source()).module, q_prime(phi.target()).module, std::move(comps));
}

TruncatedFIModule apply_functor(FunctorTag tag, const TruncatedFIModule& v)
{
  switch (tag) {
  case FunctorTag::Shift: return shift(v);
  case FunctorTag::Derivative: return derivative(v).module;
  case FunctorTag::NegShift: return neg_shift(v);
  case FunctorTag::QPrime: return q_prime(v).module;
  }
  throw FimodError("apply_functor: bad tag");
}

FIModuleMap apply_functor_map(FunctorTag tag, const FIModuleMap& phi)
{
  switch (tag) {
  case FunctorTag::Shift: return shift_map(phi);
  case FunctorTag::Derivative: return derivative_map(phi);
  case FunctorTag::NegShift: return neg_shift_map(phi);
  case FunctorTag::QPrime: return q_prime_map(phi);
  }
  throw FimodError("apply_functor_map: bad tag");
}

}  // namespace fimod
