#include "fimod/free_module.hpp"

namespace fimod {

namespace {

// Column g of the result is the basis vector of f o g.
Matrix postcompose_matrix(Field field, const Injection& f, std::size_t m)
{
  auto src = enumerate_injections(m, f.source_size());
  Matrix out(field, count_injections(m, f.target_size()), src.size());
  ScalarOps ops(field);
  for (std::size_t c = 0; c < src.size(); ++c)
    out(injection_rank(compose(f, src[c])), c) = ops.one();
  return out;
}

}  // namespace

TruncatedFIModule make_free(std::size_t m, Field field, std::size_t N)
{
  if (m > N)
    throw FimodError("make_free: generator degree " + std::to_string(m) +
                     " exceeds truncation " + std::to_string(N));
  std::vector<std::size_t> dims(N + 1);
  std::vector<std::vector<Matrix>> ts(N + 1);
  std::vector<Matrix> incs;
  for (std::size_t n = 0; n <= N; ++n) {
    dims[n] = count_injections(m, n);
    for (std::size_t i = 1; i < n; ++i)
      ts[n].push_back(postcompose_matrix(field, Injection::transposition(n, i), m));
  }
  for (std::size_t n = 0; n < N; ++n)
    incs.push_back(postcompose_matrix(field, Injection::standard_inclusion(n, n + 1), m));
  return TruncatedFIModule(field, N, std::move(dims), std::move(ts), std::move(incs));
}

FIModuleMap rho_map(const Injection& f, Field field, std::size_t N)
{
  std::size_t ms = f.source_size();
  std::size_t mt = f.target_size();
  TruncatedFIModule from = make_free(mt, field, N);
  TruncatedFIModule to = make_free(ms, field, N);
  ScalarOps ops(field);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= N; ++n) {
    auto basis = enumerate_injections(mt, n);
    Matrix c(field, to.dim(n), from.dim(n));
    for (std::size_t j = 0; j < basis.size(); ++j)
      c(injection_rank(compose(basis[j], f)), j) = ops.one();
    comps.push_back(std::move(c));
  }
  return FIModuleMap(from, to, std::move(comps));
}

std::size_t identity_index(std::size_t m)
{
  return injection_rank(Injection::identity(m));
}

DegreeVector yoneda_to_element(const FIModuleMap& phi, std::size_t m)
{
  if (m > phi.trunc())
    throw FimodError("yoneda_to_element: degree above truncation");
  const Matrix& c = phi.component(m);
  std::size_t id = identity_index(m);
  DegreeVector out{m, {}};
  for (std::size_t r = 0; r < c.rows(); ++r)
    out.coords.push_back(c(r, id));
  return out;
}

FIModuleMap yoneda_from_element(const TruncatedFIModule& v, const DegreeVector& element)
{
  std::size_t m = element.degree;
  if (m > v.trunc())
    throw FimodError("yoneda_from_element: degree above truncation");
  if (element.coords.size() != v.dim(m))
    throw FimodError("yoneda_from_element: element has wrong length");
  Field field = v.field();
  TruncatedFIModule free = make_free(m, field, v.trunc());
  Matrix col(field, v.dim(m), 1);
  for (std::size_t r = 0; r < v.dim(m); ++r)
    col(r, 0) = element.coords[r];
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= v.trunc(); ++n) {
    Matrix c(field, v.dim(n), free.dim(n));
    auto basis = enumerate_injections(m, n);
    for (std::size_t j = 0; j < basis.size(); ++j)
      c.set_block(0, j, mat_mul(v.matrix_of_injection(basis[j]), col));
    comps.push_back(std::move(c));
  }
  return FIModuleMap(free, v, std::move(comps));
}

}  // namespace fimod
