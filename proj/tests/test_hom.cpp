#include <doctest.h>

#include "fimod/free_module.hpp"
#include "fimod/functors.hpp"
#include "fimod/hom.hpp"
#include "fimod/random_module.hpp"
#include "support.hpp"

using namespace fimod;

namespace {

const Field kFields[] = {Field::rationals(), Field::prime(2), Field::prime(5)};

TruncatedFIModule member(std::uint64_t seed, Field f, std::size_t N)
{
  const Profile profiles[] = {Profile::Free, Profile::Quotient, Profile::Shifted, Profile::Mixed};
  return random_module(seed, profiles[seed % 4], f, N).module;
}

}  // namespace

TEST_SUITE("hom_solver") {

TEST_CASE("small known dimensions")
{
  Field q = Field::rationals();
  CHECK(dim_hom(make_free(1, q, 4), make_free(0, q, 4), 4) == 1);
  CHECK(dim_hom(TruncatedFIModule::zero(q, 3), make_free(1, q, 3), 3) == 0);
  CHECK(dim_hom(make_free(1, q, 3), make_free(1, q, 3), 3) == 1);
  CHECK(dim_hom(make_free(1, q, 3), make_free(2, q, 3), 3) == 0);
  CHECK(dim_hom(make_free(2, q, 3), make_free(1, q, 3), 3) == 2);
  CHECK_THROWS_AS(HomSpace(make_free(0, q, 3), make_free(0, q, 2), 3), FimodError);
  CHECK_THROWS_AS(HomSpace(make_free(0, q, 3), make_free(0, Field::prime(2), 3), 3), FimodError);
}

TEST_CASE("generator constraints agree with constraints on all injections")
{
  for (Field f : kFields)
    for (std::uint64_t s = 0; s < 8; ++s) {
      TruncatedFIModule v = member(s, f, 3), w = member(s + 40, f, 3);
      for (std::size_t window : {2u, 3u})
        CHECK(dim_hom(v, w, window) == oracle::hom_dim_all_injections(v, w, window));
    }
  // A few at truncation 4.
  for (std::uint64_t s = 0; s < 3; ++s) {
    TruncatedFIModule v = member(s, Field::prime(5), 4), w = member(s + 7, Field::prime(5), 4);
    CHECK(dim_hom(v, w, 4) == oracle::hom_dim_all_injections(v, w, 4));
  }
}

TEST_CASE("basis elements are natural for non-generator injections")
{
  std::mt19937_64 rng(1);
  for (Field f : kFields)
    for (std::uint64_t s = 0; s < 6; ++s) {
      TruncatedFIModule v = member(s, f, 4), w = member(s + 11, f, 4);
      HomSpace h(v, w, 4);
      for (const FIModuleMap& phi : h.basis()) {
        CHECK(check_naturality(phi).ok());
        for (int t = 0; t < 100; ++t) {
          std::size_t b = uniform_below(rng, 5), a = uniform_below(rng, b + 1);
          Injection g = random_injection(rng, a, b);
          CHECK(mat_mul(phi.component(b), v.matrix_of_injection(g)) ==
                mat_mul(w.matrix_of_injection(g), phi.component(a)));
        }
      }
    }
}

TEST_CASE("coordinates invert combination")
{
  std::mt19937_64 rng(2);
  for (Field f : kFields) {
    TruncatedFIModule v = member(3, f, 4);
    TruncatedFIModule vv = direct_sum(v, v).module;
    HomSpace h(v, vv, 4);
    CHECK(h.dim() == 2 * dim_hom(v, v, 4));
    ScalarOps ops(f);
    for (int t = 0; t < 10; ++t) {
      std::vector<Scalar> c;
      for (std::size_t k = 0; k < h.dim(); ++k)
        c.push_back(ops.from_int(static_cast<long>(uniform_below(rng, 9)) - 4));
      CHECK(h.coordinates(h.combination(c)) == c);
    }
    // The identity lies in End(V).
    HomSpace end(v, v, 4);
    CHECK_NOTHROW(end.coordinates(FIModuleMap::identity(v)));
    // A non-natural family of matrices is rejected.
    if (v.dim(1) > 0 && v.dim(2) > 0) {
      std::vector<Matrix> comps;
      for (std::size_t n = 0; n <= 4; ++n)
        comps.push_back(n == 1 ? Matrix::identity(f, v.dim(1)) : Matrix::zero(f, v.dim(n), v.dim(n)));
      FIModuleMap bad(v, v, comps);
      if (!check_naturality(bad).ok())
        CHECK_THROWS_AS(end.coordinates(bad), FimodError);
    }
  }
}

TEST_CASE("solved windows shrink the modules")
{
  Field f = Field::prime(2);
  TruncatedFIModule v = make_free(1, f, 4);
  HomSpace h(v, v, 2);
  CHECK(h.window() == 2);
  CHECK(h.source().trunc() == 2);
  CHECK(h[0].trunc() == 2);
}

}  // TEST_SUITE
