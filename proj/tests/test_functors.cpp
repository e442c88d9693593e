#include <doctest.h>

#include "fimod/free_module.hpp"
#include "fimod/functors.hpp"
#include "fimod/hom.hpp"
#include "fimod/random_module.hpp"
#include "support.hpp"

using namespace fimod;

namespace {

const Field kFields[] = {Field::rationals(), Field::prime(2), Field::prime(5)};

std::vector<TruncatedFIModule> family(Field f, std::size_t N, std::size_t count)
{
  std::vector<TruncatedFIModule> out;
  const Profile profiles[] = {Profile::Free, Profile::Quotient, Profile::Shifted, Profile::Mixed};
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_module(300 + i, profiles[i % 4], f, N).module);
  return out;
}

FIModuleMap random_hom(const TruncatedFIModule& v, const TruncatedFIModule& w, std::mt19937_64& rng)
{
  HomSpace h(v, w, v.trunc());
  ScalarOps ops(v.field());
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < h.dim(); ++k)
    c.push_back(ops.from_int(static_cast<long>(uniform_below(rng, 5)) - 2));
  return h.combination(c);
}

}  // namespace

TEST_SUITE("free_modules") {

TEST_CASE("make_free dimensions and structure")
{
  Field q = Field::rationals();
  TruncatedFIModule m0 = make_free(0, q, 3);
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(m0.dim(n) == 1);
  CHECK(m0.transposition(3, 2).is_identity());
  TruncatedFIModule m1 = make_free(1, q, 3);
  CHECK(m1.dim(0) == 0);
  CHECK(m1.dim(3) == 3);
  TruncatedFIModule m2 = make_free(2, q, 4);
  std::vector<std::size_t> d2{0, 0, 2, 6, 12};
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(m2.dim(n) == d2[n]);
  CHECK_THROWS_AS(make_free(3, q, 2), FimodError);
  for (std::size_t N = 0; N <= 6; ++N)
    for (std::size_t m = 0; m <= N; ++m) {
      TruncatedFIModule v = make_free(m, Field::prime(2), N);
      CHECK(validate(v).ok());
      for (std::size_t n = 0; n <= N; ++n)
        CHECK(v.dim(n) == oracle::falling_factorial(n, m));
    }
}

TEST_CASE("structure maps are post-composition")
{
  Field q = Field::rationals();
  TruncatedFIModule v = make_free(2, q, 4);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    std::size_t b = 2 + uniform_below(rng, 3), a = 2 + uniform_below(rng, b - 1);
    Injection f = random_injection(rng, a, b);
    Matrix mf = v.matrix_of_injection(f);
    auto basis = enumerate_injections(2, a);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      std::size_t target = injection_rank(compose(f, basis[j]));
      for (std::size_t i = 0; i < mf.rows(); ++i)
        CHECK(mf(i, j).is_one() == (i == target));
    }
  }
}

TEST_CASE("rho_map")
{
  Field q = Field::rationals();
  CHECK(rho_map(Injection::identity(2), q, 3) == FIModuleMap::identity(make_free(2, q, 3)));
  FIModuleMap aug = rho_map(Injection::standard_inclusion(0, 1), q, 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    const Matrix& c = aug.component(n);
    CHECK(c.rows() == 1);
    for (std::size_t j = 0; j < c.cols(); ++j)
      CHECK(c(0, j).is_one());
  }
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    std::size_t c = uniform_below(rng, 4), b = uniform_below(rng, c + 1), a = uniform_below(rng, b + 1);
    Injection f = random_injection(rng, a, b), g = random_injection(rng, b, c);
    FIModuleMap lhs = rho_map(compose(g, f), q, 4);
    FIModuleMap rhs = compose_maps(rho_map(f, q, 4), rho_map(g, q, 4));
    CHECK(lhs == rhs);
    CHECK(check_naturality(lhs).ok());
  }
}

TEST_CASE("Yoneda")
{
  Field f = Field::prime(5);
  TruncatedFIModule m2 = make_free(2, f, 4);
  DegreeVector id = yoneda_to_element(FIModuleMap::identity(m2), 2);
  REQUIRE(id.coords.size() == 2);
  CHECK(id.coords[identity_index(2)].is_one());
  CHECK(id.coords[1 - identity_index(2)].is_zero());
  std::mt19937_64 rng(3);
  for (const TruncatedFIModule& v : family(Field::rationals(), 4, 8)) {
    CHECK(dim_hom(make_free(0, v.field(), 4), v, 4) == v.dim(0));
    for (std::size_t m = 0; m <= 4; ++m) {
      HomSpace h(make_free(m, v.field(), 4), v, 4);
      CHECK(h.dim() == v.dim(m));
      for (int t = 0; t < 5 && h.dim() > 0; ++t) {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < h.dim(); ++k)
          c.push_back(ScalarOps(v.field()).from_int(static_cast<long>(uniform_below(rng, 7)) - 3));
        FIModuleMap phi = h.combination(c);
        DegreeVector e = yoneda_to_element(phi, m);
        CHECK(yoneda_from_element(v, e) == phi);
      }
    }
  }
}

}  // TEST_SUITE

TEST_SUITE("functors") {

TEST_CASE("shift")
{
  Field q = Field::rationals();
  TruncatedFIModule s0 = shift(make_free(0, q, 4));
  CHECK(s0 == make_free(0, q, 3));
  TruncatedFIModule s1 = shift(make_free(1, q, 4));
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(s1.dim(n) == n + 1);
  CHECK(validate(s1).ok());
  CHECK(shift_map(FIModuleMap::identity(make_free(1, q, 4))) == FIModuleMap::identity(s1));
  CHECK_THROWS_AS(shift(make_free(0, q, 0)), FimodError);
  // The structure map of f on SV is V(sigma(f)).
  TruncatedFIModule v = make_free(2, q, 5);
  TruncatedFIModule sv = shift(v);
  for (const Injection& f : enumerate_injections(2, 4))
    CHECK(sv.matrix_of_injection(f) == v.matrix_of_injection(sigma_extend(f)));
}

TEST_CASE("iota is natural")
{
  for (Field f : kFields) {
    CHECK(iota_nat(make_free(0, f, 3)).component(2).is_identity());
    CHECK(check_naturality(iota_nat(TruncatedFIModule::zero(f, 3))).ok());
    auto fam = family(f, 4, 6);
    std::mt19937_64 rng(4);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const TruncatedFIModule& v = fam[i];
      CHECK(check_naturality(iota_nat(v)).ok());
      const TruncatedFIModule& w = fam[(i + 1) % fam.size()];
      for (int t = 0; t < 9; ++t) {
        FIModuleMap phi = random_hom(v, w, rng);
        CHECK(compose_maps(shift_map(phi), iota_nat(v)) == compose_maps(iota_nat(w), truncate_map(phi, 3)));
      }
    }
  }
}

TEST_CASE("derivative")
{
  Field q = Field::rationals();
  Derivative d0 = derivative(make_free(0, q, 4));
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(d0.module.dim(n) == 0);
  Derivative d1 = derivative(make_free(1, q, 4));
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(d1.module.dim(n) == 1);
  CHECK(derivative(TruncatedFIModule::zero(q, 3)).module == TruncatedFIModule::zero(q, 2));
  for (Field f : kFields) {
    for (std::size_t m = 0; m <= 3; ++m) {
      TruncatedFIModule v = make_free(m, f, 5);
      Derivative d = derivative(v);
      for (std::size_t n = 0; n <= 4; ++n)
        CHECK(d.module.dim(n) == v.dim(n + 1) - v.dim(n));
    }
    for (const TruncatedFIModule& v : family(f, 4, 8)) {
      Derivative d = derivative(v);
      CHECK(validate(d.module).ok());
      CHECK(check_naturality(d.quotient).ok());
      FIModuleMap zero = compose_maps(d.quotient, iota_nat(v));
      for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(zero.component(n).is_zero());
        CHECK(mat_mul(d.quotient.component(n), d.section[n]).is_identity());
      }
    }
  }
}

TEST_CASE("derivative_map and neg_shift_map are functorial")
{
  std::mt19937_64 rng(5);
  for (Field f : kFields) {
    auto fam = family(f, 4, 4);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const TruncatedFIModule &a = fam[i], &b = fam[(i + 1) % 4], &c = fam[(i + 2) % 4];
      FIModuleMap phi = random_hom(a, b, rng), psi = random_hom(b, c, rng);
      for (FunctorTag tag : {FunctorTag::Shift, FunctorTag::Derivative, FunctorTag::NegShift, FunctorTag::QPrime}) {
        FIModuleMap fp = apply_functor_map(tag, phi);
        CHECK(check_naturality(fp).ok());
        CHECK(apply_functor_map(tag, compose_maps(psi, phi)) == compose_maps(apply_functor_map(tag, psi), fp));
        CHECK(apply_functor_map(tag, FIModuleMap::identity(a)) == FIModuleMap::identity(apply_functor(tag, a)));
      }
    }
  }
}

TEST_CASE("neg_shift")
{
  Field q = Field::rationals();
  TruncatedFIModule s = neg_shift(make_free(1, q, 4));
  CHECK(s.dim(0) == 0);
  CHECK(s.dim(3) == 6);
  CHECK(s.dim(3) == make_free(2, q, 4).dim(3));
  CHECK(validate(s).ok());
  // A bijection acts by a block permutation with blocks V(f restricted).
  TruncatedFIModule v = make_free(1, q, 4);
  for (const Injection& f : enumerate_injections(3, 3)) {
    Matrix m = neg_shift_matrix(v, f);
    std::size_t b = v.dim(2);
    for (int x = 1; x <= 3; ++x)
      for (int y = 1; y <= 3; ++y) {
        Matrix blk = m.block(static_cast<std::size_t>(y - 1) * b, static_cast<std::size_t>(x - 1) * b, b, b);
        if (f(static_cast<std::size_t>(x)) == y)
          CHECK(blk == v.matrix_of_injection(restrict_removing(f, x)));
        else
          CHECK(blk.is_zero());
      }
  }
  for (Field f : kFields)
    for (const TruncatedFIModule& w : family(f, 4, 8))
      CHECK(validate(neg_shift(w)).ok());
}

TEST_CASE("partial_matrix")
{
  Field q = Field::rationals();
  TruncatedFIModule v = make_free(1, q, 4);
  for (const Injection& f : enumerate_injections(2, 2))
    CHECK(partial_matrix(v, f).is_zero());
  TruncatedFIModule m0 = make_free(0, q, 2);
  CHECK(partial_matrix(m0, Injection::standard_inclusion(0, 1)) == Matrix::from_ints(q, {{1}}));
  Matrix p = partial_matrix(v, Injection(3, {2}));
  // Blocks y = 1 and y = 3 carry V(boundary_removal) : V_1 -> V_2.
  CHECK(p.rows() == 3 * v.dim(2));
  CHECK(p.block(0, 0, 2, 1) == v.matrix_of_injection(boundary_removal(Injection(3, {2}), 1)));
  CHECK(p.block(2, 0, 2, 1).is_zero());
  CHECK(p.block(4, 0, 2, 1) == v.matrix_of_injection(boundary_removal(Injection(3, {2}), 3)));
}

TEST_CASE("Leibniz rule on 200 random pairs per module")
{
  for (Field f : kFields)
    for (const TruncatedFIModule& v : family(f, 5, 6)) {
      TruncatedFIModule sv = neg_shift(v);
      std::mt19937_64 rng(9);
      bool ok = true;
      for (int t = 0; t < 200; ++t) {
        std::size_t c = uniform_below(rng, 6), b = uniform_below(rng, c + 1), a = uniform_below(rng, b + 1);
        Injection g1 = random_injection(rng, a, b), g2 = random_injection(rng, b, c);
        Matrix lhs = partial_matrix(v, compose(g2, g1));
        Matrix rhs = mat_add(mat_mul(partial_matrix(v, g2), v.matrix_of_injection(g1)),
                             mat_mul(sv.matrix_of_injection(g2), partial_matrix(v, g1)));
        ok = ok && lhs == rhs;
      }
      CHECK(ok);
    }
}

TEST_CASE("q_prime")
{
  Field q = Field::rationals();
  QPrime z = q_prime(TruncatedFIModule::zero(q, 3));
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(z.module.dim(n) == 0);
  QPrime q1 = q_prime(make_free(1, q, 5));
  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(q1.module.dim(n) == n * n);
  for (Field f : kFields)
    for (const TruncatedFIModule& v : family(f, 4, 8)) {
      QPrime qp = q_prime(v);
      CHECK(validate(qp.module).ok());
      CHECK(check_naturality(qp.kappa).ok());
      CHECK(check_naturality(qp.projection).ok());
      for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(mat_mul(qp.projection.component(n), qp.kappa.component(n)).is_zero());
        CHECK(rank(qp.kappa.component(n)) + rank(qp.projection.component(n)) == qp.module.dim(n));
      }
      // Bijections act block-diagonally.
      for (std::size_t n = 0; n <= 4; ++n)
        for (const Injection& g : enumerate_injections(n, n)) {
          Matrix m = q_prime_matrix(v, g);
          CHECK(m.block(v.dim(n), 0, m.rows() - v.dim(n), v.dim(n)).is_zero());
        }
    }
}

TEST_CASE("functor names")
{
  for (FunctorTag t : {FunctorTag::Shift, FunctorTag::Derivative, FunctorTag::NegShift, FunctorTag::QPrime})
    CHECK(parse_functor(functor_name(t)) == t);
  CHECK_THROWS_AS(parse_functor("T"), FimodError);
}

}  // TEST_SUITE
