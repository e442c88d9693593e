#include <doctest.h>

#include "fimod/free_module.hpp"
#include "fimod/random_module.hpp"
#include "fimod/witnesses.hpp"
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

TEST_SUITE("adjunction_witnesses") {

TEST_CASE("eta")
{
  for (Field f : kFields)
    for (std::size_t m = 0; m <= 2; ++m) {
      IsoWitness w = eta_iso(m, f, 5);
      CHECK(w.report.verified());
      CHECK(w.report.permutation);
      for (std::size_t n = 0; n <= 5; ++n)
        CHECK(w.map.source().dim(n) == oracle::falling_factorial(n, m + 1));
    }
  IsoWitness e0 = eta_iso(0, Field::rationals(), 4);
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(e0.map.component(n).rows() == n);
  CHECK_THROWS_AS(eta_iso(4, Field::rationals(), 4), FimodError);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 0; m + 1 <= n; ++m)
      CHECK(oracle::falling_factorial(n, m + 1) == n * oracle::falling_factorial(n - 1, m));
}

TEST_CASE("Theta and theta")
{
  Field q = Field::rationals();
  IsoWitness t0 = theta_big(0, q, 4);
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(t0.map.component(n) == Matrix::from_ints(q, {{1}}));
  IsoWitness t1 = theta_big(1, q, 4);
  CHECK(t1.map.source().dim(2) == 3);
  CHECK(t1.map.target().dim(2) == 3);
  for (Field f : kFields)
    for (std::size_t m = 0; m <= 3; ++m) {
      IsoWitness big = theta_big(m, f, 5);
      CHECK(big.report.verified());
      CHECK(big.report.permutation);
      IsoWitness small = theta_small(m, f, 5);
      CHECK(small.report.verified());
    }
  IsoWitness s1 = theta_small(1, q, 4);
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(s1.map.target().dim(n) == 1);
  CHECK(theta_small(0, q, 4).map.source().dim(2) == 0);
  CHECK_THROWS_AS(theta_big(4, q, 4), FimodError);
}

TEST_CASE("dagger modules have the predicted dimensions")
{
  for (Field f : kFields)
    for (std::uint64_t s = 0; s < 4; ++s) {
      TruncatedFIModule v = member(s, f, 4);
      DaggerModule neg = dagger_module(FunctorTag::NegShift, v);
      DaggerModule sh = dagger_module(FunctorTag::Shift, v);
      DaggerModule der = dagger_module(FunctorTag::Derivative, v);
      for (const DaggerModule* d : {&neg, &sh, &der})
        CHECK(d->validation.ok());
      for (std::size_t k = 0; k <= 3; ++k) {
        CHECK(neg.module.dim(k) == v.dim(k + 1));
        CHECK(sh.module.dim(k) == v.dim(k) + (k ? k * v.dim(k - 1) : 0));
        CHECK(der.module.dim(k) == (k ? k * v.dim(k - 1) : 0));
      }
    }
  CHECK_THROWS_AS(dagger_module(FunctorTag::QPrime, make_free(0, Field::rationals(), 3)), FimodError);
  CHECK_THROWS_AS(dagger_module(FunctorTag::Shift, make_free(0, Field::rationals(), 0)), FimodError);
}

TEST_CASE("alpha, beta, gamma on M([0]) and the zero module")
{
  Field q = Field::rationals();
  TruncatedFIModule m0 = make_free(0, q, 4);
  IsoWitness a = alpha_iso(m0);
  CHECK(a.report.verified());
  for (std::size_t k = 0; k <= 3; ++k) {
    REQUIRE(a.map.component(k).rows() == 1);
    CHECK_FALSE(a.map.component(k)(0, 0).is_zero());
  }
  IsoWitness b = beta_iso(m0);
  CHECK(b.report.verified());
  for (std::size_t k = 0; k <= 3; ++k)
    CHECK(b.map.source().dim(k) == k);
  IsoWitness g = gamma_iso(m0);
  CHECK(g.report.verified());
  for (std::size_t k = 0; k <= 3; ++k)
    CHECK(g.map.target().dim(k) == 1 + k);
  TruncatedFIModule z = TruncatedFIModule::zero(q, 3);
  CHECK(beta_iso(z).report.verified());
  CHECK(beta_iso(z).map.source().dim(2) == 0);
}

TEST_CASE("alpha, beta, gamma on random modules")
{
  for (Field f : kFields)
    for (std::uint64_t s = 0; s < 4; ++s) {
      TruncatedFIModule v = member(20 + s, f, 4);
      CHECK(alpha_iso(v).report.verified());
      CHECK(beta_iso(v).report.verified());
      IsoWitness g = gamma_iso(v);
      CHECK(g.report.verified());
    }
}

TEST_CASE("gamma's V-block is evaluation at the image of iota")
{
  Field q = Field::rationals();
  TruncatedFIModule v = member(5, q, 4);
  DaggerModule d = dagger_module(FunctorTag::Shift, v);
  IsoWitness g = gamma_iso(d);
  for (std::size_t k = 0; k <= 3; ++k) {
    IsoWitness theta = theta_big(k, q, 5);
    Matrix iota_id = theta.map.component(k).column(identity_index(k));
    for (std::size_t j = 0; j < d.spaces[k].dim(); ++j)
      CHECK(g.map.component(k).block(0, j, v.dim(k), 1) == mat_mul(d.spaces[k][j].component(k), iota_id));
  }
}

TEST_CASE("S_{-1} -| S: unit, counit, triangles")
{
  for (Field f : kFields)
    for (std::uint64_t s = 0; s < 4; ++s) {
      TruncatedFIModule v = member(s, f, 4);
      CHECK(check_naturality(negshift_unit(v)).ok());
      CHECK(check_naturality(negshift_counit(v)).ok());
      CHECK(triangle_identities(v).ok());
    }
  CHECK(star_to(3, 1) == Injection(3, {2, 3, 1}));
  CHECK(star_to(3, 3) == Injection::identity(3));
  CHECK_THROWS_AS(star_to(3, 4), FimodError);
}

TEST_CASE("S_{-1} -| S on frees: both sides have dimension d_{m+1}(W)")
{
  Field q = Field::rationals();
  TruncatedFIModule w = member(2, q, 4);
  for (std::size_t m = 0; m <= 2; ++m) {
    AdjunctionResult r = adjunction_negshift_shift(make_free(m, q, 4), w, 1);
    CHECK(r.dim_left == w.dim(m + 1));
    CHECK(r.dim_right == w.dim(m + 1));
    CHECK(r.checks.ok());
  }
}

TEST_CASE("D -| S_{-1} on frees: both sides have dimension m d_{m-1}(W)")
{
  Field q = Field::rationals();
  TruncatedFIModule w = member(6, q, 4);
  for (std::size_t m = 0; m <= 2; ++m) {
    AdjunctionResult r = adjunction_derivative_negshift(make_free(m, q, 4), w, 1);
    std::size_t expect = m ? m * w.dim(m - 1) : 0;
    CHECK(r.dim_left == expect);
    CHECK(r.dim_right == expect);
    CHECK(r.checks.ok());
  }
}

TEST_CASE("adjunctions on random pairs")
{
  for (Field f : kFields)
    for (std::uint64_t s = 0; s < 4; ++s) {
      TruncatedFIModule v = member(s, f, 4), w = member(s + 50, f, 4);
      AdjunctionResult a = adjunction_negshift_shift(v, w, s);
      CHECK_MESSAGE(a.checks.ok(), "Sneg-S seed " << s);
      AdjunctionResult b = adjunction_derivative_negshift(v, w, s);
      CHECK_MESSAGE(b.checks.ok(), "D-Sneg seed " << s);
    }
  CHECK_THROWS_AS(adjunction_negshift_shift(make_free(0, Field::rationals(), 3), make_free(0, Field::rationals(), 4)),
                  FimodError);
}

TEST_CASE("coinduction sequence")
{
  Field q = Field::rationals();
  SesResult z = coinduction_ses(TruncatedFIModule::zero(q, 3));
  CHECK(z.checks.ok());
  SesResult m1 = coinduction_ses(make_free(1, q, 4));
  CHECK(m1.checks.ok());
  SesResult m0 = coinduction_ses(make_free(0, q, 4));
  CHECK(m0.checks.ok());
  REQUIRE_FALSE(m0.non_natural_inclusions.empty());
  CHECK(m0.non_natural_inclusions.front() == 0);
  for (Field f : kFields)
    for (std::uint64_t s = 0; s < 4; ++s)
      CHECK(coinduction_ses(member(s, f, 4)).checks.ok());
}

TEST_CASE("GL recovery")
{
  for (Field f : kFields)
    for (std::size_t m = 0; m <= 2; ++m) {
      IsoWitness w = gl_recovery(m, f, 5);
      CHECK(w.report.verified());
      for (std::size_t n = 0; n <= 5; ++n)
        CHECK(w.map.target().dim(n) == oracle::falling_factorial(n, m) + oracle::falling_factorial(n, m + 1));
    }
  IsoWitness w1 = gl_recovery(1, Field::rationals(), 4);
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(w1.map.target().dim(n) == n * n);
  CHECK_THROWS_AS(gl_recovery(4, Field::rationals(), 4), FimodError);
}

TEST_CASE("the naive block-diagonal GL map is not natural")
{
  Field q = Field::rationals();
  TruncatedFIModule v = make_free(0, q, 3);
  QPrime qp = q_prime(v);
  IsoWitness eta = eta_iso(0, q, 3);
  DirectSum sum = direct_sum(v, make_free(1, q, 3));
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= 3; ++n)
    comps.push_back(block_diag(Matrix::identity(q, v.dim(n)), eta.map.component(n)));
  CHECK_FALSE(check_naturality(FIModuleMap(sum.module, qp.module, comps)).ok());
}

}  // TEST_SUITE
