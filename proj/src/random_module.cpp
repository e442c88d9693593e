#include "fimod/random_module.hpp"

#include <algorithm>
#include <numeric>

#include "fimod/free_module.hpp"
#include "fimod/functors.hpp"

namespace fimod {

std::string profile_name(Profile p)
{
  switch (p) {
  case Profile::Free: return "free";
  case Profile::Quotient: return "quotient";
  case Profile::Shifted: return "shifted";
  case Profile::Mixed: return "mixed";
  }
  return "?";
}

Profile parse_profile(std::string_view name)
{
  for (Profile p : {Profile::Free, Profile::Quotient, Profile::Shifted, Profile::Mixed})
    if (profile_name(p) == name)
      return p;
  throw FimodError("unknown profile '" + std::string(name) + "' (expected free, quotient, shifted or mixed)");
}

std::size_t uniform_below(std::mt19937_64& rng, std::size_t k)
{
  return static_cast<std::size_t>(rng() % k);
}

Injection random_injection(std::mt19937_64& rng, std::size_t m, std::size_t n)
{
  if (m > n)
    throw FimodError("random_injection: m > n");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  for (std::size_t i = 0; i < m; ++i)
    std::swap(pool[i], pool[i + uniform_below(rng, n - i)]);
  pool.resize(m);
  return Injection(n, std::move(pool));
}

Matrix random_matrix(std::mt19937_64& rng, Field field, std::size_t rows, std::size_t cols)
{
  ScalarOps ops(field);
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = ops.from_int(static_cast<long>(uniform_below(rng, 5)) - 2);
  return m;
}

RandomModule random_module(std::uint64_t seed, Profile profile, Field field, std::size_t N)
{
  std::mt19937_64 rng(seed);
  bool quotient = profile == Profile::Quotient;
  bool shifted = profile == Profile::Shifted;
  if (profile == Profile::Mixed) {
    quotient = uniform_below(rng, 2) == 1;
    shifted = uniform_below(rng, 2) == 1;
  }
  std::size_t T = shifted ? N + 1 : N;
  std::size_t max_gen = std::min<std::size_t>(2, T);

  std::size_t summands = 1 + uniform_below(rng, 2);
  TruncatedFIModule v = TruncatedFIModule::zero(field, T);
  std::string recipe;
  for (std::size_t s = 0; s < summands; ++s) {
    std::size_t k = uniform_below(rng, max_gen + 1);
    TruncatedFIModule m = make_free(k, field, T);
    v = s == 0 ? m : direct_sum(v, m).module;
    recipe += (s ? " + " : "") + std::string("M([") + std::to_string(k) + "])";
  }

  if (quotient) {
    std::size_t count = 1 + uniform_below(rng, 2);
    std::vector<DegreeVector> seeds;
    for (std::size_t s = 0; s < count; ++s) {
      std::size_t degree = uniform_below(rng, max_gen + 1);
      Matrix c = random_matrix(rng, field, v.dim(degree), 1);
      DegreeVector seed_vector{degree, {}};
      for (std::size_t i = 0; i < c.rows(); ++i)
        seed_vector.coords.push_back(c(i, 0));
      seeds.push_back(std::move(seed_vector));
    }
    v = quotient_module(v, saturate_submodule(v, seeds)).module;
    recipe += " / <" + std::to_string(count) + (count == 1 ? " seed>" : " seeds>");
  }
  if (shifted) {
    v = shift(v);
    recipe = "S(" + recipe + ")";
  }
  ValidationReport rep = validate(v);
  if (!rep.ok())
    throw FimodError("random_module: produced an invalid module: " + rep.summary());
  return RandomModule{std::move(v), profile, seed, std::move(recipe)};
}

}  // namespace fimod
