#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "fimod/injection.hpp"
#include "fimod/module.hpp"

namespace fimod {

enum class Profile { Free, Quotient, Shifted, Mixed };

std::string profile_name(Profile p);
Profile parse_profile(std::string_view name);

/// Uniform integer in [0, k). Plain modulo keeps the stream identical across
/// standard libraries, which std::uniform_int_distribution does not promise.
std::size_t uniform_below(std::mt19937_64& rng, std::size_t k);

/// Uniform random injection [m] -> [n].
Injection random_injection(std::mt19937_64& rng, std::size_t m, std::size_t n);

/// Entries drawn from {-2, ..., 2}.
Matrix random_matrix(std::mt19937_64& rng, Field field, std::size_t rows, std::size_t cols);

struct RandomModule {
  TruncatedFIModule module;
  Profile profile;
  std::uint64_t seed;
  std::string recipe;  ///< e.g. "S(M([1]) + M([2]) / <2 seeds>)"
};

/// Draws one or two free summands M([k]), k <= 2, then (by profile) a quotient
/// by the saturation of one or two random vectors in degrees <= 2 and/or one
/// shift. The result is validated and truncated at N.
RandomModule random_module(std::uint64_t seed, Profile profile, Field field, std::size_t N);

}  // namespace fimod
