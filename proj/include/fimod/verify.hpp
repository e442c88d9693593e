#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fimod/report.hpp"
#include "fimod/scalar.hpp"

namespace fimod {

struct VerifyOptions {
  Field field = Field::rationals();
  std::size_t trunc = 4;
  std::uint64_t seed = 0;
  std::size_t count = 5;   ///< random modules (or module pairs) per suite
  std::size_t pairs = 200; ///< random composable pairs for the Leibniz suite
  bool timings = true;     ///< false reports elapsed_ms = 0
};

struct SuiteReport {
  std::string suite;
  CheckList checks;
  long long elapsed_ms = 0;
};

/// eta, theta, alpha, beta, gamma, adjunctions, ses, gl, leibniz; sorted.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all" (checks prefixed by suite name).
/// Throws FimodError for an unknown suite or an unusable truncation.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts);

/// {"suite", "checks": [{"name", "status", "detail"}], "elapsed_ms"}.
nlohmann::json report_to_json(const SuiteReport& r);

}  // namespace fimod
