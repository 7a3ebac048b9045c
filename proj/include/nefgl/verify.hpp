#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "nefgl/polymatrix.hpp"
#include "nefgl/recover.hpp"

namespace nefgl {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  nlohmann::json witness = nullptr;

  bool pass() const { return failures == 0; }
};

struct RunReport {
  std::string command;
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<CheckResult> results;
  double wall_time_s = 0;

  bool pass() const;
  nlohmann::json to_json(bool with_timing = true) const;
};

const std::vector<std::string>& verify_suite_names();
// Throws PreconditionError for an unknown suite name.
RunReport run_verify_suite(const std::string& suite, std::uint64_t seed, std::size_t cases);

// convolution, cumulant or normalization.
RunReport run_rouques_check(const std::string& suite, std::uint64_t seed);

// FNV-1a, hex encoded.
std::string input_digest(const std::string& text);

// Rebuilds V from a moment table through the mean map m = z grad log f and
// its series inverse, then compares with v through degree max_degree - 2.
// Returns the number of mismatching coefficients.
std::size_t recover_round_trip_mismatches(const PolyMatrix& v, const MeasureTable& table);

// Coefficients of B(m) = sum_k m_k B_k for a linear polynomial matrix.
std::vector<RatMatrix> linear_coefficients(const PolyMatrix& b);

}  // namespace nefgl
