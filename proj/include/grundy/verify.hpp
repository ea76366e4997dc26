#ifndef GRUNDY_VERIFY_HPP
#define GRUNDY_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "grundy/position.hpp"

namespace grundy {

/// Bound overrides for a verification sweep; zero fields fall back to the
/// suite's defaults. The seed fully determines any randomized trials.
struct VerifyConfig {
  std::uint32_t max = 0;
  std::uint32_t x_max = 0;
  std::uint32_t z_max = 0;
  std::uint32_t i_max = 0;
  std::uint32_t trials = 0;
  std::uint64_t seed = 42;
  Budget budget;
};

/// One sweep's outcome. A mismatch is the minimal reproduction unit:
/// {"suite":..., "input":..., "expected":..., "actual":...}. Mismatches are
/// sorted by input so merged or re-run reports compare bit-equal.
struct VerificationReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::vector<nlohmann::json> mismatches;
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;

  bool ok() const { return mismatches.empty(); }
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Unknown names throw std::invalid_argument.
VerificationReport run_suite(const std::string& name,
                             const VerifyConfig& config);

}  // namespace grundy

#endif  // GRUNDY_VERIFY_HPP
