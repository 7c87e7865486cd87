#pragma once

// Named verification suites and their reports.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phasesphere/homology.hpp"

namespace phasesphere {

enum class CheckStatus { Pass, Fail, Skip };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::pair<std::string, std::string>> params;
  std::string detail;
  std::string witness;  // first failure, if any
  double seconds = 0;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 1;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Zero values mean "the suite's default".
struct SuiteParams {
  std::size_t max_n = 0;
  int m = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::optional<Field> field;  // unset runs both fields where relevant
};

/// lemma-zero-oracle, pieces, sign-spheres, gamma-roundtrip, pn-combinatorics,
/// slice-claims, slice-mesh, boundary-ident, full-sphere, and all.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or out-of-range parameters.
VerificationReport run_suite(const std::string& suite, const SuiteParams& params);

/// Runtimes are only written when `timings` is set, so reports are byte-identical
/// across runs by default.
std::string report_text(const VerificationReport& r, bool timings = false);
std::string report_json(const VerificationReport& r, bool timings = false);

}  // namespace phasesphere
