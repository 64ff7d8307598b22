#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qsc {

enum class CheckStatus { pass, fail, probabilistic_pass, skipped };
std::string to_string(CheckStatus s);

struct Check {
  std::string claim_id;
  std::string paper_ref;
  CheckStatus status = CheckStatus::skipped;
  nlohmann::json details;
  double elapsed_ms = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const;  // no check failed
  nlohmann::json to_json(bool timings) const;
};

enum class VerifyMode { exact, modular };

struct SuiteOptions {
  // Bound for kernel evidence (default 3) and for decompositions (default 4
  // for U_q^+[w], 3 for U_q^+[what]) unless set.
  std::optional<int> max_degree;
  // exact: skip checks that need modular evaluation.
  VerifyMode mode = VerifyMode::modular;
  std::uint64_t seed = 1;

  int kernel_degree() const { return max_degree.value_or(3); }
  int decomposition_degree() const { return max_degree.value_or(4); }
  int what_decomposition_degree() const { return max_degree.value_or(3); }
  nlohmann::json to_json() const;
};

// rootdata, schubert, adjoint, spinrep, rmatrix, frt.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

// {"report_version": 1, "options", "suites", "verdict"}.
nlohmann::json report_json(const std::vector<SuiteReport>& suites, const SuiteOptions& opt, bool timings);

// Reference string of a claim; throws std::out_of_range for unknown ids.
const std::string& paper_ref(const std::string& claim_id);
const nlohmann::json& claim_registry();

}  // namespace qsc
