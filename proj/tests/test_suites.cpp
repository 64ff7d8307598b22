#include "qsc/suites.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using qsc::CheckStatus;
using qsc::SuiteOptions;
using qsc::VerifyMode;

namespace {

const qsc::Check& find_check(const qsc::SuiteReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.claim_id == id) return c;
  throw std::out_of_range(id);
}

}  // namespace

TEST_CASE("claim registry covers every suite check") {
  const auto& reg = qsc::claim_registry();
  CHECK(reg.is_object());
  for (const auto& [id, ref] : reg.items()) {
    CHECK(ref.is_string());
    CHECK_FALSE(ref.get<std::string>().empty());
    CHECK(qsc::paper_ref(id) == ref.get<std::string>());
  }
  CHECK_THROWS_AS(qsc::paper_ref("no.such_claim"), std::out_of_range);
  CHECK_THROWS_AS(qsc::run_suite("nonsense", SuiteOptions{}), std::invalid_argument);
  CHECK(qsc::suite_names().size() == 6);
}

TEST_CASE("status strings") {
  CHECK(qsc::to_string(CheckStatus::pass) == "pass");
  CHECK(qsc::to_string(CheckStatus::fail) == "fail");
  CHECK(qsc::to_string(CheckStatus::probabilistic_pass) == "probabilistic-pass");
  CHECK(qsc::to_string(CheckStatus::skipped) == "skipped");
}

TEST_CASE("degree defaults and override") {
  SuiteOptions opt;
  CHECK(opt.kernel_degree() == 3);
  CHECK(opt.decomposition_degree() == 4);
  CHECK(opt.what_decomposition_degree() == 3);
  opt.max_degree = 2;
  CHECK(opt.kernel_degree() == 2);
  CHECK(opt.decomposition_degree() == 2);
  CHECK(opt.what_decomposition_degree() == 2);
  CHECK(opt.to_json()["mode"] == "modular");
  CHECK(opt.to_json()["max_degree"] == 2);
}

TEST_CASE("rootdata and spinrep suites pass with references attached") {
  for (const char* name : {"rootdata", "spinrep"}) {
    const auto r = qsc::run_suite(name, SuiteOptions{});
    CHECK(r.suite == name);
    CHECK(r.pass());
    for (const auto& c : r.checks) {
      CHECK(c.status == CheckStatus::pass);
      CHECK(c.paper_ref == qsc::paper_ref(c.claim_id));
    }
  }
  const auto r = qsc::run_suite("rootdata", SuiteOptions{});
  CHECK(r.checks.size() == 6);
  CHECK(find_check(r, "rootdata.class_census").details["size_8"] == 10);
  CHECK(find_check(r, "rootdata.octet_table").details["mismatches"] == 0);
}

TEST_CASE("report json is reproducible and omits timings by default") {
  SuiteOptions opt;
  const auto a = qsc::report_json({qsc::run_suite("rootdata", opt)}, opt, false).dump();
  const auto b = qsc::report_json({qsc::run_suite("rootdata", opt)}, opt, false).dump();
  CHECK(a == b);
  CHECK(a.find("elapsed_ms") == std::string::npos);
  const auto t = qsc::report_json({qsc::run_suite("rootdata", opt)}, opt, true);
  CHECK(t["suites"][0]["checks"][0].contains("elapsed_ms"));
  CHECK(t["report_version"] == 1);
  CHECK(t["verdict"] == "pass");
}

TEST_CASE("suite verdict is the absence of failures") {
  qsc::SuiteReport r;
  r.checks.push_back({"a", "x", CheckStatus::skipped, {}, 0});
  r.checks.push_back({"b", "y", CheckStatus::probabilistic_pass, {}, 0});
  CHECK(r.pass());
  r.checks.push_back({"c", "z", CheckStatus::fail, {}, 0});
  CHECK_FALSE(r.pass());
  CHECK(r.to_json(false)["verdict"] == "fail");
}

TEST_CASE("frt suite at degree 2 in exact mode skips the modular check") {
  SuiteOptions opt;
  opt.mode = VerifyMode::exact;
  opt.max_degree = 2;
  const auto r = qsc::run_suite("frt", opt);
  CHECK(r.pass());
  CHECK(find_check(r, "frt.psi_rows").status == CheckStatus::pass);
  CHECK(find_check(r, "frt.psi_row_pairs").status == CheckStatus::pass);
  CHECK(find_check(r, "frt.psi_row_pair_degree3").status == CheckStatus::skipped);
  CHECK(find_check(r, "frt.rank_checks").status == CheckStatus::pass);
  std::set<std::string> ids;
  for (const auto& c : r.checks) ids.insert(c.claim_id);
  CHECK(ids.size() == 6);
}
