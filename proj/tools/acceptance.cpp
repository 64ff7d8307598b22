// Acceptance runner: evaluates the nine acceptance criteria against the
// verification suites and prints one PASS/FAIL line per criterion.
//
// Tolerances are pinned here. Algebraic checks are exact equalities; modular
// evidence needs at least kMinEvalPoints agreeing evaluation points; each
// criterion has a wall-clock budget summed over its checks.
//
// Criterion 4 contains a relation that is false as stated (the vanishing
// combination has coefficient -q^-4 on Omega4 Omega10). It is evaluated and
// reported as FAIL, but only fails the exit status under --strict.

#include "qsc/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr std::size_t kMinEvalPoints = 3;
constexpr int kKnownFailing = 4;

struct Criterion {
  int number;
  const char* title;
  std::vector<std::string> claims;
  double budget_s;
  // Pinned values beyond the check verdicts; returns an empty string if they hold.
  std::function<std::string(const std::map<std::string, json>&)> pinned;
};

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

// Every degree-d dimension record: exact at degree 2, modular with enough
// agreeing points at degree >= 3.
std::string dims_ok(const json& psi, long deg2) {
  for (const auto& d : psi["dimensions"]) {
    const int degree = d["degree"];
    if (d["verdict"] == "fail") return "dimension mismatch at degree " + std::to_string(degree);
    if (degree == 2 && (d["mode"] != "exact" || d["algebra_side"][0] != deg2))
      return "degree 2 dimension is not " + std::to_string(deg2);
    if (degree >= 3 && d["mode"] == "modular" && d["algebra_side"].size() < kMinEvalPoints)
      return "fewer than 3 evaluation points";
  }
  return "";
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "root-data census and class table",
       {"rootdata.phi_w", "rootdata.inner_products", "rootdata.class_equivalence", "rootdata.class_census",
        "rootdata.octet_table", "rootdata.height_grading"},
       1.0,
       [](const auto& c) {
         const json& census = c.at("rootdata.class_census")["details"];
         return expect(census["size_1"] == 16 && census["size_2"] == 80 && census["size_8"] == 10, "census is not 16/80/10") +
                expect(c.at("rootdata.inner_products")["details"]["pairs"] == 256, "not all 256 pairs");
       }},
      {2, "PBW bases, Hilbert series and degree-3 confluence",
       {"schubert.hilbert_w", "schubert.hilbert_what", "schubert.confluence_w", "schubert.confluence_what"}, 120.0,
       [](const auto& c) {
         const std::vector<int> w = {1, 16, 136, 816, 3876}, what = {1, 32, 528, 5984};
         std::string err;
         auto pin = [&](const json& degrees, const std::vector<int>& want) {
           if (degrees.size() != want.size()) err += "wrong degree range; ";
           for (std::size_t d = 0; d < want.size() && d < degrees.size(); ++d)
             if (degrees[d]["normal_words"] != want[d] || degrees[d]["hilbert_dim"] != std::to_string(want[d]))
               err += "degree " + std::to_string(d) + " count; ";
         };
         pin(c.at("schubert.hilbert_w")["details"]["degrees"], w);
         pin(c.at("schubert.hilbert_what")["details"]["degrees"], what);
         return err;
       }},
      {3, "adjoint action, highest weight vectors and decomposition of U_q^+[w]",
       {"adjoint.module_algebra", "adjoint.theta_highest_weight", "adjoint.theta_commutes", "adjoint.omega_highest_weight",
        "adjoint.submodule_dims", "adjoint.dimension_identity", "adjoint.decomposition_w"},
       300.0,
       [](const auto& c) {
         const json& mods = c.at("adjoint.submodule_dims")["details"]["modules"];
         const json& degs = c.at("adjoint.decomposition_w")["details"]["degrees"];
         return expect(c.at("adjoint.module_algebra")["details"]["pairs_w"] == 200, "not 200 random pairs") +
                expect(mods[0]["vector"] == "Theta" && mods[0]["span_dim"] == 10, "span of Theta is not 10") +
                expect(mods.size() == 14, "not all of Theta, Omega1..13") +
                expect(c.at("adjoint.dimension_identity")["details"]["max_degree"] == 30, "identity bound below 30") +
                expect(degs.size() == 5 && degs[2]["component_dim"] == "136", "decomposition not through degree 4");
       }},
      {4, "highest weight count and quadratic relation in U_q^+[what] (evidence)",
       {"adjoint.conjecture_hw_count", "adjoint.conjecture_relation"}, 600.0,
       [](const auto& c) {
         return expect(c.at("adjoint.conjecture_hw_count")["details"]["degrees"].size() == 4, "count not through degree 3");
       }},
      {5, "half-spin representation", {"spinrep.relations", "spinrep.irreducible", "spinrep.phi"}, 10.0,
       [](const auto& c) {
         return expect(c.at("spinrep.irreducible")["details"]["highest_weight"] == "w2", "highest weight is not w2");
       }},
      {6, "R-matrix coefficients, support, braid relation, equivariance and eigenspace",
       {"rmatrix.coefficients", "rmatrix.support", "rmatrix.ybe", "rmatrix.equivariance", "rmatrix.eigenspace"}, 300.0,
       [](const auto& c) {
         const json& e = c.at("rmatrix.eigenspace")["details"];
         return expect(c.at("rmatrix.coefficients")["details"]["entries"] == 65536, "not all 65536 entries") +
                expect(e["kernel_dim"] == 120 && e["relation_rank"] == 120, "eigenspace is not 120-dimensional");
       }},
      {7, "FRT row and two-row presentations and rank claims",
       {"frt.row_presentation", "frt.two_row_presentation", "frt.rank_checks"}, 600.0,
       [](const auto& c) {
         const json& r = c.at("frt.rank_checks")["details"];
         return expect(c.at("frt.row_presentation")["details"]["checked"] == 16, "not all 16 rows") +
                expect(c.at("frt.two_row_presentation")["details"]["checked"] == 80, "not all 80 pairs") +
                expect(r["rank_A_minus_skew_q2"] == 5 && r["rank_two_row_block"] == 9 && r["entry_mismatches"] == 0,
                       "rank or entrywise match");
       }},
      {8, "row and two-row homomorphisms and their kernels",
       {"frt.psi_rows", "frt.psi_row_pairs", "frt.psi_row_pair_degree3"}, 1200.0,
       [](const auto& c) {
         std::string err;
         const json& rows = c.at("frt.psi_rows")["details"];
         if (rows["rows"].size() != 16) err += "not all 16 rows; ";
         if (rows["degree_bound"] < 3) err += "rows not checked at degree 3; ";
         for (const auto& r : rows["rows"]) err += dims_ok(r, 126);
         const json& pairs = c.at("frt.psi_row_pairs")["details"]["pairs"];
         if (pairs.size() != 80) err += "not all 80 pairs; ";
         for (const auto& p : pairs) err += dims_ok(p, 498);
         const json& one = c.at("frt.psi_row_pair_degree3");
         if (one["status"] == "skipped") err += "degree-3 pair check skipped; ";
         else err += dims_ok(one["details"]["pair"], 498);
         return err;
       }},
  };
  return list;
}

std::string status_of(const json& check) { return check["status"].get<std::string>(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool strict = false;
  std::uint64_t seed = 1;
  app.add_flag("--strict", strict, "Also fail on the known-false relation of criterion 4");
  app.add_option("--seed", seed, "Seed for the verification run");
  CLI11_PARSE(app, argc, argv);

  qsc::SuiteOptions opt;
  opt.seed = seed;
  auto run_all = [&](bool timings) {
    std::vector<qsc::SuiteReport> reports;
    for (const auto& n : qsc::suite_names()) reports.push_back(qsc::run_suite(n, opt));
    return qsc::report_json(reports, opt, timings);
  };

  const json report = run_all(true);
  std::map<std::string, json> checks;
  for (const auto& s : report["suites"])
    for (const auto& c : s["checks"]) checks[c["claim_id"].get<std::string>()] = c;

  bool ok = true;
  for (const auto& cr : criteria()) {
    std::string err;
    double seconds = 0;
    bool probabilistic = false;
    for (const auto& id : cr.claims) {
      auto it = checks.find(id);
      if (it == checks.end()) {
        err += id + " missing; ";
        continue;
      }
      seconds += it->second["elapsed_ms"].get<double>() / 1000.0;
      const std::string st = status_of(it->second);
      if (st == "fail" || st == "skipped") err += id + " " + st + "; ";
      probabilistic = probabilistic || st == "probabilistic-pass";
    }
    if (err.empty()) err = cr.pinned(checks);
    if (seconds >= cr.budget_s) err += "over time budget; ";
    const bool pass = err.empty();
    const bool counts = cr.number != kKnownFailing || strict;
    if (!pass && counts) ok = false;
    std::printf("criterion %d %s  %s  [exact%s; %.2f s < %.0f s]%s%s\n", cr.number, pass ? "PASS" : "FAIL", cr.title,
                probabilistic ? ", modular >= 3 points" : "", seconds, cr.budget_s, pass ? "" : "  ", err.c_str());
    if (!pass && !counts) std::printf("  known false as stated; see README\n");
  }

  // Determinism: two further runs without timings must dump identically.
  const std::string a = run_all(false).dump();
  const std::string b = run_all(false).dump();
  const bool same = a == b;
  ok = ok && same;
  std::printf("criterion 9 %s  byte-identical reports for seed %llu  [%zu bytes]\n", same ? "PASS" : "FAIL",
              static_cast<unsigned long long>(seed), a.size());
  return ok ? 0 : 1;
}
