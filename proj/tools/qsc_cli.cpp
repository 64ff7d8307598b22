#include "qsc/adjoint.hpp"
#include "qsc/expr_parse.hpp"
#include "qsc/frt.hpp"
#include "qsc/rmatrix.hpp"
#include "qsc/schubert.hpp"
#include "qsc/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace qsc;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const AlgebraPresentation& algebra(const std::string& name) {
  if (name == "w") return AlgebraPresentation::w();
  if (name == "what") return AlgebraPresentation::what();
  throw UsageError("unknown algebra '" + name + "'");
}

SubsetB subset_arg(const std::string& label) {
  try {
    return SubsetB::parse(label);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad row label '") + label + "': " + e.what());
  }
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, bool timings) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  std::vector<SuiteReport> reports;
  for (const auto& n : names) reports.push_back(run_suite(n, opt));
  const auto j = report_json(reports, opt, timings);
  std::cout << j.dump(2) << "\n";
  return j["verdict"] == "pass" ? kExitPass : kExitFail;
}

int cmd_nf(const std::string& expr, const std::string& alg, bool twisted) {
  const auto& pres = algebra(alg);
  Rewriter rw(pres);
  const NCPoly x = pres.parse(expr);
  NCPoly out;
  if (!twisted) {
    out = rw.normal_form(x);
  } else {
    // Each word x1...xk is read as the twisted product x1' ... xk'.
    for (const auto& [word, c] : x.terms()) {
      NCPoly acc(LaurentPoly(1));
      for (char g : word) acc = rw.multiply_twisted(acc, NCPoly::generator(static_cast<unsigned char>(g)));
      out.add_scaled(acc, c);
    }
  }
  std::cout << pres.to_string(out) << "\n";
  return kExitPass;
}

int cmd_relations_algebra(const std::string& alg) {
  const auto& pres = algebra(alg);
  for (int a = 0; a < pres.num_generators(); ++a)
    for (int b = 0; b < pres.num_generators(); ++b) {
      if (!AlgebraPresentation::out_of_order(a, b)) continue;
      std::cout << pres.label(a) << "*" << pres.label(b) << " = " << pres.to_string(pres.rule(a, b)) << "\n";
    }
  return kExitPass;
}

int cmd_relations_frt(const std::vector<RelationVector>& rels) {
  for (const auto& r : rels) std::cout << relation_to_string(r) << " = 0\n";
  return kExitPass;
}

int cmd_dump_rmatrix(const std::string& format) {
  if (format == "json") {
    std::cout << rhat_json().dump() << "\n";
  } else {
    std::cout << rhat_csv();
  }
  return kExitPass;
}

int cmd_decompose(const std::string& alg, int degree) {
  Rewriter rw(algebra(alg));
  const auto rep = decompose_degree(rw, degree);
  nlohmann::json j = rep.to_json();
  j["verdict"] = rep.match() ? "pass" : "fail";
  std::cout << j.dump(2) << "\n";
  return rep.match() ? kExitPass : kExitFail;
}

int cmd_hwv(const std::string& which) {
  Rewriter w_rw(AlgebraPresentation::w());
  Rewriter what_rw(AlgebraPresentation::what());
  OmegaBuilder omegas(what_rw);
  nlohmann::json out = nlohmann::json::array();
  bool ok = true;
  auto report = [&](const std::string& name, Rewriter& rw, const NCPoly& x, const DominantWeightD5& want) {
    const auto hw = is_highest_weight(rw, x);
    const bool good = hw.highest && hw.weight == want;
    ok = ok && good;
    out.push_back({{"vector", name},
                   {"highest", hw.highest},
                   {"weight", hw.highest ? hw.weight.to_string() : ""},
                   {"expected_weight", want.to_string()},
                   {"verdict", good ? "pass" : "fail"}});
  };
  bool matched = false;
  if (which == "theta" || which == "all") {
    report("theta", w_rw, build_theta(w_rw), DominantWeightD5::fundamental(6));
    matched = true;
  }
  for (const auto& info : omega_table()) {
    const std::string name = "omega" + std::to_string(info.k);
    if (which != name && which != "all") continue;
    report(name, what_rw, omegas.omega(info.k), info.weight);
    matched = true;
  }
  if (!matched) throw UsageError("unknown vector '" + which + "'");
  std::cout << out.dump(2) << "\n";
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Schubert cell and FRT verification engine"};
  app.require_subcommand(1);

  std::string suite = "all";
  std::string mode = "modular";
  int max_degree = -1;
  std::uint64_t seed = 1;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites and print a JSON report");
  std::vector<std::string> suites = {"all"};
  for (const auto& n : suite_names()) suites.push_back(n);
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suites));
  verify->add_option("--max-degree", max_degree, "Degree bound for kernel and decomposition evidence")
      ->check(CLI::Range(0, 12));
  verify->add_option("--mode", mode, "exact or modular")->check(CLI::IsMember({"exact", "modular"}));
  verify->add_option("--seed", seed, "Seed for evaluation points and random inputs");
  verify->add_flag("--timings", timings, "Include elapsed_ms per check (output no longer reproducible)");

  std::string expr, alg = "w";
  bool twisted = false;
  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("expr", expr, "Expression such as \"Y[12]*Y[e]\"")->required();
  nf->add_option("--algebra", alg, "w or what")->check(CLI::IsMember({"w", "what"}));
  nf->add_flag("--twisted", twisted, "Read each word as a product in the twisted algebra");

  std::string rel_alg;
  std::string frt_row;
  std::vector<std::string> frt_two_rows;
  auto* relations = app.add_subcommand("relations", "Print defining relations");
  auto* o_alg = relations->add_option("--algebra", rel_alg, "w or what")->check(CLI::IsMember({"w", "what"}));
  auto* o_row = relations->add_option("--frt-row", frt_row, "Row S of the FRT bialgebra");
  auto* o_two = relations->add_option("--frt-two-rows", frt_two_rows, "Rows S T")->expected(2);
  o_alg->excludes(o_row)->excludes(o_two);
  o_row->excludes(o_two);
  relations->require_option(1);

  std::string dump_what, format = "json";
  auto* dump = app.add_subcommand("dump", "Dump a matrix");
  dump->add_option("object", dump_what, "rmatrix")->required()->check(CLI::IsMember({"rmatrix"}));
  dump->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string dec_alg = "w";
  int dec_degree = 0;
  auto* decompose = app.add_subcommand("decompose", "Highest weight decomposition of one degree");
  decompose->add_option("--algebra", dec_alg, "w or what")->check(CLI::IsMember({"w", "what"}));
  decompose->add_option("--degree", dec_degree, "Degree")->required()->check(CLI::Range(0, 12));

  std::string hwv_check;
  auto* hwv = app.add_subcommand("hwv", "Highest weight vector checks");
  std::vector<std::string> hwv_names = {"theta", "all"};
  for (int k = 1; k <= 13; ++k) hwv_names.push_back("omega" + std::to_string(k));
  hwv->add_option("--check", hwv_check, "theta, omega1..omega13 or all")->required()->check(CLI::IsMember(hwv_names));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      SuiteOptions opt;
      if (max_degree >= 0) opt.max_degree = max_degree;
      opt.mode = mode == "exact" ? VerifyMode::exact : VerifyMode::modular;
      opt.seed = seed;
      return cmd_verify(suite, opt, timings);
    }
    if (*nf) return cmd_nf(expr, alg, twisted);
    if (*relations) {
      if (*o_alg) return cmd_relations_algebra(rel_alg);
      if (*o_row) return cmd_relations_frt(row_presentation(subset_arg(frt_row)));
      const SubsetB s = subset_arg(frt_two_rows[0]);
      const SubsetB t = subset_arg(frt_two_rows[1]);
      if (!admissible_pair(s, t)) throw UsageError("rows must satisfy |S delta T| = 2 and S < T");
      return cmd_relations_frt(two_row_presentation(s, t));
    }
    if (*dump) return cmd_dump_rmatrix(format);
    if (*decompose) return cmd_decompose(dec_alg, dec_degree);
    if (*hwv) return cmd_hwv(hwv_check);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
