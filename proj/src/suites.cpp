#include "qsc/suites.hpp"

#include "qsc/adjoint.hpp"
#include "qsc/frt.hpp"
#include "qsc/rmatrix.hpp"
#include "qsc/rootdata.hpp"
#include "qsc/schubert.hpp"
#include "qsc/spinrep.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string_view>

namespace qsc {

extern const std::string_view kClaimsJson;

namespace {

struct Outcome {
  CheckStatus status;
  nlohmann::json details;
};

Outcome verdict(bool ok, nlohmann::json details) { return {ok ? CheckStatus::pass : CheckStatus::fail, std::move(details)}; }

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) { rep_.suite = std::move(name); }

  template <class F>
  void run(const std::string& claim_id, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = f();
    const auto t1 = std::chrono::steady_clock::now();
    Check c;
    c.claim_id = claim_id;
    c.paper_ref = paper_ref(claim_id);
    c.status = o.status;
    c.details = std::move(o.details);
    c.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep_.checks.push_back(std::move(c));
  }

  SuiteReport done() { return std::move(rep_); }

 private:
  SuiteReport rep_;
};

std::string str(const Integer& x) { return x.str(); }

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Reference transcription of the size-8 classes, one row per class with
// heights 1, 2, 3, 4, 4, 5, 6, 7.
constexpr const char* kOctetTable[10][8][2] = {
    {{"1234", "e"}, {"34", "12"}, {"24", "13"}, {"23", "14"}, {"14", "23"}, {"13", "24"}, {"12", "34"}, {"e", "1234"}},
    {{"1235", "e"}, {"35", "12"}, {"25", "13"}, {"23", "15"}, {"15", "23"}, {"13", "25"}, {"12", "35"}, {"e", "1235"}},
    {{"1245", "e"}, {"45", "12"}, {"25", "14"}, {"24", "15"}, {"15", "24"}, {"14", "25"}, {"12", "45"}, {"e", "1245"}},
    {{"1345", "e"}, {"45", "13"}, {"35", "14"}, {"34", "15"}, {"15", "34"}, {"14", "35"}, {"13", "45"}, {"e", "1345"}},
    {{"2345", "e"}, {"45", "23"}, {"35", "24"}, {"34", "25"}, {"25", "34"}, {"24", "35"}, {"23", "45"}, {"e", "2345"}},
    {{"1345", "12"}, {"1245", "13"}, {"1235", "14"}, {"1234", "15"}, {"15", "1234"}, {"14", "1235"}, {"13", "1245"}, {"12", "1345"}},
    {{"2345", "12"}, {"1245", "23"}, {"1235", "24"}, {"1234", "25"}, {"25", "1234"}, {"24", "1235"}, {"23", "1245"}, {"12", "2345"}},
    {{"2345", "13"}, {"1345", "23"}, {"1235", "34"}, {"1234", "35"}, {"35", "1234"}, {"34", "1235"}, {"23", "1345"}, {"13", "2345"}},
    {{"2345", "14"}, {"1345", "24"}, {"1245", "34"}, {"1234", "45"}, {"45", "1234"}, {"34", "1245"}, {"24", "1345"}, {"14", "2345"}},
    {{"2345", "15"}, {"1345", "25"}, {"1245", "35"}, {"1235", "45"}, {"45", "1235"}, {"35", "1245"}, {"25", "1345"}, {"15", "2345"}},
};
constexpr int kOctetHeights[8] = {1, 2, 3, 4, 4, 5, 6, 7};

SuiteReport rootdata_suite(const SuiteOptions&) {
  SuiteBuilder b("rootdata");
  const auto& subsets = subsets_by_lex();

  b.run("rootdata.phi_w", [&] {
    // Positive roots of E6 with alpha_1 coefficient 1, by scanning bounded
    // nonnegative vectors of squared length 2.
    std::set<Weight> roots;
    for (int n = 0; n < 4 * 4 * 4 * 4 * 4; ++n) {
      Weight w;
      w[1] = 1;
      int m = n;
      for (int i = 2; i <= 6; ++i, m /= 4) w[i] = m % 4;
      if (inner(w, w) == 2) roots.insert(w);
    }
    std::set<Weight> got;
    for (SubsetB s : subsets) got.insert(wt(s));
    return verdict(got == roots && got.size() == 16, {{"weights", got.size()}, {"roots_with_alpha1_coefficient_1", roots.size()}});
  });

  b.run("rootdata.inner_products", [&] {
    int bad = 0;
    for (SubsetB x : subsets)
      for (SubsetB y : subsets) {
        const int sym = std::popcount(static_cast<unsigned>(x.mask() ^ y.mask()));
        const int ip = inner(wt(x), wt(y));
        const std::size_t size = ip == 2 ? 1 : ip == 1 ? 2 : 8;
        if (2 * ip != 4 - sym || class_of(x, y).size() != size) ++bad;
      }
    return verdict(bad == 0, {{"pairs", 256}, {"violations", bad}});
  });

  b.run("rootdata.class_equivalence", [&] {
    long bad = 0;
    for (SubsetB i : subsets)
      for (SubsetB j : subsets)
        for (SubsetB k : subsets)
          for (SubsetB l : subsets) {
            const bool by_weight = wt(i) + wt(j) == wt(k) + wt(l);
            const bool by_sets = (i.mask() | j.mask()) == (k.mask() | l.mask()) && (i.mask() & j.mask()) == (k.mask() & l.mask());
            if (by_weight != by_sets) ++bad;
          }
    return verdict(bad == 0, {{"quadruples", 65536}, {"violations", bad}});
  });

  b.run("rootdata.class_census", [&] {
    std::map<std::size_t, int> counts;
    std::size_t covered = 0;
    for (const auto& c : all_classes()) {
      ++counts[c.size()];
      covered += c.size();
    }
    nlohmann::json d = {{"size_1", counts[1]}, {"size_2", counts[2]}, {"size_8", counts[8]}, {"pairs_covered", covered}};
    return verdict(counts[1] == 16 && counts[2] == 80 && counts[8] == 10 && counts.size() == 3 && covered == 256, d);
  });

  b.run("rootdata.octet_table", [&] {
    int bad = 0;
    const auto& oct = octets();
    if (oct.size() != 10) return verdict(false, {{"octets", oct.size()}});
    for (std::size_t r = 0; r < 10; ++r)
      for (std::size_t c = 0; c < 8; ++c) {
        const auto& m = oct[r][c];
        if (m.first != SubsetB::parse(kOctetTable[r][c][0]) || m.second != SubsetB::parse(kOctetTable[r][c][1]) ||
            m.height != kOctetHeights[c] || ht_pair(m.first, m.second) != kOctetHeights[c])
          ++bad;
      }
    return verdict(bad == 0, {{"rows", 10}, {"entries", 80}, {"mismatches", bad}, {"table", class_table_json()}});
  });

  b.run("rootdata.height_grading", [&] {
    int covers = 0, bad = 0;
    for (SubsetB x : subsets)
      for (SubsetB y : subsets) {
        if (!lt_B(x, y)) continue;
        bool cover = true;
        for (SubsetB z : subsets)
          if (lt_B(x, z) && lt_B(z, y)) cover = false;
        if (!cover) continue;
        ++covers;
        const Weight d = wt(y) - wt(x);
        bool simple = false;
        for (int i = 2; i <= 6; ++i) simple = simple || d == simple_root(i);
        if (!simple || height_B(y) != height_B(x) + 1) ++bad;
      }
    return verdict(bad == 0 && covers > 0, {{"covers", covers}, {"violations", bad}});
  });
  return b.done();
}

SuiteReport schubert_suite(const SuiteOptions&) {
  SuiteBuilder b("schubert");
  auto hilbert = [&](const AlgebraPresentation& pres, int n, int max_d) {
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (int d = 0; d <= max_d; ++d) {
      const Integer expected = binomial(n - 1 + d, n - 1);
      const Integer h = hilbert_dim(pres, d);
      const auto words = normal_words(pres, d);
      const bool good = h == expected && Integer(words.size()) == expected;
      ok = ok && good;
      rows.push_back({{"degree", d}, {"hilbert_dim", str(h)}, {"normal_words", words.size()}, {"expected", str(expected)}});
    }
    return verdict(ok, {{"degrees", rows}});
  };
  b.run("schubert.hilbert_w", [&] { return hilbert(AlgebraPresentation::w(), 16, 4); });
  b.run("schubert.hilbert_what", [&] { return hilbert(AlgebraPresentation::what(), 32, 3); });
  auto confluence = [&](const AlgebraPresentation& pres) {
    Rewriter rw(pres);
    const auto rep = confluence_check(rw, 3);
    return verdict(rep.pass(), {{"degree", 3},
                                {"overlaps", rep.overlaps},
                                {"failures", rep.failures},
                                {"normal_words", rep.normal_words},
                                {"expected_words", str(rep.expected_words)}});
  };
  b.run("schubert.confluence_w", [&] { return confluence(AlgebraPresentation::w()); });
  b.run("schubert.confluence_what", [&] { return confluence(AlgebraPresentation::what()); });
  return b.done();
}

SuiteReport adjoint_suite(const SuiteOptions& opt) {
  SuiteBuilder b("adjoint");
  Rewriter w_rw(AlgebraPresentation::w());
  Rewriter what_rw(AlgebraPresentation::what());
  OmegaBuilder omegas(what_rw);
  const NCPoly theta = build_theta(w_rw);

  b.run("adjoint.module_algebra", [&] {
    std::mt19937_64 rng(opt.seed);
    const auto rw = module_algebra_check(w_rw, rng, 200);
    const auto rh = module_algebra_check(what_rw, rng, 200);
    nlohmann::json d = {{"pairs_w", rw.pairs}, {"checks_w", rw.checks}, {"failures_w", rw.failures.size()},
                        {"pairs_what", rh.pairs}, {"checks_what", rh.checks}, {"failures_what", rh.failures.size()}};
    return verdict(rw.pass() && rh.pass(), d);
  });

  b.run("adjoint.theta_highest_weight", [&] {
    const auto hw = is_highest_weight(w_rw, theta);
    const auto want = DominantWeightD5::fundamental(6);
    return verdict(hw.highest && hw.weight == want,
                   {{"highest", hw.highest}, {"weight", hw.weight.to_string()}, {"expected", want.to_string()}, {"terms", theta.size()}});
  });

  b.run("adjoint.theta_commutes", [&] {
    const NCPoly ye = NCPoly::generator(AlgebraPresentation::w().gen_id(SubsetB()));
    const bool ok = w_rw.multiply(ye, theta) == w_rw.multiply(theta, ye);
    return verdict(ok, {{"commutator_zero", ok}});
  });

  b.run("adjoint.omega_highest_weight", [&] {
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (const auto& info : omega_table()) {
      const NCPoly& x = omegas.omega(info.k);
      const auto hw = is_highest_weight(what_rw, x);
      const int degree = static_cast<int>(x.terms().begin()->first.size());
      const bool good = hw.highest && hw.weight == info.weight && degree == info.degree;
      ok = ok && good;
      rows.push_back({{"k", info.k},
                      {"highest", hw.highest},
                      {"weight", hw.weight.to_string()},
                      {"expected_weight", info.weight.to_string()},
                      {"degree", degree},
                      {"expected_degree", info.degree},
                      {"terms", x.size()}});
    }
    return verdict(ok, {{"vectors", rows}});
  });

  b.run("adjoint.submodule_dims", [&] {
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    auto add = [&](const std::string& name, Rewriter& rw, const NCPoly& x, const DominantWeightD5& lambda) {
      const auto span = submodule_span(rw, x);
      const Integer wd = weyl_dim(lambda);
      ok = ok && Integer(span.size()) == wd;
      rows.push_back({{"vector", name}, {"span_dim", span.size()}, {"weyl_dim", str(wd)}});
    };
    add("Theta", w_rw, theta, DominantWeightD5::fundamental(6));
    for (const auto& info : omega_table()) add("Omega" + std::to_string(info.k), what_rw, omegas.omega(info.k), info.weight);
    return verdict(ok && submodule_span(w_rw, theta).size() == 10, {{"modules", rows}});
  });

  b.run("adjoint.dimension_identity", [&] {
    bool ok = true;
    for (int d = 0; d <= 30; ++d) ok = ok && identity_check(d).pass();
    return verdict(ok, {{"max_degree", 30}});
  });

  b.run("adjoint.decomposition_w", [&] {
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (int d = 0; d <= opt.decomposition_degree(); ++d) {
      const auto rep = decompose_degree(w_rw, d);
      ok = ok && rep.match();
      rows.push_back(rep.to_json());
    }
    return verdict(ok, {{"degree_bound", opt.decomposition_degree()}, {"degrees", rows}});
  });

  b.run("adjoint.conjecture_hw_count", [&] {
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (int d = 0; d <= opt.what_decomposition_degree(); ++d) {
      const auto rep = decompose_degree(what_rw, d);
      ok = ok && rep.match();
      rows.push_back(rep.to_json());
    }
    return verdict(ok, {{"evidence_only", true}, {"degree_bound", opt.what_decomposition_degree()}, {"degrees", rows}});
  });

  b.run("adjoint.conjecture_relation", [&] {
    const auto ev = conjecture_relation(omegas, what_rw);
    nlohmann::json d = ev.to_json();
    d["evidence_only"] = true;
    return verdict(ev.stated_holds(), d);
  });
  return b.done();
}

SuiteReport spinrep_suite(const SuiteOptions&) {
  SuiteBuilder b("spinrep");
  b.run("spinrep.relations", [&] {
    const auto rep = spin_relations();
    return verdict(rep.pass(), {{"checked", rep.checked}, {"failures", rep.failures.size()}});
  });
  b.run("spinrep.irreducible", [&] {
    const auto rep = spin_irreducible();
    // u_e has weight w2: K_i acts by q^{delta_{i,2}}.
    const int top = lex_pos(SubsetB());
    bool weight_ok = true;
    for (int i = 2; i <= 6; ++i) weight_ok = weight_ok && rho_K(i).get(top, top) == LaurentPoly::q_pow(i == 2 ? 1 : 0);
    return verdict(rep.pass() && weight_ok,
                   {{"checked", rep.checked}, {"failures", rep.failures}, {"highest_weight", weight_ok ? "w2" : "other"}});
  });
  b.run("spinrep.phi", [&] {
    const auto rep = phi_check();
    return verdict(rep.pass(), {{"checked", rep.checked}, {"failures", rep.failures}});
  });
  return b.done();
}

SuiteReport rmatrix_suite(const SuiteOptions&) {
  SuiteBuilder b("rmatrix");
  CoeffReport coeff;
  b.run("rmatrix.coefficients", [&] {
    coeff = coeff_check();
    nlohmann::json d = coeff.to_json();
    return verdict(coeff.mismatches == 0 && coeff.entries == 65536, d);
  });
  b.run("rmatrix.support", [&] {
    return verdict(coeff.support_violations == 0 && coeff.weight_violations == 0,
                   {{"entries", coeff.entries},
                    {"support_violations", coeff.support_violations},
                    {"weight_violations", coeff.weight_violations}});
  });
  b.run("rmatrix.ybe", [&] {
    const auto rep = ybe_check();
    return verdict(rep.pass(), rep.to_json());
  });
  b.run("rmatrix.equivariance", [&] {
    const auto rep = equivariance_check();
    return verdict(rep.pass(), rep.to_json());
  });
  b.run("rmatrix.eigenspace", [&] {
    const auto rep = eigen_split();
    return verdict(rep.pass(), rep.to_json());
  });
  return b.done();
}

CheckStatus combine(bool ok, bool modular) {
  if (!ok) return CheckStatus::fail;
  return modular ? CheckStatus::probabilistic_pass : CheckStatus::pass;
}

SuiteReport frt_suite(const SuiteOptions& opt) {
  SuiteBuilder b("frt");
  const bool modular = opt.mode == VerifyMode::modular;
  const int kernel_degree = modular ? opt.kernel_degree() : std::min(opt.kernel_degree(), 2);

  b.run("frt.row_presentation", [&] {
    const auto rep = row_presentation_check();
    return verdict(rep.pass(), rep.to_json());
  });
  b.run("frt.two_row_presentation", [&] {
    const auto rep = two_row_presentation_check();
    return verdict(rep.pass(), rep.to_json());
  });
  b.run("frt.rank_checks", [&] {
    const auto rep = rank_checks();
    return verdict(rep.pass(), rep.to_json());
  });
  b.run("frt.psi_rows", [&] {
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (SubsetB s : subsets_by_lex()) {
      const auto rep = psi_S_check(s, kernel_degree, opt.seed);
      ok = ok && rep.pass();
      rows.push_back(rep.to_json());
    }
    return Outcome{combine(ok, kernel_degree >= 3), {{"degree_bound", kernel_degree}, {"rows", rows}}};
  });
  b.run("frt.psi_row_pairs", [&] {
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (const auto& [s, t] : admissible_pairs()) {
      const auto rep = psi_ST_check(s, t, 2, opt.seed);
      ok = ok && rep.pass();
      rows.push_back(rep.to_json());
    }
    return verdict(ok, {{"degree_bound", 2}, {"pairs", rows}});
  });
  b.run("frt.psi_row_pair_degree3", [&] {
    const auto [s, t] = admissible_pairs().front();
    if (!modular || opt.kernel_degree() < 3)
      return Outcome{CheckStatus::skipped, {{"reason", "needs modular mode and degree bound >= 3"}}};
    const auto rep = psi_ST_check(s, t, opt.kernel_degree(), opt.seed);
    return Outcome{combine(rep.pass(), true), {{"degree_bound", opt.kernel_degree()}, {"pair", rep.to_json()}}};
  });
  return b.done();
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::probabilistic_pass: return "probabilistic-pass";
    case CheckStatus::skipped: return "skipped";
  }
  return "fail";
}

bool SuiteReport::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

nlohmann::json SuiteReport::to_json(bool timings) const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"claim_id", c.claim_id}, {"paper_ref", c.paper_ref}, {"status", to_string(c.status)}, {"details", c.details}};
    if (timings) j["elapsed_ms"] = c.elapsed_ms;
    cs.push_back(std::move(j));
  }
  return {{"suite", suite}, {"checks", cs}, {"verdict", pass() ? "pass" : "fail"}};
}

nlohmann::json SuiteOptions::to_json() const {
  nlohmann::json j = {{"mode", mode == VerifyMode::exact ? "exact" : "modular"}, {"seed", seed}};
  j["max_degree"] = max_degree ? nlohmann::json(*max_degree) : nlohmann::json(nullptr);
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rootdata", "schubert", "adjoint", "spinrep", "rmatrix", "frt"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "rootdata") return rootdata_suite(opt);
  if (name == "schubert") return schubert_suite(opt);
  if (name == "adjoint") return adjoint_suite(opt);
  if (name == "spinrep") return spinrep_suite(opt);
  if (name == "rmatrix") return rmatrix_suite(opt);
  if (name == "frt") return frt_suite(opt);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

nlohmann::json report_json(const std::vector<SuiteReport>& suites, const SuiteOptions& opt, bool timings) {
  nlohmann::json ss = nlohmann::json::array();
  bool ok = true;
  for (const auto& s : suites) {
    ss.push_back(s.to_json(timings));
    ok = ok && s.pass();
  }
  return {{"report_version", 1}, {"options", opt.to_json()}, {"suites", ss}, {"verdict", ok ? "pass" : "fail"}};
}

const nlohmann::json& claim_registry() {
  static const nlohmann::json j = nlohmann::json::parse(kClaimsJson);
  return j;
}

const std::string& paper_ref(const std::string& claim_id) {
  const auto& reg = claim_registry();
  auto it = reg.find(claim_id);
  if (it == reg.end()) throw std::out_of_range("unknown claim id '" + claim_id + "'");
  return it->get_ref<const std::string&>();
}

}  // namespace qsc
