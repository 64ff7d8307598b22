#include "qsc/adjoint.hpp"

#include <doctest.h>

#include <random>

using qsc::AdGen;
using qsc::AlgebraPresentation;
using qsc::DominantWeightD5;
using qsc::LaurentPoly;
using qsc::NCPoly;
using qsc::Rewriter;
using qsc::SubsetB;

namespace {

const AlgebraPresentation& W = AlgebraPresentation::w();
const AlgebraPresentation& WH = AlgebraPresentation::what();

DominantWeightD5 fw(int i) { return DominantWeightD5::fundamental(i); }

bool in_phi_w(const qsc::Weight& x) {
  for (const auto& s : qsc::subsets_by_lex())
    if (qsc::wt(s) == x) return true;
  return false;
}

// Omega vectors are shared across test cases; building Omega13 dominates.
Rewriter& what_rewriter() {
  static Rewriter rw(WH);
  return rw;
}
qsc::OmegaBuilder& omegas() {
  static qsc::OmegaBuilder b(what_rewriter());
  return b;
}

}  // namespace

TEST_CASE("action on generators") {
  Rewriter rw(W);
  const NCPoly ye = W.parse("Y[e]");
  CHECK(qsc::ad_gen(rw, AdGen::F, 2, ye) == W.parse("-q^-1*Y[12]"));
  CHECK(qsc::ad_gen(rw, AdGen::E, 2, ye).is_zero());
  CHECK(qsc::ad_gen(rw, AdGen::K, 2, ye) == W.parse("q*Y[e]"));
  CHECK(qsc::ad_gen(rw, AdGen::Kinv, 2, ye) == W.parse("q^-1*Y[e]"));
  CHECK(qsc::ad_gen(rw, AdGen::E, 2, W.parse("Y[12]")) == W.parse("-q*Y[e]"));
  CHECK_THROWS_AS((void)qsc::ad_gen(rw, AdGen::E, 1, ye), std::invalid_argument);
  // Support of E_i, F_i on generators is the root-string condition.
  for (int g = 0; g < 16; ++g) {
    const qsc::Weight d = W.degree(g);
    for (int i = 2; i <= 6; ++i) {
      const qsc::Weight a = qsc::simple_root(i);
      CHECK(qsc::ad_gen(rw, AdGen::E, i, NCPoly::generator(g)).is_zero() == !in_phi_w(d + a));
      CHECK(qsc::ad_gen(rw, AdGen::F, i, NCPoly::generator(g)).is_zero() == !in_phi_w(d - a));
    }
  }
}

TEST_CASE("lowering words apply the rightmost letter first") {
  Rewriter rw(W);
  const NCPoly ye = W.parse("Y[e]");
  CHECK(qsc::ad_word(rw, {4, 2}, ye) ==
        qsc::ad_gen(rw, AdGen::F, 4, qsc::ad_gen(rw, AdGen::F, 2, ye)));
  CHECK(qsc::ad_word(rw, {2, 4}, ye).is_zero());
  CHECK(qsc::ad_word(rw, {}, ye) == ye);
}

TEST_CASE("highest weight vectors in U[w]") {
  Rewriter rw(W);
  auto r = qsc::is_highest_weight(rw, W.parse("Y[e]"));
  CHECK(r.highest);
  CHECK(r.weight == fw(2));
  const NCPoly theta = qsc::build_theta(rw);
  r = qsc::is_highest_weight(rw, theta);
  CHECK(r.highest);
  CHECK(r.weight == fw(6));
  CHECK_FALSE(qsc::is_highest_weight(rw, W.parse("Y[12]")).highest);
  CHECK_THROWS_AS((void)qsc::is_highest_weight(rw, NCPoly()), std::invalid_argument);
  CHECK_THROWS_AS((void)qsc::is_highest_weight(rw, W.parse("Y[e] + Y[12]")), std::invalid_argument);
  const NCPoly ye = W.parse("Y[e]");
  CHECK(rw.multiply(theta, ye) == rw.multiply(ye, theta));
}

TEST_CASE("module-algebra axiom on random pairs") {
  std::mt19937_64 rng(5);
  for (const auto* p : {&W, &WH}) {
    Rewriter rw(*p);
    auto rep = qsc::module_algebra_check(rw, rng, 40);
    CHECK(rep.checks == 40 * 20);
    CHECK(rep.pass());
  }
}

TEST_CASE("generator spans are U_q(so10)-modules") {
  for (const auto* p : {&W, &WH}) {
    auto rep = qsc::check_uq_relations([p](char g, int i) {
      const AdGen a = g == 'E' ? AdGen::E : g == 'F' ? AdGen::F : g == 'K' ? AdGen::K : AdGen::Kinv;
      return qsc::ad_matrix(*p, a, i);
    }, p->num_generators());
    CHECK(rep.checked == 5 * (1 + 5 * 4 + 4 * 2));
    CHECK(rep.pass());
  }
}

TEST_CASE("broken operators are caught by the relation check") {
  auto rep = qsc::check_uq_relations([](char g, int i) {
    qsc::SparseMat m = qsc::ad_matrix(W, g == 'E' ? AdGen::E : g == 'F' ? AdGen::F : g == 'K' ? AdGen::K : AdGen::Kinv, i);
    return (g == 'F' && i == 3) ? m.scaled(2) : m;
  }, 16);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("Weyl dimension formula") {
  CHECK(qsc::weyl_dim(DominantWeightD5{}) == 1);
  CHECK(qsc::weyl_dim(fw(2)) == 16);
  CHECK(qsc::weyl_dim(fw(3)) == 16);
  CHECK(qsc::weyl_dim(fw(6)) == 10);
  CHECK(qsc::weyl_dim(fw(5)) == 45);   // second exterior power of the vector rep
  CHECK(qsc::weyl_dim(fw(4)) == 120);  // third exterior power
  CHECK(qsc::weyl_dim(2 * fw(6)) == 54);  // traceless symmetric square
  CHECK(qsc::weyl_dim(fw(2) + fw(3)) == 210);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) CHECK(qsc::weyl_dim(m * fw(2) + n * fw(6)) == qsc::weyl_dim_closed_form(m, n));
  CHECK(qsc::weyl_dim_closed_form(1, 0) == 16);
  CHECK(qsc::weyl_dim_closed_form(0, 1) == 10);
}

TEST_CASE("dimension identity") {
  CHECK(qsc::identity_check(0).lhs == 1);
  CHECK(qsc::identity_check(1).lhs == 16);
  CHECK(qsc::identity_check(2).lhs == 136);
  for (int d = 0; d <= 30; ++d) CHECK(qsc::identity_check(d).pass());
}

TEST_CASE("decomposition of U[w] in low degree") {
  Rewriter rw(W);
  for (int d = 0; d <= 4; ++d) {
    auto rep = qsc::decompose_degree(rw, d);
    CHECK(rep.component_dim == qsc::hilbert_dim(W, d));
    CHECK(rep.match());
  }
  auto rep = qsc::decompose_degree(rw, 2);
  CHECK(rep.observed.size() == 2);
  CHECK(rep.observed.at(2 * fw(2)) == 1);
  CHECK(rep.observed.at(fw(6)) == 1);
  CHECK(rep.to_json()["verdict"] == "pass");
}

TEST_CASE("decomposition of U[what] in degrees 0..2") {
  Rewriter& rw = what_rewriter();
  auto r1 = qsc::decompose_degree(rw, 1);
  CHECK(r1.observed.at(fw(2)) == 2);
  CHECK(r1.match());
  auto r2 = qsc::decompose_degree(rw, 2);
  int hw = 0;
  for (const auto& [lam, m] : r2.observed) hw += m;
  CHECK(hw == 7);
  CHECK(r2.match());
  CHECK(r2.to_json()["label"] == "evidence");
}

TEST_CASE("conjectured generators are highest weight vectors") {
  Rewriter& rw = what_rewriter();
  const std::size_t terms[] = {1, 1, 4, 8, 4, 2, 20, 20, 56, 32, 56, 160, 614};
  for (const auto& info : qsc::omega_table()) {
    CAPTURE(info.k);
    const NCPoly& om = omegas().omega(info.k);
    CHECK(om.size() == terms[info.k - 1]);
    auto r = qsc::is_highest_weight(rw, om);
    CHECK(r.highest);
    CHECK(r.weight == info.weight);
    CHECK(om.terms().begin()->first.size() == static_cast<std::size_t>(info.degree));
  }
  CHECK(omegas().omega(3) == rw.normal_form(WH.parse("Z[1234]*Z[e] - q*Z[34]*Z[12] + q^2*Z[24]*Z[13] - q^3*Z[23]*Z[14]")));
  CHECK(omegas().omega(1) == WH.parse("Z[e]"));
}

TEST_CASE("cyclic submodules have Weyl dimension") {
  Rewriter rw(W);
  CHECK(qsc::submodule_span(rw, W.parse("Y[e]")).size() == 16);
  CHECK(qsc::submodule_span(rw, qsc::build_theta(rw)).size() == 10);
  CHECK(qsc::submodule_span(rw, NCPoly(1)).size() == 1);
  Rewriter& rh = what_rewriter();
  for (int k = 1; k <= 13; ++k) {
    CAPTURE(k);
    const auto& info = qsc::omega_table()[static_cast<std::size_t>(k - 1)];
    CHECK(qsc::Integer(qsc::submodule_span(rh, omegas().omega(k)).size()) == qsc::weyl_dim(info.weight));
  }
}

TEST_CASE("the stated quartic relation does not vanish") {
  auto ev = qsc::conjecture_relation(omegas(), what_rewriter());
  CHECK_FALSE(ev.stated_holds());
  CHECK(ev.vanishing_found);
  CHECK(ev.coeff_311 == qsc::RatFunc(LaurentPoly::q_pow(-6)));
  CHECK(ev.coeff_410 == qsc::RatFunc(LaurentPoly::monomial(-1, -4)));
}

TEST_CASE("degree-3 highest weight count matches the Omega-monomials") {
  auto rep = qsc::decompose_degree(what_rewriter(), 3);
  int hw = 0;
  for (const auto& [lam, m] : rep.observed) hw += m;
  CHECK(hw == 14);
  CHECK(rep.observed_dim == 5984);
  CHECK(rep.match());
}
