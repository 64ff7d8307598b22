#include "qsc/expr_parse.hpp"
#include "qsc/schubert.hpp"

#include <doctest.h>

#include <random>

using qsc::AlgebraPresentation;
using qsc::LaurentPoly;
using qsc::NCPoly;
using qsc::Rewriter;
using qsc::SubsetB;

namespace {

const AlgebraPresentation& W = AlgebraPresentation::w();
const AlgebraPresentation& WH = AlgebraPresentation::what();

int y(const char* l) { return W.gen_id(SubsetB::parse(l)); }
int z(const char* l, bool d = false) { return WH.gen_id(SubsetB::parse(l), d); }

NCPoly random_word_poly(std::mt19937_64& rng, int ngen, int len) {
  std::uniform_int_distribution<int> g(0, ngen - 1);
  qsc::Word w;
  for (int i = 0; i < len; ++i) w += static_cast<char>(g(rng));
  return NCPoly::word(w);
}

const char* kTheta = "Y[1234]*Y[e] - q*Y[34]*Y[12] + q^2*Y[24]*Y[13] - q^3*Y[23]*Y[14]";

}  // namespace

TEST_CASE("generator order is a linear extension of the poset") {
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b)
      if (qsc::lt_B(W.subset(a), W.subset(b))) CHECK(a < b);
  CHECK(W.subset(0) == SubsetB::parse("2345"));
  CHECK(W.subset(15) == SubsetB::parse("e"));
  CHECK(W.label(y("12")) == "Y[12]");
  CHECK(WH.label(z("12", true)) == "Zd[12]");
  CHECK(W.num_rules() == 120);
  CHECK(WH.num_rules() == 120 + 120 + 256);
  CHECK(W.min_height_gain() >= 1);
  CHECK(WH.min_height_gain() >= 1);
}

TEST_CASE("same-block relations") {
  CHECK(W.rule(y("12"), y("e")) == W.parse("q*Y[e]*Y[12]"));
  CHECK(W.rule(y("1234"), y("e")) ==
        W.parse("Y[e]*Y[1234] + (q-q^-1)*(Y[34]*Y[12] - q*Y[24]*Y[13] + q^2*Y[23]*Y[14])"));
  // 14 and 23 are incomparable; the generator order puts Y[23] first, so
  // the rule is stated for (14, 23) and carries no corrections.
  CHECK(W.rule(y("14"), y("23")) == W.parse("Y[23]*Y[14]"));
  CHECK(WH.rule(z("12", true), z("e", true)) == WH.parse("q*Zd[e]*Zd[12]"));
}

TEST_CASE("mixed relations") {
  CHECK(WH.rule(z("13"), z("13", true)) == WH.parse("q^2*Zd[13]*Z[13]"));
  CHECK(WH.rule(z("12"), z("e", true)) == WH.parse("q*Zd[e]*Z[12] + (q-q^-1)*Z[e]*Zd[12]"));
  // Table row 1 read left to right: all seven higher pairs plus the epsilon term.
  const char* expected =
      "Zd[e]*Z[1234] + (q-q^-1)*(Z[34]*Zd[12] - q*Z[24]*Zd[13] + q^2*Z[23]*Zd[14]"
      " + q^2*Z[14]*Zd[23] - q^3*Z[13]*Zd[24] + q^4*Z[12]*Zd[34] - q^5*Z[e]*Zd[1234]"
      " + q^-1*Z[e]*Zd[1234])";
  CHECK(WH.rule(z("1234"), z("e", true)) == WH.parse(expected));
  CHECK(qsc::epsilon(SubsetB::parse("1234"), SubsetB()) == 1);
}

TEST_CASE("normal form and multiplication examples") {
  Rewriter rw(W);
  CHECK(W.to_string(rw.normal_form(W.parse("Y[12]*Y[e]"))) == "q*Y[e]*Y[12]");
  CHECK(rw.normal_form(W.parse("Y[e]*Y[12]")) == W.parse("Y[e]*Y[12]"));
  NCPoly x = W.parse("Y[1234] - 2*q*Y[e]");
  CHECK(rw.multiply(NCPoly(1), x) == rw.normal_form(x));
  CHECK(rw.multiply(W.parse("Y[2345]"), W.parse("Y[2345]")) == W.parse("Y[2345]^2"));
  NCPoly a = rw.multiply(rw.multiply(W.parse("Y[12]"), W.parse("Y[e]")), W.parse("Y[12]"));
  NCPoly b = rw.multiply(W.parse("Y[12]"), rw.multiply(W.parse("Y[e]"), W.parse("Y[12]")));
  CHECK(a == b);
  CHECK(a == W.parse("q*Y[e]*Y[12]*Y[12]"));
  CHECK(rw.normal_form(W.parse("Y[12]*Y[e]*Y[12]")) == W.parse("q*Y[e]*Y[12]^2"));
  CHECK(rw.normal_form(W.parse("Y[23]*Y[14]")) == W.parse("Y[23]*Y[14]"));
}

TEST_CASE("Theta commutes with Y_e") {
  Rewriter rw(W);
  NCPoly theta = rw.normal_form(W.parse(kTheta));
  NCPoly ye = W.parse("Y[e]");
  CHECK((rw.multiply(theta, ye) - rw.multiply(ye, theta)).is_zero());
}

TEST_CASE("q-degrees") {
  CHECK(W.q_degree(W.parse("Y[e]")) == qsc::theta());
  CHECK(WH.q_degree(WH.parse("Zd[12]")) == qsc::theta() - qsc::simple_root(2) + qsc::delta());
  const qsc::Weight theta_deg = qsc::wt(SubsetB::parse("1234")) + qsc::theta();
  CHECK(W.q_degree(W.parse(kTheta)) == theta_deg);
  CHECK(theta_deg == qsc::Weight{{0, 2, 2, 3, 4, 3, 2}});
  CHECK(W.q_degree(W.parse("Y[12]*Y[e]")) == 2 * qsc::theta() - qsc::simple_root(2));
  CHECK_THROWS_AS((void)W.q_degree(W.parse("Y[e] + Y[12]")), std::invalid_argument);
}

TEST_CASE("Hilbert series counts") {
  const long w_counts[] = {1, 16, 136, 816, 3876};
  for (int d = 0; d <= 4; ++d) {
    CHECK(qsc::hilbert_dim(W, d) == w_counts[d]);
    CHECK(qsc::normal_words(W, d).size() == static_cast<std::size_t>(w_counts[d]));
  }
  const long wh_counts[] = {1, 32, 528, 5984};
  for (int d = 0; d <= 3; ++d) {
    CHECK(qsc::hilbert_dim(WH, d) == wh_counts[d]);
    CHECK(qsc::normal_words(WH, d).size() == static_cast<std::size_t>(wh_counts[d]));
  }
  for (const auto& w : qsc::normal_words(WH, 3)) CHECK(WH.is_normal(w));
}

TEST_CASE("degree-3 overlaps resolve") {
  Rewriter rw(W);
  auto rep = qsc::confluence_check(rw, 3);
  CHECK(rep.overlaps == 16 * 16 * 16);
  CHECK(rep.failures == 0);
  CHECK(rep.normal_words == 816);
  CHECK(rep.pass());
  Rewriter rh(WH);
  auto rep2 = qsc::confluence_check(rh, 3);
  CHECK(rep2.overlaps == 32 * 32 * 32);
  CHECK(rep2.failures == 0);
  CHECK(rep2.normal_words == 5984);
}

TEST_CASE("random words terminate in normal words and multiplication is associative") {
  std::mt19937_64 rng(17);
  for (const auto* pres : {&W, &WH}) {
    Rewriter rw(*pres);
    for (int it = 0; it < 60; ++it) {
      NCPoly x = random_word_poly(rng, pres->num_generators(), 1 + it % 6);
      NCPoly nf = rw.normal_form(x);
      for (const auto& [w, c] : nf.terms()) CHECK(pres->is_normal(w));
      CHECK(rw.normal_form(nf) == nf);
      NCPoly a = random_word_poly(rng, pres->num_generators(), 2);
      NCPoly b = random_word_poly(rng, pres->num_generators(), 1);
      NCPoly c = random_word_poly(rng, pres->num_generators(), 2);
      CHECK(rw.multiply(rw.multiply(a, b), c) == rw.multiply(a, rw.multiply(b, c)));
    }
  }
}

TEST_CASE("twisted product") {
  Rewriter rw(WH);
  NCPoly zi = WH.parse("Z[12]"), zj = WH.parse("Zd[13]");
  CHECK(rw.multiply_twisted(zj, zi) == rw.multiply(zj, zi).scaled(LaurentPoly::q_pow(1)));
  CHECK(rw.multiply_twisted(zi, zj) == rw.multiply(zi, zj));
  NCPoly zk = WH.parse("Zd[e]");
  CHECK(rw.multiply_twisted(zk, zj) == rw.multiply(zk, zj).scaled(LaurentPoly::q_pow(2)));
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    NCPoly a = random_word_poly(rng, 32, 1), b = random_word_poly(rng, 32, 2), c = random_word_poly(rng, 32, 1);
    CHECK(rw.multiply_twisted(rw.multiply_twisted(a, b), c) == rw.multiply_twisted(a, rw.multiply_twisted(b, c)));
  }
  // Untwisting a primed word: (Zd[e] Z[12])' = q^-1 Zd[e]' Z[12]'.
  CHECK(qsc::untwist_exponent(WH, qsc::Word{static_cast<char>(z("e", true)), static_cast<char>(z("12"))}) == -1);
  CHECK(qsc::untwist_exponent(WH, qsc::Word{static_cast<char>(z("12")), static_cast<char>(z("e", true))}) == 0);
}

TEST_CASE("text and JSON round trips") {
  Rewriter rw(WH);
  NCPoly x = rw.normal_form(WH.parse("(q - q^-1)*Z[12]*Zd[e] - 3*Z[e] + q^-2*Zd[1234]*Z[e]*Z[12]"));
  CHECK(WH.parse(WH.to_string(x)) == x);
  CHECK(WH.from_json(WH.to_json(x)) == x);
  CHECK(WH.to_json(WH.parse("Zd[e]"))[0]["word"][0] == "Zd[e]");
  CHECK_THROWS_AS(W.parse("Z[12]"), qsc::ParseError);
  CHECK_THROWS_AS(W.parse("Y[21]"), qsc::ParseError);
  CHECK_THROWS_AS(W.parse("Y[123]"), qsc::ParseError);
  CHECK(W.to_string(NCPoly()) == "0");
}
