#include "qsc/spinrep.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using qsc::AdGen;
using qsc::ExtElement;
using qsc::LaurentPoly;
using qsc::SparseMat;
using qsc::SubsetB;

namespace {

std::uint8_t mask_of(std::initializer_list<int> xs) {
  std::uint8_t m = 0;
  for (int x : xs) m = static_cast<std::uint8_t>(m | (1U << (x - 1)));
  return m;
}

// Bubble sort with a factor -q per adjacent swap of a larger index past a
// smaller one.
ExtElement bubble(std::vector<int> w) {
  std::vector<int> s = w;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return {};
  int swaps = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b + 1 < w.size() - a; ++b)
      if (w[b] > w[b + 1]) {
        std::swap(w[b], w[b + 1]);
        ++swaps;
      }
  std::uint8_t m = 0;
  for (int x : w) m = static_cast<std::uint8_t>(m | (1U << (x - 1)));
  return ExtElement::monomial(m, LaurentPoly::neg_q_pow(swaps));
}

int pos(const char* label) { return qsc::lex_pos(SubsetB::parse(label)); }

}  // namespace

TEST_CASE("exterior algebra products") {
  CHECK(ExtElement::word({2, 1}) == ExtElement::monomial(mask_of({1, 2}), LaurentPoly::monomial(-1, 1)));
  CHECK(ExtElement::word({1, 1}).is_zero());
  CHECK(qsc::ext_mul(ExtElement::word({1, 2}), ExtElement::word({3, 4})) == ExtElement::monomial(mask_of({1, 2, 3, 4})));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> idx(1, 5), len(0, 5);
  for (int it = 0; it < 300; ++it) {
    std::vector<int> w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = idx(rng);
    CHECK(ExtElement::word(w) == bubble(w));
    const std::size_t cut = w.empty() ? 0 : static_cast<std::size_t>(rng() % (w.size() + 1));
    std::vector<int> a(w.begin(), w.begin() + static_cast<long>(cut)), b(w.begin() + static_cast<long>(cut), w.end());
    CHECK(qsc::ext_mul(ExtElement::word(a), ExtElement::word(b)) == ExtElement::word(w));
  }
}

TEST_CASE("half-spin matrices") {
  CHECK(qsc::rho_Eprime(1, 2).get(pos("e"), pos("12")) == LaurentPoly(1));
  CHECK(qsc::rho_K(2).get(pos("e"), pos("e")) == LaurentPoly::q_pow(1));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      if (i == j) continue;
      const SparseMat e = qsc::rho_E(i, j);
      CHECK((e * e).is_zero());
      CHECK((qsc::rho_Eprime(i, j) * qsc::rho_Eprime(i, j)).is_zero());
      for (const auto& s : qsc::subsets_by_lex())
        if (!s.contains(j))
          for (int r = 0; r < 16; ++r) CHECK(e.get(r, qsc::lex_pos(s)).is_zero());
    }
  const SparseMat f2 = qsc::chevalley_action(AdGen::F, 2);
  CHECK_FALSE(f2.get(pos("12"), pos("e")).is_zero());
  const SparseMat e6 = qsc::chevalley_action(AdGen::E, 6);
  for (const auto& s : qsc::subsets_by_lex())
    for (int r = 0; r < 16; ++r)
      if (!e6.get(r, qsc::lex_pos(s)).is_zero()) CHECK((s.contains(5) && !s.contains(4)));
}

TEST_CASE("Chevalley generators shift weights by simple roots") {
  for (int i = 2; i <= 6; ++i) {
    for (AdGen g : {AdGen::E, AdGen::F}) {
      const SparseMat m = qsc::chevalley_action(g, i);
      int nnz = 0;
      for (int r = 0; r < 16; ++r)
        for (const auto& [c, x] : m.row(r)) {
          ++nnz;
          const auto shift = qsc::wt(qsc::subsets_by_lex()[static_cast<std::size_t>(r)]) -
                             qsc::wt(qsc::subsets_by_lex()[static_cast<std::size_t>(c)]);
          CHECK(shift == (g == AdGen::E ? qsc::simple_root(i) : -1 * qsc::simple_root(i)));
          CHECK(x == LaurentPoly(1));
        }
      CHECK(nnz == 4);
    }
    const SparseMat k = qsc::chevalley_action(AdGen::K, i);
    for (const auto& s : qsc::subsets_by_lex())
      CHECK(k.get(qsc::lex_pos(s), qsc::lex_pos(s)) == LaurentPoly::q_pow(qsc::inner(qsc::simple_root(i), qsc::wt(s))));
  }
}

TEST_CASE("S is an irreducible U_q(so10)-module isomorphic to the generator span") {
  auto rel = qsc::spin_relations();
  CHECK(rel.checked == 145);
  CHECK(rel.pass());
  CHECK(qsc::spin_irreducible().pass());
  auto phi = qsc::phi_check();
  CHECK(phi.checked == 20);
  CHECK(phi.pass());
  // F_2 on Y_e: -q^-1 Y_12 on the algebra side, and phi scales by (-q)^{11-10}.
  const SparseMat p = qsc::phi_matrix();
  CHECK(p.get(pos("12"), qsc::AlgebraPresentation::w().gen_id(SubsetB::parse("12"))) == LaurentPoly::monomial(-1, 1));
  CHECK(p.get(pos("e"), qsc::AlgebraPresentation::w().gen_id(SubsetB())) == LaurentPoly(1));
}

TEST_CASE("phi with the wrong scalars is rejected") {
  const auto& w = qsc::AlgebraPresentation::w();
  SparseMat p(16, 16);
  for (const auto& s : qsc::subsets_by_lex()) p.set(qsc::lex_pos(s), w.gen_id(s), 1);
  const SparseMat lhs = p * qsc::ad_matrix(w, AdGen::F, 2);
  const SparseMat rhs = qsc::chevalley_action(AdGen::F, 2) * p;
  CHECK(lhs != rhs);
}
