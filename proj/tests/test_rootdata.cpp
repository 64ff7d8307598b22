#include "qsc/rootdata.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

using qsc::SubsetB;
using qsc::Weight;

namespace {

SubsetB S(const char* label) { return SubsetB::parse(label); }

// Positive roots of E6 (nodes 1..6), found by scanning bounded lattice
// vectors of squared length 2 with nonnegative coordinates.
std::vector<Weight> e6_positive_roots() {
  std::vector<Weight> out;
  std::array<int, 6> x{};
  for (int n = 0; n < 4 * 4 * 4 * 4 * 4 * 4; ++n) {
    int m = n;
    for (auto& v : x) {
      v = m % 4;
      m /= 4;
    }
    Weight w;
    for (int i = 0; i < 6; ++i) w[i + 1] = x[static_cast<std::size_t>(i)];
    if (w.height() > 0 && qsc::inner(w, w) == 2) out.push_back(w);
  }
  return out;
}

bool is_positive_root_sum(const Weight& d, const std::vector<Weight>& roots) {
  if (d == Weight{}) return true;
  if (!d.nonnegative()) return false;
  for (const auto& r : roots) {
    Weight rest = d - r;
    if (rest.nonnegative() && is_positive_root_sum(rest, roots)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("wt examples") {
  CHECK(qsc::wt(S("e")) == qsc::theta());
  CHECK(qsc::wt(S("12")) == qsc::theta() - qsc::simple_root(2));
  CHECK(qsc::wt(S("2345")) == qsc::simple_root(1));
  CHECK(qsc::inner(qsc::wt(S("12")), qsc::wt(S("e"))) == 1);
  CHECK(qsc::inner(qsc::wt(S("1234")), qsc::wt(S("e"))) == 0);
}

TEST_CASE("bilinear form and null root") {
  for (int i = 0; i < 7; ++i) {
    CHECK(qsc::inner(qsc::delta(), qsc::simple_root(i)) == 0);
    for (int j = 0; j < 7; ++j)
      CHECK(qsc::inner(qsc::simple_root(i), qsc::simple_root(j)) ==
            qsc::inner(qsc::simple_root(j), qsc::simple_root(i)));
  }
}

TEST_CASE("weights of B are exactly the roots with alpha_1 coefficient 1") {
  auto roots = e6_positive_roots();
  CHECK(roots.size() == 36);
  std::set<Weight> expected;
  for (const auto& r : roots)
    if (r[1] == 1) expected.insert(r);
  std::set<Weight> got;
  for (SubsetB s : qsc::subsets_by_lex()) {
    Weight w = qsc::wt(s);
    CHECK(qsc::inner(w, w) == 2);
    CHECK(w[0] == 0);
    CHECK(w[1] == 1);
    got.insert(w);
  }
  CHECK(got.size() == 16);
  CHECK(got == expected);
}

TEST_CASE("leq_B agrees with positive-root-sum search") {
  auto roots = e6_positive_roots();
  for (SubsetB a : qsc::subsets_by_lex())
    for (SubsetB b : qsc::subsets_by_lex())
      CHECK(qsc::leq_B(a, b) == is_positive_root_sum(qsc::wt(b) - qsc::wt(a), roots));
  CHECK(qsc::leq_B(S("12"), S("e")));
  CHECK(!qsc::leq_B(S("14"), S("23")));
  CHECK(!qsc::leq_B(S("23"), S("14")));
}

TEST_CASE("height and lex code") {
  CHECK(qsc::height_B(S("2345")) == 1);
  CHECK(qsc::height_B(S("e")) == 11);
  CHECK(qsc::height_B(S("12")) == 10);
  CHECK(qsc::lex_code(S("e")) == 0);
  CHECK(qsc::lex_code(S("12")) == 12);
  CHECK(qsc::lex_code(S("1234")) == 1234);
  std::set<int> heights;
  for (SubsetB s : qsc::subsets_by_lex()) heights.insert(qsc::height_B(s));
  CHECK(*heights.begin() == 1);
  CHECK(*heights.rbegin() == 11);
}

TEST_CASE("covering relations are simple-root steps of height one") {
  for (SubsetB a : qsc::subsets_by_lex()) {
    for (SubsetB b : qsc::subsets_by_lex()) {
      if (!qsc::lt_B(a, b)) continue;
      bool cover = true;
      for (SubsetB c : qsc::subsets_by_lex())
        if (qsc::lt_B(a, c) && qsc::lt_B(c, b)) cover = false;
      Weight d = qsc::wt(b) - qsc::wt(a);
      bool simple = false;
      for (int i = 2; i <= 6; ++i) simple = simple || d == qsc::simple_root(i);
      CHECK(cover == simple);
      if (cover) CHECK(qsc::height_B(b) - qsc::height_B(a) == 1);
    }
  }
}

TEST_CASE("inner products follow the symmetric difference") {
  for (SubsetB a : qsc::subsets_by_lex()) {
    for (SubsetB b : qsc::subsets_by_lex()) {
      int sym = std::popcount(static_cast<unsigned>(a.mask() ^ b.mask()));
      int ip = qsc::inner(qsc::wt(a), qsc::wt(b));
      CHECK(2 * ip == 4 - sym);
      std::size_t expected_size = ip == 2 ? 1 : ip == 1 ? 2 : 8;
      CHECK(qsc::class_of(a, b).size() == expected_size);
    }
  }
}

TEST_CASE("class definitions agree and census is 16/80/10") {
  for (SubsetB i : qsc::subsets_by_lex())
    for (SubsetB j : qsc::subsets_by_lex())
      for (SubsetB k : qsc::subsets_by_lex())
        for (SubsetB l : qsc::subsets_by_lex()) {
          bool by_weight = qsc::wt(i) + qsc::wt(j) == qsc::wt(k) + qsc::wt(l);
          bool by_sets = (i.mask() | j.mask()) == (k.mask() | l.mask()) &&
                         (i.mask() & j.mask()) == (k.mask() & l.mask());
          CHECK(by_weight == by_sets);
        }
  int counts[9] = {};
  for (const auto& c : qsc::all_classes()) counts[c.size()]++;
  CHECK(counts[1] == 16);
  CHECK(counts[2] == 80);
  CHECK(counts[8] == 10);
  CHECK(qsc::octets().size() == 10);
}

TEST_CASE("octets reproduce the table of size-8 classes") {
  const char* table[10][8][2] = {
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
  const int heights[8] = {1, 2, 3, 4, 4, 5, 6, 7};
  const auto& oct = qsc::octets();
  REQUIRE(oct.size() == 10);
  for (int r = 0; r < 10; ++r) {
    for (int c = 0; c < 8; ++c) {
      const auto& m = oct[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      CHECK(m.first == S(table[r][c][0]));
      CHECK(m.second == S(table[r][c][1]));
      CHECK(m.height == heights[c]);
      CHECK(qsc::ht_pair(m.first, m.second) == heights[c]);
    }
  }
  auto j = qsc::class_table_json();
  CHECK(j.size() == 10);
  CHECK(j[0][7]["first"] == "e");
  CHECK(j[0][7]["height"] == 7);
}

TEST_CASE("pair heights, epsilon and the pair order") {
  CHECK(qsc::class_of(S("e"), S("e")).size() == 1);
  const auto& c2 = qsc::class_of(S("12"), S("e"));
  REQUIRE(c2.size() == 2);
  CHECK(qsc::ht_pair(S("12"), S("e")) == 1);
  CHECK(qsc::ht_pair(S("e"), S("12")) == 2);
  CHECK(qsc::ht_pair(S("1234"), S("e")) == 1);
  CHECK(qsc::ht_pair(S("e"), S("1234")) == 7);
  CHECK(qsc::ht_pair(S("23"), S("14")) == 4);
  CHECK(qsc::ht_pair(S("14"), S("23")) == 4);
  CHECK(qsc::epsilon(S("1234"), S("e")) == 1);
  CHECK(qsc::epsilon(S("e"), S("1234")) == 0);
  CHECK(qsc::epsilon(S("12"), S("e")) == 0);
  CHECK(qsc::pair_precedes(S("1234"), S("e"), S("34"), S("12")));
  CHECK(!qsc::pair_precedes(S("23"), S("14"), S("14"), S("23")));
  CHECK(!qsc::pair_precedes(S("12"), S("e"), S("12"), S("e")));
  // Heights grade the order: covers raise the height by one.
  for (const auto& cls : qsc::all_classes())
    for (const auto& a : cls)
      for (const auto& b : cls)
        if (qsc::pair_precedes(a.first, a.second, b.first, b.second)) CHECK(a.height < b.height);
}
