#include "qsc/rootdata.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace qsc {

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < 7; ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < 7; ++i) c[i] -= o.c[i];
  return *this;
}

Weight operator*(int k, Weight a) {
  for (auto& x : a.c) x *= k;
  return a;
}

bool Weight::nonnegative() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

int Weight::height() const {
  int s = 0;
  for (int x : c) s += x;
  return s;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 7; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

nlohmann::json Weight::to_json() const { return nlohmann::json(c); }

const std::array<std::array<int, 7>, 7>& gram_matrix() {
  static const auto g = [] {
    std::array<std::array<int, 7>, 7> m{};
    for (int i = 0; i < 7; ++i) m[i][i] = 2;
    const int edges[6][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {0, 2}};
    for (const auto& e : edges) m[e[0]][e[1]] = m[e[1]][e[0]] = -1;
    return m;
  }();
  return g;
}

int inner(const Weight& x, const Weight& y) {
  const auto& g = gram_matrix();
  int s = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    if (!x.c[i]) continue;
    for (std::size_t j = 0; j < 7; ++j) s += x.c[i] * g[i][j] * y.c[j];
  }
  return s;
}

Weight simple_root(int i) {
  Weight w;
  w[i] = 1;
  return w;
}

Weight theta() { return Weight{{0, 1, 2, 2, 3, 2, 1}}; }

Weight delta() { return simple_root(0) + theta(); }

// SubsetB

SubsetB SubsetB::from_mask(std::uint8_t mask) {
  if (mask >= 32 || std::popcount(static_cast<unsigned>(mask)) % 2)
    throw std::invalid_argument("SubsetB: not an even subset of {1..5}");
  SubsetB s;
  s.mask_ = mask;
  return s;
}

SubsetB SubsetB::from_elements(std::initializer_list<int> elems) {
  std::uint8_t m = 0;
  for (int e : elems) {
    if (e < 1 || e > 5) throw std::invalid_argument("SubsetB: element out of range");
    m |= static_cast<std::uint8_t>(1U << (e - 1));
  }
  return from_mask(m);
}

SubsetB SubsetB::parse(std::string_view label) {
  if (label == "e" || label == "") return {};
  std::uint8_t m = 0;
  char prev = '0';
  for (char ch : label) {
    if (ch < '1' || ch > '5' || ch <= prev)
      throw std::invalid_argument("SubsetB: bad label '" + std::string(label) + "'");
    m |= static_cast<std::uint8_t>(1U << (ch - '1'));
    prev = ch;
  }
  return from_mask(m);
}

int SubsetB::size() const { return std::popcount(static_cast<unsigned>(mask_)); }

std::vector<int> SubsetB::elements() const {
  std::vector<int> out;
  for (int i = 1; i <= 5; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string SubsetB::label() const {
  if (mask_ == 0) return "e";
  std::string s;
  for (int i : elements()) s += static_cast<char>('0' + i);
  return s;
}

int lex_code(SubsetB s) {
  int code = 0;
  for (int i : s.elements()) code = code * 10 + i;
  return code;
}

namespace {

Weight compute_wt(SubsetB s) {
  // 2e_1 = a2 - a3, 2e_2 = a2 + a3, 2e_k = 2e_{k-1} + 2a_{k+1}.
  std::array<Weight, 6> two_e{};
  two_e[1] = simple_root(2) - simple_root(3);
  two_e[2] = simple_root(2) + simple_root(3);
  for (int k = 3; k <= 5; ++k) two_e[k] = two_e[k - 1] + 2 * simple_root(k + 1);
  Weight sum;
  for (int i : s.elements()) sum += two_e[static_cast<std::size_t>(i)];
  Weight w = theta();
  for (std::size_t i = 0; i < 7; ++i) {
    if (sum.c[i] % 2) throw std::logic_error("wt: odd coordinate");
    w.c[i] -= sum.c[i] / 2;
  }
  return w;
}

struct Tables {
  std::array<SubsetB, 16> by_lex{};
  std::array<int, 32> lex_index{};
  std::array<Weight, 32> weights{};
  std::array<std::array<int, 32>, 32> class_id{};
  std::array<std::array<int, 32>, 32> height{};
  std::vector<PairClass> classes;
  std::vector<PairClass> octets;

  Tables() {
    std::vector<SubsetB> all;
    for (unsigned m = 0; m < 32; ++m)
      if (std::popcount(m) % 2 == 0) all.push_back(SubsetB::from_mask(static_cast<std::uint8_t>(m)));
    std::sort(all.begin(), all.end(), [](SubsetB a, SubsetB b) { return lex_code(a) < lex_code(b); });
    for (std::size_t i = 0; i < 16; ++i) {
      by_lex[i] = all[i];
      lex_index[all[i].mask()] = static_cast<int>(i);
      weights[all[i].mask()] = compute_wt(all[i]);
    }
    for (auto& row : class_id) row.fill(-1);
    for (SubsetB i : by_lex) {
      for (SubsetB j : by_lex) {
        if (class_id[i.mask()][j.mask()] >= 0) continue;
        const std::uint8_t uni = i.mask() | j.mask();
        const std::uint8_t cap = i.mask() & j.mask();
        std::vector<PairMember> members;
        for (SubsetB k : by_lex)
          for (SubsetB l : by_lex)
            if ((k.mask() | l.mask()) == uni && (k.mask() & l.mask()) == cap) members.push_back({k, l, 0});
        // Height: length of the longest chain ending at the member, under
        // the first-component order.
        auto leq = [&](SubsetB a, SubsetB b) { return (weights[b.mask()] - weights[a.mask()]).nonnegative(); };
        std::sort(members.begin(), members.end(), [&](const PairMember& a, const PairMember& b) {
          return weights[a.first.mask()].height() < weights[b.first.mask()].height();
        });
        for (std::size_t x = 0; x < members.size(); ++x) {
          int h = 1;
          for (std::size_t y = 0; y < x; ++y)
            if (members[y].first != members[x].first && leq(members[y].first, members[x].first))
              h = std::max(h, members[y].height + 1);
          members[x].height = h;
        }
        std::stable_sort(members.begin(), members.end(), [](const PairMember& a, const PairMember& b) {
          if (a.height != b.height) return a.height < b.height;
          return lex_code(a.first) > lex_code(b.first);
        });
        const int id = static_cast<int>(classes.size());
        for (const auto& m : members) {
          class_id[m.first.mask()][m.second.mask()] = id;
          height[m.first.mask()][m.second.mask()] = m.height;
        }
        if (members.size() == 8) octets.push_back(members);
        classes.push_back(std::move(members));
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const std::array<SubsetB, 16>& subsets_by_lex() { return tables().by_lex; }

int lex_pos(SubsetB s) { return tables().lex_index[s.mask()]; }

Weight wt(SubsetB s) { return tables().weights[s.mask()]; }

bool leq_B(SubsetB a, SubsetB b) { return (wt(b) - wt(a)).nonnegative(); }

bool lt_B(SubsetB a, SubsetB b) { return a != b && leq_B(a, b); }

int height_B(SubsetB s) { return wt(s).height(); }

const PairClass& class_of(SubsetB i, SubsetB j) {
  const auto& t = tables();
  return t.classes[static_cast<std::size_t>(t.class_id[i.mask()][j.mask()])];
}

int ht_pair(SubsetB i, SubsetB j) { return tables().height[i.mask()][j.mask()]; }

int epsilon(SubsetB i, SubsetB j) { return (lt_B(i, j) && inner(wt(i), wt(j)) == 0) ? 1 : 0; }

bool pair_preceq(SubsetB i, SubsetB j, SubsetB k, SubsetB l) {
  const auto& t = tables();
  return t.class_id[i.mask()][j.mask()] == t.class_id[k.mask()][l.mask()] && leq_B(i, k);
}

bool pair_precedes(SubsetB i, SubsetB j, SubsetB k, SubsetB l) {
  return !(i == k && j == l) && pair_preceq(i, j, k, l);
}

const std::vector<PairClass>& octets() { return tables().octets; }

const std::vector<PairClass>& all_classes() { return tables().classes; }

nlohmann::json class_table_json() {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& cls : octets()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& m : cls)
      row.push_back({{"first", m.first.label()}, {"second", m.second.label()}, {"height", m.height}});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qsc
