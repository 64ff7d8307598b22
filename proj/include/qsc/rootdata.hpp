#pragma once

#include <json.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qsc {

// Element of the root lattice of the affine E6 system, in simple-root
// coordinates (alpha_0, ..., alpha_6). Node numbering: alpha_2 is attached to
// alpha_0 and alpha_4; the chain is 1-3-4-5-6.
struct Weight {
  std::array<int, 7> c{};

  int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);
  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return a.c != b.c; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

  bool nonnegative() const;
  int height() const;  // coordinate sum
  std::string to_string() const;
  nlohmann::json to_json() const;
};

// Symmetric form with Gram matrix the affine E6 Cartan matrix.
int inner(const Weight& x, const Weight& y);
const std::array<std::array<int, 7>, 7>& gram_matrix();

Weight simple_root(int i);
Weight theta();  // highest root of E6
Weight delta();  // null root alpha_0 + theta

// Even-cardinality subset of {1,...,5}.
class SubsetB {
 public:
  constexpr SubsetB() = default;
  static SubsetB from_mask(std::uint8_t mask);
  static SubsetB from_elements(std::initializer_list<int> elems);
  static SubsetB parse(std::string_view label);  // "1234", "e"

  std::uint8_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1U; }
  int size() const;
  std::vector<int> elements() const;  // ascending
  std::string label() const;          // sorted digits, "e" for empty

  friend bool operator==(SubsetB a, SubsetB b) { return a.mask_ == b.mask_; }
  friend bool operator!=(SubsetB a, SubsetB b) { return a.mask_ != b.mask_; }
  // Arbitrary but fixed order for use as a map key (by mask).
  friend bool operator<(SubsetB a, SubsetB b) { return a.mask_ < b.mask_; }

 private:
  std::uint8_t mask_ = 0;
};

// All 16 elements, in increasing lex_code (the basis order of S).
const std::array<SubsetB, 16>& subsets_by_lex();
int lex_pos(SubsetB s);  // position in subsets_by_lex()

Weight wt(SubsetB s);
bool leq_B(SubsetB a, SubsetB b);  // wt(b) - wt(a) in Q_+
bool lt_B(SubsetB a, SubsetB b);
int height_B(SubsetB s);
int lex_code(SubsetB s);

struct PairMember {
  SubsetB first;
  SubsetB second;
  int height;
};

using PairClass = std::vector<PairMember>;  // ordered by height, then lex codes

// Equivalence class of (I, J): all (K, L) with the same union and
// intersection, annotated with heights.
const PairClass& class_of(SubsetB i, SubsetB j);
int ht_pair(SubsetB i, SubsetB j);
int epsilon(SubsetB i, SubsetB j);
// Strict order on B x B: same class and first components strictly increase.
bool pair_precedes(SubsetB i, SubsetB j, SubsetB k, SubsetB l);
bool pair_preceq(SubsetB i, SubsetB j, SubsetB k, SubsetB l);

// The ten octets, each ordered by height (one row per class).
const std::vector<PairClass>& octets();
// All distinct classes, each once.
const std::vector<PairClass>& all_classes();

nlohmann::json class_table_json();

}  // namespace qsc
