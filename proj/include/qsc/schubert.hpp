#pragma once

#include "qsc/laurent.hpp"
#include "qsc/rootdata.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qsc {

// A word in the generators; each byte is a generator id.
using Word = std::string;

// Noncommutative polynomial: words with Laurent coefficients, no zero terms.
// Products here are free (concatenation); reduction is done by Rewriter.
class NCPoly {
 public:
  using Terms = std::map<Word, LaurentPoly>;

  NCPoly() = default;
  NCPoly(const LaurentPoly& c);  // NOLINT(google-explicit-constructor)
  static NCPoly word(Word w, const LaurentPoly& c = 1);
  static NCPoly generator(int id, const LaurentPoly& c = 1);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  LaurentPoly coeff(const Word& w) const;

  void add_term(const Word& w, const LaurentPoly& c);
  void add_scaled(const NCPoly& o, const LaurentPoly& c);
  NCPoly scaled(const LaurentPoly& c) const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly operator-() const { return scaled(-1); }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

 private:
  Terms t_;
};

enum class AlgebraId { w, what };

// Generators and straightening rules of U_q^+[w] (16 generators Y_I) or
// U_q^+[what] (Z_I and Z_{I+delta}). Generator ids: rank of I under
// (height_B, lex_code) ascending, plus 16 for delta generators. Normal words
// are non-increasing in the id, so delta generators come first.
class AlgebraPresentation {
 public:
  static const AlgebraPresentation& w();
  static const AlgebraPresentation& what();
  static const AlgebraPresentation& get(AlgebraId id);

  AlgebraId id() const { return id_; }
  std::string name() const { return id_ == AlgebraId::w ? "w" : "what"; }
  int num_generators() const { return id_ == AlgebraId::w ? 16 : 32; }

  SubsetB subset(int g) const;
  bool is_delta(int g) const { return g >= 16; }
  int gen_id(SubsetB s, bool delta = false) const;
  std::string label(int g) const;  // Y[12], Z[e], Zd[1234]
  Weight degree(int g) const;      // wt(I), plus delta for Zd
  // Generator of the given Q-degree, or -1.
  int gen_with_degree(const Weight& d) const;

  static bool out_of_order(int a, int b) { return a < b; }
  // Replacement for the out-of-order pair (a, b), a sum of two-letter words.
  const NCPoly& rule(int a, int b) const;
  // Number of out-of-order pairs, i.e. number of rules.
  std::size_t num_rules() const;
  // Smallest increase of ht_pair from a rewritten pair to a correction term
  // over all rules (positive means every rule is height-increasing).
  int min_height_gain() const;

  bool is_normal(const Word& w) const;
  Weight degree(const Word& w) const;
  // Common Q-degree of all terms; throws std::invalid_argument otherwise.
  Weight q_degree(const NCPoly& x) const;

  std::string to_string(const NCPoly& x) const;
  NCPoly parse(std::string_view text) const;  // free product, not reduced
  nlohmann::json to_json(const NCPoly& x) const;
  NCPoly from_json(const nlohmann::json& j) const;

 private:
  explicit AlgebraPresentation(AlgebraId id);

  AlgebraId id_;
  std::vector<NCPoly> rules_;  // indexed a * 32 + b
  std::array<SubsetB, 16> by_rank_{};
  std::array<int, 32> rank_of_mask_{};
};

// Normal-form engine with a memo of left insertions a * u (u normal).
class Rewriter {
 public:
  static constexpr long kMaxApplications = 1000000;

  explicit Rewriter(const AlgebraPresentation& pres) : pres_(&pres) {}
  const AlgebraPresentation& presentation() const { return *pres_; }

  NCPoly normal_form(const NCPoly& x);
  NCPoly normal_form(const Word& w);
  NCPoly multiply(const NCPoly& x, const NCPoly& y);
  // x' y' = c(deg x, deg y) (xy)', extended bilinearly over words.
  NCPoly multiply_twisted(const NCPoly& x, const NCPoly& y);

  std::size_t cache_size() const { return memo_.size(); }
  void clear_cache() { memo_.clear(); }

 private:
  const NCPoly& insert(char a, const Word& u);
  NCPoly left_multiply(char a, const NCPoly& p);

  const AlgebraPresentation* pres_;
  std::unordered_map<Word, NCPoly> memo_;
  long applications_ = 0;
};

// Exponent k in c(x, y) = q^k for the bicharacter with c(alpha_0, alpha_1) = q.
int twist_exponent(const Weight& x, const Weight& y);
// Exponent of the scalar relating a product of primed generators to the
// primed word: (x1...xk)' = q^e x1'...xk', e = -sum_{i<j} a0(xi) b1(xj).
int untwist_exponent(const AlgebraPresentation& pres, const Word& w);

// All normal words of length d, in increasing word order.
std::vector<Word> normal_words(const AlgebraPresentation& pres, int d);
// Number of normal words of length d: C(n + d - 1, d).
Integer hilbert_dim(const AlgebraPresentation& pres, int d);

struct ConfluenceReport {
  std::size_t overlaps = 0;
  std::size_t failures = 0;
  std::vector<std::string> failing;  // first few offending overlaps
  std::size_t normal_words = 0;
  Integer expected_words = 0;
  bool pass() const { return failures == 0 && Integer(normal_words) == expected_words; }
};

// Resolves every overlap abc with ab and bc both out of order in the two
// possible orders, and counts the degree-d normal words.
ConfluenceReport confluence_check(Rewriter& rw, int d);

}  // namespace qsc
