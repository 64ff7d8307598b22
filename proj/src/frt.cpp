#include "qsc/frt.hpp"

#include "qsc/adjoint.hpp"
#include "qsc/linalg.hpp"
#include "qsc/modp.hpp"
#include "qsc/rmatrix.hpp"

#include <bit>
#include <stdexcept>

namespace qsc {

namespace {

constexpr std::size_t kMaxListed = 8;

char byte(int id) { return static_cast<char>(static_cast<unsigned char>(id)); }
int unbyte(char c) { return static_cast<unsigned char>(c); }

void add_term(RelationVector& v, const FRTWord& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

// (row weight, column weight) of a word.
using BlockKey = std::pair<Weight, Weight>;

BlockKey block_of(const FRTWord& w) {
  BlockKey k;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const FRTGen g = frt_letter(w, i);
    k.first += qsc::wt(g.row);
    k.second += qsc::wt(g.col);
  }
  return k;
}

class BlockedSpan {
 public:
  bool insert(const RelationVector& v) {
    if (v.empty()) return false;
    return blocks_[block_of(v.begin()->first)].insert(v);
  }
  bool contains(const RelationVector& v) const {
    if (v.empty()) return true;
    auto it = blocks_.find(block_of(v.begin()->first));
    if (it == blocks_.end()) return false;
    return it->second.contains(v);
  }
  int rank() const {
    std::size_t r = 0;
    for (const auto& [k, s] : blocks_) r += s.rank();
    return static_cast<int>(r);
  }
  std::vector<RelationVector> canonical_basis() const {
    std::vector<RelationVector> out;
    for (const auto& [k, s] : blocks_)
      for (auto& v : s.canonical_basis()) out.push_back(std::move(v));
    return out;
  }

 private:
  std::map<BlockKey, ExactSpan<FRTWord>> blocks_;
};

BlockedSpan span_of(const std::vector<RelationVector>& vs) {
  BlockedSpan s;
  for (const auto& v : vs) s.insert(v);
  return s;
}

// X_{s,I} X_{s,J} - q^<wt I, wt J> X_{s,J} X_{s,I} - q^ sum (-q)^{..} X_{s,L} X_{s,M}.
RelationVector commutation(SubsetB s, SubsetB i, SubsetB j) {
  RelationVector v;
  add_term(v, frt_word({{s, i}, {s, j}}), 1);
  add_term(v, frt_word({{s, j}, {s, i}}), -LaurentPoly::q_pow(inner(wt(i), wt(j))));
  const int hij = ht_pair(i, j);
  for (const auto& m : class_of(i, j)) {
    if (!pair_precedes(i, j, m.first, m.second) || lex_code(m.second) > lex_code(m.first)) continue;
    add_term(v, frt_word({{s, m.first}, {s, m.second}}), -(qhat() * LaurentPoly::neg_q_pow(m.height - hij - 1)));
  }
  return v;
}

// The system read from one octet of FRT relations: entry (r, c) is minus the
// coefficient of column word c in relation r.
DenseMatrix coefficient_matrix(const std::vector<RelationVector>& rels, const std::vector<FRTWord>& cols) {
  DenseMatrix m(rels.size(), std::vector<LaurentPoly>(cols.size()));
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (auto it = rels[r].find(cols[c]); it != rels[r].end()) m[r][c] = -it->second;
  return m;
}

std::string matrix_diff(const DenseMatrix& a, const DenseMatrix& b, int* count) {
  std::string first;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a[r].size(); ++c)
      if (a[r][c] != b[r][c]) {
        ++*count;
        if (first.empty())
          first = "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + a[r][c].to_string() + " vs " +
                  b[r][c].to_string();
      }
  return first;
}

std::string octet_label(const PairClass& octet) { return "(" + octet[0].first.label() + "," + octet[0].second.label() + ")"; }

struct KernelGenerators {
  Rewriter w_rw{AlgebraPresentation::w()};
  Rewriter what_rw{AlgebraPresentation::what()};
  std::vector<NCPoly> theta;
  std::map<int, std::vector<NCPoly>> omegas;

  KernelGenerators() {
    theta = submodule_span(w_rw, build_theta(w_rw));
    OmegaBuilder ob(what_rw);
    for (int k : {3, 4, 5}) omegas[k] = submodule_span(what_rw, ob.omega(k));
  }
};

KernelGenerators& kernel_generators() {
  static KernelGenerators g;
  return g;
}

NCPoly rule_relation(const AlgebraPresentation& pres, int a, int b) {
  return NCPoly::word(Word{static_cast<char>(a), static_cast<char>(b)}) - pres.rule(a, b);
}

// Rank of the degree-d part of the ideal generated by rels in the free
// algebra on the given letters, modulo p.
std::size_t ideal_rank_mod(const std::vector<RelationVector>& rels, const std::vector<FRTGen>& letters, int d,
                           const modp::EvalPoint& pt) {
  std::map<BlockKey, ModSpan<FRTWord>> blocks;
  std::vector<std::vector<std::pair<FRTWord, std::uint64_t>>> evaluated;
  for (const auto& r : rels) {
    std::vector<std::pair<FRTWord, std::uint64_t>> e;
    for (const auto& [w, c] : r) e.emplace_back(w, c.eval_mod(pt.q0, pt.p));
    evaluated.push_back(std::move(e));
  }
  // Words over the letters of each length up to d - 2.
  std::vector<std::vector<FRTWord>> words(static_cast<std::size_t>(d - 1));
  words[0] = {FRTWord()};
  for (std::size_t n = 1; n < words.size(); ++n)
    for (const auto& u : words[n - 1])
      for (const auto& g : letters) words[n].push_back(u + byte(g.id()));
  for (int a = 0; a <= d - 2; ++a) {
    const int b = d - 2 - a;
    for (const auto& u : words[static_cast<std::size_t>(a)])
      for (const auto& v : words[static_cast<std::size_t>(b)])
        for (const auto& r : evaluated) {
          ModSpan<FRTWord>::Vec x;
          for (const auto& [w, c] : r)
            if (c) x.emplace(u + w + v, c);
          if (x.empty()) continue;
          auto key = block_of(x.begin()->first);
          blocks.try_emplace(key, pt.p).first->second.insert(x);
        }
  }
  std::size_t rank = 0;
  for (const auto& [k, s] : blocks) rank += s.rank();
  return rank;
}

// Spanning set of the degree-d part of the two-sided ideal generated by the
// given homogeneous elements of the Schubert algebra, in normal form.
std::vector<NCPoly> quotient_ideal_vectors(Rewriter& rw, const std::vector<NCPoly>& gens, int d) {
  const auto& pres = rw.presentation();
  std::vector<NCPoly> out;
  for (const auto& g : gens) {
    const int dg = static_cast<int>(g.terms().begin()->first.size());
    for (int a = 0; a <= d - dg; ++a) {
      const auto left = normal_words(pres, a);
      const auto right = normal_words(pres, d - dg - a);
      for (const auto& u : left)
        for (const auto& v : right) out.push_back(rw.normal_form(NCPoly::word(u) * g * NCPoly::word(v)));
    }
  }
  return out;
}

std::size_t rank_mod(const AlgebraPresentation& pres, const std::vector<NCPoly>& xs, const modp::EvalPoint& pt) {
  std::map<Weight, ModSpan<Word>> blocks;
  for (const auto& x : xs) {
    ModSpan<Word>::Vec y;
    for (const auto& [w, c] : x.terms()) {
      const std::uint64_t e = c.eval_mod(pt.q0, pt.p);
      if (e) y.emplace(w, e);
    }
    if (y.empty()) continue;
    blocks.try_emplace(pres.degree(y.begin()->first), pt.p).first->second.insert(y);
  }
  std::size_t rank = 0;
  for (const auto& [k, s] : blocks) rank += s.rank();
  return rank;
}

std::size_t exact_rank_words(const std::vector<NCPoly>& gens) {
  ExactSpan<Word> span;
  for (const auto& g : gens) span.insert(std::map<Word, LaurentPoly>(g.terms().begin(), g.terms().end()));
  return span.rank();
}

long power(long base, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void dimension_evidence(PsiReport& rep, const std::vector<RelationVector>& presentation,
                        const std::vector<FRTGen>& letters, Rewriter& rw, const std::vector<NCPoly>& kernel,
                        int max_degree, std::uint64_t seed) {
  const auto nletters = static_cast<long>(letters.size());
  const auto& pres = rw.presentation();
  if (max_degree >= 2) {
    DimensionEvidence e;
    e.degree = 2;
    e.algebra_dims.push_back(nletters * nletters - static_cast<long>(presentation.size()));
    e.quotient_dims.push_back(static_cast<long>(hilbert_dim(pres, 2)) - static_cast<long>(exact_rank_words(kernel)));
    rep.dims.push_back(e);
  }
  const auto points = modp::eval_points(seed, 3);
  for (int d = 3; d <= max_degree; ++d) {
    DimensionEvidence e;
    e.degree = d;
    e.exact = false;
    const auto ideal = quotient_ideal_vectors(rw, kernel, d);
    for (const auto& pt : points) {
      e.algebra_dims.push_back(power(nletters, d) - static_cast<long>(ideal_rank_mod(presentation, letters, d, pt)));
      e.quotient_dims.push_back(static_cast<long>(hilbert_dim(pres, d)) -
                                static_cast<long>(rank_mod(pres, ideal, pt)));
    }
    rep.dims.push_back(e);
  }
}

nlohmann::json failure_list(const std::vector<std::string>& f) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < f.size() && i < kMaxListed; ++i) j.push_back(f[i]);
  return j;
}

}  // namespace

// Generators and words

int FRTGen::id() const { return 16 * lex_pos(row) + lex_pos(col); }

FRTGen FRTGen::from_id(int id) {
  if (id < 0 || id >= 256) throw std::invalid_argument("FRT generator id out of range");
  const auto& b = subsets_by_lex();
  return {b[static_cast<std::size_t>(id / 16)], b[static_cast<std::size_t>(id % 16)]};
}

std::string FRTGen::label() const { return "X[" + row.label() + "," + col.label() + "]"; }

FRTWord frt_word(std::initializer_list<FRTGen> gens) {
  FRTWord w;
  for (const auto& g : gens) w += byte(g.id());
  return w;
}

FRTGen frt_letter(const FRTWord& w, std::size_t k) { return FRTGen::from_id(unbyte(w.at(k))); }

std::string relation_to_string(const RelationVector& r) {
  if (r.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : r) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (std::size_t i = 0; i < w.size(); ++i) s += "*" + frt_letter(w, i).label();
  }
  return s;
}

nlohmann::json relation_json(const RelationVector& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : r) {
    nlohmann::json word = nlohmann::json::array();
    for (std::size_t i = 0; i < w.size(); ++i) word.push_back(frt_letter(w, i).label());
    out.push_back({{"coeff", c.to_json()}, {"word", word}});
  }
  return out;
}

RelationVector frt_relation(SubsetB s, SubsetB t, SubsetB i, SubsetB j) {
  RelationVector v;
  for (const auto& m : class_of(t, s)) add_term(v, frt_word({{m.first, i}, {m.second, j}}), r_coeff(m.first, m.second, t, s));
  for (const auto& m : class_of(i, j)) add_term(v, frt_word({{s, m.second}, {t, m.first}}), -r_coeff(i, j, m.first, m.second));
  return v;
}

bool admissible_pair(SubsetB s, SubsetB t) {
  return std::popcount(static_cast<unsigned>(s.mask() ^ t.mask())) == 2 && lt_B(s, t);
}

const std::vector<std::pair<SubsetB, SubsetB>>& admissible_pairs() {
  static const auto pairs = [] {
    std::vector<std::pair<SubsetB, SubsetB>> out;
    for (SubsetB s : subsets_by_lex())
      for (SubsetB t : subsets_by_lex())
        if (admissible_pair(s, t)) out.emplace_back(s, t);
    return out;
  }();
  return pairs;
}

// Presentations

std::vector<RelationVector> row_presentation(SubsetB s) {
  BlockedSpan span;
  for (SubsetB i : subsets_by_lex())
    for (SubsetB j : subsets_by_lex()) span.insert(frt_relation(s, s, i, j));
  return span.canonical_basis();
}

std::vector<RelationVector> two_row_presentation(SubsetB s, SubsetB t) {
  if (!admissible_pair(s, t)) throw std::invalid_argument("two_row_presentation: need |S delta T| = 2 and S < T");
  BlockedSpan span;
  for (SubsetB i : subsets_by_lex())
    for (SubsetB j : subsets_by_lex())
      for (auto [a, b] : {std::pair{s, s}, std::pair{t, t}, std::pair{s, t}, std::pair{t, s}})
        span.insert(frt_relation(a, b, i, j));
  return span.canonical_basis();
}

std::vector<RelationVector> stated_commutation(SubsetB s) {
  std::vector<RelationVector> out;
  for (SubsetB i : subsets_by_lex())
    for (SubsetB j : subsets_by_lex())
      if (!leq_B(j, i)) out.push_back(commutation(s, i, j));
  return out;
}

std::vector<RelationVector> stated_octet_relations(SubsetB s) {
  std::vector<RelationVector> out;
  for (const auto& oct : octets()) {
    RelationVector v;
    for (int k = 0; k < 4; ++k) {
      const auto& m = oct[static_cast<std::size_t>(k)];
      add_term(v, frt_word({{s, m.first}, {s, m.second}}), LaurentPoly::neg_q_pow(k));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RelationVector> stated_mixed(SubsetB s, SubsetB t) {
  std::vector<RelationVector> out;
  const LaurentPoly qh = qhat();
  for (SubsetB i : subsets_by_lex())
    for (SubsetB j : subsets_by_lex()) {
      RelationVector v;
      add_term(v, frt_word({{s, i}, {t, j}}), 1);
      add_term(v, frt_word({{t, j}, {s, i}}), -LaurentPoly::q_pow(inner(wt(i), wt(j)) - 1));
      const int hij = ht_pair(i, j);
      for (const auto& m : class_of(i, j))
        if (pair_precedes(i, j, m.first, m.second))
          add_term(v, frt_word({{s, m.first}, {t, m.second}}), -(qh * LaurentPoly::neg_q_pow(m.height - hij - 1)));
      if (epsilon(i, j)) add_term(v, frt_word({{s, j}, {t, i}}), -(qh * LaurentPoly::q_pow(-1) * epsilon(i, j)));
      out.push_back(std::move(v));
    }
  return out;
}

std::vector<RelationVector> stated_mixed_octet(SubsetB s, SubsetB t) {
  std::vector<RelationVector> out;
  for (const auto& oct : octets()) {
    RelationVector v;
    for (const auto& m : oct) add_term(v, frt_word({{s, m.first}, {t, m.second}}), LaurentPoly::neg_q_pow(m.height));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RelationVector> stated_row_relations(SubsetB s) {
  auto out = stated_commutation(s);
  for (auto& v : stated_octet_relations(s)) out.push_back(std::move(v));
  return out;
}

std::vector<RelationVector> stated_two_row_relations(SubsetB s, SubsetB t) {
  if (!admissible_pair(s, t)) throw std::invalid_argument("stated_two_row_relations: need |S delta T| = 2 and S < T");
  std::vector<RelationVector> out;
  for (auto part : {stated_commutation(s), stated_commutation(t), stated_mixed(s, t), stated_octet_relations(s),
                    stated_octet_relations(t), stated_mixed_octet(s, t)})
    for (auto& v : part) out.push_back(std::move(v));
  return out;
}

nlohmann::json SpanComparison::to_json() const {
  return {{"computed_rank", computed_rank},
          {"stated_rank", stated_rank},
          {"stated_vectors", stated_vectors},
          {"stated_outside_computed", stated_outside},
          {"computed_outside_stated", computed_outside},
          {"verdict", pass() ? "pass" : "fail"}};
}

SpanComparison compare_spans(const std::vector<RelationVector>& computed, const std::vector<RelationVector>& stated) {
  SpanComparison c;
  const BlockedSpan cs = span_of(computed);
  const BlockedSpan ss = span_of(stated);
  c.computed_rank = cs.rank();
  c.stated_rank = ss.rank();
  c.stated_vectors = static_cast<int>(stated.size());
  for (const auto& v : stated)
    if (!cs.contains(v)) ++c.stated_outside;
  for (const auto& v : computed)
    if (!ss.contains(v)) ++c.computed_outside;
  return c;
}

nlohmann::json PresentationReport::to_json() const {
  return {{"checked", checked},
          {"expected_rank", expected_rank},
          {"failures", failure_list(failures)},
          {"failure_count", failures.size()},
          {"verdict", pass() ? "pass" : "fail"}};
}

PresentationReport row_presentation_check() {
  PresentationReport rep;
  rep.expected_rank = 130;
  for (SubsetB s : subsets_by_lex()) {
    ++rep.checked;
    const auto c = compare_spans(row_presentation(s), stated_row_relations(s));
    if (!c.pass() || c.computed_rank != rep.expected_rank) rep.failures.push_back("row " + s.label() + ": " + c.to_json().dump());
  }
  return rep;
}

PresentationReport two_row_presentation_check() {
  PresentationReport rep;
  rep.expected_rank = 526;
  for (const auto& [s, t] : admissible_pairs()) {
    ++rep.checked;
    const auto c = compare_spans(two_row_presentation(s, t), stated_two_row_relations(s, t));
    if (!c.pass() || c.computed_rank != rep.expected_rank)
      rep.failures.push_back("rows " + s.label() + "," + t.label() + ": " + c.to_json().dump());
  }
  return rep;
}

// Proof matrices

DenseMatrix displayed_A(bool literal) {
  const LaurentPoly h = qhat();
  auto hq = [&](int k) { return h * LaurentPoly::q_pow(k); };
  const LaurentPoly a18 = h * (LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-5));
  const LaurentPoly a27 = h * (LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-3));
  const LaurentPoly a46 = literal ? LaurentPoly(1) : h;
  const LaurentPoly o = 1, z;
  return {
      {o, h, -hq(-1), hq(-2), hq(-2), -hq(-3), hq(-4), a18},
      {z, o, h, -hq(-1), -hq(-1), hq(-2), a27, hq(-4)},
      {z, z, o, h, h, h * h, hq(-2), -hq(-3)},
      {z, z, z, o, z, a46, -hq(-1), hq(-2)},
      {z, z, z, z, o, h, -hq(-1), hq(-2)},
      {z, z, z, z, z, o, h, -hq(-1)},
      {z, z, z, z, z, z, o, h},
      {z, z, z, z, z, z, z, o},
  };
}

DenseMatrix skew_diag(const LaurentPoly& x) {
  DenseMatrix m(8, std::vector<LaurentPoly>(8));
  for (std::size_t i = 0; i < 8; ++i) m[i][7 - i] = x;
  return m;
}

DenseMatrix row_block_matrix(const DenseMatrix& a) {
  DenseMatrix m = a;
  const DenseMatrix s = skew_diag(LaurentPoly::q_pow(2));
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) m[r][c] -= s[r][c];
  return m;
}

DenseMatrix two_row_block_matrix(const DenseMatrix& a) {
  DenseMatrix m(16, std::vector<LaurentPoly>(16));
  const DenseMatrix s1 = skew_diag(qhat() * LaurentPoly::q_pow(1));
  const DenseMatrix s2 = skew_diag(-LaurentPoly::q_pow(1));
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      m[r][c] = a[r][c] - s1[r][c];
      m[r][c + 8] = s2[r][c];
      m[r + 8][c] = s2[r][c];
      m[r + 8][c + 8] = a[r][c];
    }
  return m;
}

std::vector<std::pair<SubsetB, SubsetB>> octet_positions(const PairClass& octet) {
  if (octet.size() != 8) throw std::invalid_argument("octet_positions: class of size 8 expected");
  std::vector<std::pair<SubsetB, SubsetB>> pos;
  for (int p = 0; p < 4; ++p) pos.emplace_back(octet[static_cast<std::size_t>(p)].second, octet[static_cast<std::size_t>(p)].first);
  for (int p = 3; p >= 0; --p) pos.emplace_back(octet[static_cast<std::size_t>(p)].first, octet[static_cast<std::size_t>(p)].second);
  return pos;
}

DenseMatrix derived_A(const PairClass& octet) {
  const auto pos = octet_positions(octet);
  DenseMatrix m(8, std::vector<LaurentPoly>(8));
  for (std::size_t r = 0; r < 8; ++r) {
    const auto [i, j] = pos[7 - r];
    for (std::size_t c = 0; c < 8; ++c) m[r][c] = r_coeff(i, j, pos[c].second, pos[c].first);
  }
  return m;
}

DenseMatrix derived_row_matrix(SubsetB s, const PairClass& octet) {
  const auto pos = octet_positions(octet);
  std::vector<RelationVector> rels;
  std::vector<FRTWord> cols;
  for (std::size_t r = 0; r < 8; ++r) rels.push_back(frt_relation(s, s, pos[7 - r].first, pos[7 - r].second));
  for (const auto& [l, m] : pos) cols.push_back(frt_word({{s, l}, {s, m}}));
  return coefficient_matrix(rels, cols);
}

DenseMatrix derived_two_row_matrix(SubsetB s, SubsetB t, const PairClass& octet) {
  const auto pos = octet_positions(octet);
  std::vector<RelationVector> rels;
  std::vector<FRTWord> cols;
  for (std::size_t r = 0; r < 8; ++r) rels.push_back(frt_relation(s, t, pos[7 - r].first, pos[7 - r].second));
  for (std::size_t r = 0; r < 8; ++r) rels.push_back(frt_relation(t, s, pos[7 - r].first, pos[7 - r].second));
  for (const auto& [l, m] : pos) cols.push_back(frt_word({{s, l}, {t, m}}));
  for (const auto& [l, m] : pos) cols.push_back(frt_word({{t, l}, {s, m}}));
  return coefficient_matrix(rels, cols);
}

nlohmann::json RankReport::to_json() const {
  return {{"rank_A_minus_skew_q2", rank_row},
          {"rank_two_row_block", rank_two_row},
          {"rank_A", rank_a},
          {"printed_entry_4_6",
           {{"rank_A_minus_skew_q2", literal_rank_row},
            {"rank_two_row_block", literal_rank_two_row},
            {"entry_mismatches_vs_R", literal_entry_mismatches}}},
          {"matrices_compared", matrices_compared},
          {"entry_mismatches", entry_mismatches},
          {"first_mismatches", failure_list(first_mismatches)},
          {"verdict", pass() ? "pass" : "fail"}};
}

RankReport rank_checks() {
  RankReport rep;
  const DenseMatrix a = displayed_A();
  const DenseMatrix lit = displayed_A(true);
  rep.rank_row = static_cast<int>(bareiss_rank(row_block_matrix(a)));
  rep.rank_two_row = static_cast<int>(bareiss_rank(two_row_block_matrix(a)));
  rep.rank_a = static_cast<int>(bareiss_rank(a));
  rep.literal_rank_row = static_cast<int>(bareiss_rank(row_block_matrix(lit)));
  rep.literal_rank_two_row = static_cast<int>(bareiss_rank(two_row_block_matrix(lit)));

  const DenseMatrix row = row_block_matrix(a);
  const DenseMatrix two = two_row_block_matrix(a);
  auto compare = [&](const DenseMatrix& got, const DenseMatrix& want, const std::string& what) {
    ++rep.matrices_compared;
    int n = 0;
    const std::string first = matrix_diff(got, want, &n);
    rep.entry_mismatches += n;
    if (n && rep.first_mismatches.size() < kMaxListed) rep.first_mismatches.push_back(what + " " + first);
  };
  for (const auto& oct : octets()) {
    const DenseMatrix d = derived_A(oct);
    compare(d, a, "A from R-hat, octet " + octet_label(oct));
    int lit_n = 0;
    matrix_diff(d, lit, &lit_n);
    rep.literal_entry_mismatches += lit_n;
    for (SubsetB s : subsets_by_lex()) compare(derived_row_matrix(s, oct), row, "row " + s.label() + " octet " + octet_label(oct));
    for (const auto& [s, t] : admissible_pairs())
      compare(derived_two_row_matrix(s, t, oct), two, "rows " + s.label() + "," + t.label() + " octet " + octet_label(oct));
  }
  return rep;
}

// Homomorphisms

RelationVector transport_row(const AlgebraPresentation& w, const NCPoly& x, SubsetB s) {
  RelationVector v;
  for (const auto& [word, c] : x.terms()) {
    FRTWord fw;
    for (char g : word) fw += byte(FRTGen{s, w.subset(g)}.id());
    add_term(v, fw, c);
  }
  return v;
}

RelationVector transport_two_rows(const AlgebraPresentation& what, const NCPoly& x, SubsetB s, SubsetB t) {
  RelationVector v;
  for (const auto& [word, c] : x.terms()) {
    FRTWord fw;
    for (char g : word) fw += byte(FRTGen{what.is_delta(g) ? t : s, what.subset(g)}.id());
    add_term(v, fw, c * LaurentPoly::q_pow(untwist_exponent(what, word)));
  }
  return v;
}

bool DimensionEvidence::match() const {
  if (algebra_dims.empty() || algebra_dims.size() != quotient_dims.size()) return false;
  for (std::size_t i = 0; i < algebra_dims.size(); ++i)
    if (algebra_dims[i] != quotient_dims[i] || algebra_dims[i] != algebra_dims[0]) return false;
  return true;
}

nlohmann::json DimensionEvidence::to_json() const {
  return {{"degree", degree},
          {"mode", exact ? "exact" : "modular"},
          {"algebra_side", algebra_dims},
          {"quotient_side", quotient_dims},
          {"verdict", match() ? (exact ? "pass" : "probabilistic-pass") : "fail"}};
}

bool PsiReport::pass() const {
  if (!relation_failures.empty() || !kernel_failures.empty()) return false;
  for (const auto& d : dims)
    if (!d.match()) return false;
  return true;
}

nlohmann::json PsiReport::to_json() const {
  nlohmann::json d = nlohmann::json::array();
  for (const auto& e : dims) d.push_back(e.to_json());
  return {{"map", target},
          {"relations", {{"checked", relations_checked}, {"failures", failure_list(relation_failures)}}},
          {"kernel_generators", {{"checked", kernel_checked}, {"failures", failure_list(kernel_failures)}}},
          {"dimensions", d},
          {"verdict", pass() ? "pass" : "fail"}};
}

const std::vector<NCPoly>& theta_module() { return kernel_generators().theta; }

const std::vector<NCPoly>& omega_module(int k) {
  auto& g = kernel_generators();
  auto it = g.omegas.find(k);
  if (it == g.omegas.end()) throw std::invalid_argument("omega_module: k must be 3, 4 or 5");
  return it->second;
}

PsiReport psi_S_check(SubsetB s, int max_degree, std::uint64_t seed) {
  PsiReport rep;
  rep.target = "psi_" + s.label();
  auto& kg = kernel_generators();
  const auto& pres = AlgebraPresentation::w();
  const auto basis = row_presentation(s);
  const BlockedSpan span = span_of(basis);
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) {
      ++rep.relations_checked;
      if (!span.contains(transport_row(pres, rule_relation(pres, a, b), s)))
        rep.relation_failures.push_back(pres.label(a) + "*" + pres.label(b));
    }
  for (std::size_t k = 0; k < kg.theta.size(); ++k) {
    ++rep.kernel_checked;
    if (!span.contains(transport_row(pres, kg.theta[k], s))) rep.kernel_failures.push_back("Theta module vector " + std::to_string(k));
  }
  std::vector<FRTGen> letters;
  for (SubsetB i : subsets_by_lex()) letters.push_back({s, i});
  dimension_evidence(rep, basis, letters, kg.w_rw, kg.theta, max_degree, seed);
  return rep;
}

PsiReport psi_ST_check(SubsetB s, SubsetB t, int max_degree, std::uint64_t seed) {
  if (!admissible_pair(s, t)) throw std::invalid_argument("psi_ST_check: need |S delta T| = 2 and S < T");
  PsiReport rep;
  rep.target = "psi_" + s.label() + "," + t.label();
  auto& kg = kernel_generators();
  const auto& pres = AlgebraPresentation::what();
  const auto basis = two_row_presentation(s, t);
  const BlockedSpan span = span_of(basis);
  for (int a = 0; a < 32; ++a)
    for (int b = a + 1; b < 32; ++b) {
      ++rep.relations_checked;
      if (!span.contains(transport_two_rows(pres, rule_relation(pres, a, b), s, t)))
        rep.relation_failures.push_back(pres.label(a) + "*" + pres.label(b));
    }
  std::vector<NCPoly> kernel;
  for (int k : {3, 4, 5}) {
    const auto& mod = kg.omegas.at(k);
    for (std::size_t v = 0; v < mod.size(); ++v) {
      ++rep.kernel_checked;
      if (!span.contains(transport_two_rows(pres, mod[v], s, t)))
        rep.kernel_failures.push_back("Omega" + std::to_string(k) + " module vector " + std::to_string(v));
      kernel.push_back(mod[v]);
    }
  }
  std::vector<FRTGen> letters;
  for (SubsetB row : {s, t})
    for (SubsetB i : subsets_by_lex()) letters.push_back({row, i});
  dimension_evidence(rep, basis, letters, kg.what_rw, kernel, max_degree, seed);
  return rep;
}

}  // namespace qsc
