#include "qsc/rmatrix.hpp"

#include "qsc/linalg.hpp"
#include "qsc/modp.hpp"
#include "qsc/schubert.hpp"
#include "qsc/spinrep.hpp"

#include <deque>
#include <sstream>

namespace qsc {

namespace {

const std::vector<std::pair<int, int>>& factor_order() {
  static const std::vector<std::pair<int, int>> order = {{4, 5}, {3, 5}, {2, 5}, {1, 5}, {3, 4},
                                                         {2, 4}, {1, 4}, {2, 3}, {1, 3}, {1, 2}};
  return order;
}

SparseMat b_matrix(bool inverse) {
  std::vector<LaurentPoly> d(256);
  for (int p = 0; p < 256; ++p) {
    const int e = inner(wt(pair_first(p)), wt(pair_second(p)));
    d[static_cast<std::size_t>(p)] = LaurentPoly::q_pow(inverse ? -e : e);
  }
  return SparseMat::diagonal(d);
}

SparseMat flip_matrix() {
  SparseMat t(256, 256);
  for (int p = 0; p < 256; ++p) t.set(pair_index(pair_second(p), pair_first(p)), p, 1);
  return t;
}

std::string pair_label(int p) { return pair_first(p).label() + "|" + pair_second(p).label(); }

// Pair index of the flip of p.
int flip(int p) { return pair_index(pair_second(p), pair_first(p)); }

// (q - q^-1) rho(X_ij) (x) rho(X_ji); squares to zero.
SparseMat factor_nilpotent(int i, int j, bool primed) {
  const SparseMat a = primed ? rho_Eprime(i, j) : rho_E(i, j);
  const SparseMat b = primed ? rho_Eprime(j, i) : rho_E(j, i);
  return a.kron(b).scaled(qhat());
}

}  // namespace

int pair_index(SubsetB i, SubsetB j) { return 16 * lex_pos(i) + lex_pos(j); }
SubsetB pair_first(int p) { return subsets_by_lex()[static_cast<std::size_t>(p / 16)]; }
SubsetB pair_second(int p) { return subsets_by_lex()[static_cast<std::size_t>(p % 16)]; }

SparseMat phi_factor(int i, int j, bool primed) {
  return SparseMat::identity(256) + factor_nilpotent(i, j, primed);
}

SparseMat build_rhat() {
  SparseMat m = SparseMat::identity(256);
  for (bool primed : {false, true})
    for (const auto& [i, j] : factor_order()) m = m * phi_factor(i, j, primed);
  return flip_matrix() * b_matrix(false) * m;
}

const SparseMat& rhat() {
  static const SparseMat r = build_rhat();
  return r;
}

SparseMat build_rhat_inverse() {
  // Each factor is 1 + N with N^2 = 0, so its inverse is 1 - N.
  SparseMat m = SparseMat::identity(256);
  for (bool primed : {true, false}) {
    const auto& order = factor_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      m = m * (SparseMat::identity(256) - factor_nilpotent(it->first, it->second, primed));
  }
  return m * b_matrix(true) * flip_matrix();
}

LaurentPoly r_coeff(SubsetB i, SubsetB j, SubsetB k, SubsetB l) {
  return rhat().get(pair_index(l, k), pair_index(i, j));
}

LaurentPoly closed_form_coeff(SubsetB i, SubsetB j, SubsetB k, SubsetB l, bool literal_sign) {
  if (k == i && l == j) return LaurentPoly::q_pow(inner(wt(i), wt(j)));
  if (!pair_preceq(i, j, k, l)) return {};
  const LaurentPoly qh = qhat();
  const LaurentPoly tail = LaurentPoly::neg_q_pow(ht_pair(i, j) - ht_pair(k, l) + 1);
  if (k == j && l == i) {
    const std::size_t n = class_of(i, j).size();
    if (n == 8) return qh * (LaurentPoly::q_pow(1) + (literal_sign ? -tail : tail));
    if (n == 2) return qh * LaurentPoly::q_pow(1);
  }
  return qh * tail;
}

CoeffReport coeff_check() {
  CoeffReport rep;
  const auto& subs = subsets_by_lex();
  for (const auto& i : subs)
    for (const auto& j : subs)
      for (const auto& k : subs)
        for (const auto& l : subs) {
          ++rep.entries;
          const LaurentPoly r = r_coeff(i, j, k, l);
          if (r != closed_form_coeff(i, j, k, l)) {
            ++rep.mismatches;
            if (rep.first_mismatches.size() < 10)
              rep.first_mismatches.push_back("(" + i.label() + "," + j.label() + ")->(" + k.label() + "," + l.label() +
                                             "): " + r.to_string());
          }
          if (r != closed_form_coeff(i, j, k, l, true)) ++rep.literal_sign_mismatches;
          if (r.is_zero()) continue;
          if (!(k == i && l == j) && !pair_preceq(i, j, k, l)) ++rep.support_violations;
          if (wt(i) + wt(j) != wt(k) + wt(l)) ++rep.weight_violations;
        }
  return rep;
}

nlohmann::json CoeffReport::to_json() const {
  return {{"entries", entries},
          {"mismatches", mismatches},
          {"first_mismatches", first_mismatches},
          {"literal_sign_mismatches", literal_sign_mismatches},
          {"support_violations", support_violations},
          {"weight_violations", weight_violations}};
}

YbeReport ybe_check() {
  YbeReport rep;
  const SparseMat& r = rhat();
  const SparseMat id = SparseMat::identity(16);
  const SparseMat r12 = r.kron(id);
  const SparseMat r23 = id.kron(r);
  const SparseMat lhs = r12 * r23 * r12;
  const SparseMat rhs = r23 * r12 * r23;
  rep.holds = lhs == rhs;
  rep.nnz = lhs.nnz();

  // At q = 1 the correction terms vanish and B is the identity.
  const std::uint64_t p = 4611686018427387847ULL;
  bool flip_ok = true;
  for (int row = 0; row < 256; ++row) {
    for (const auto& [c, v] : r.row(row)) {
      const std::uint64_t x = v.eval_mod(1, p);
      const std::uint64_t want = flip(c) == row ? 1 : 0;
      if (x != want) flip_ok = false;
    }
    if (r.row(row).count(flip(row)) == 0) flip_ok = false;
  }
  rep.classical_limit_is_flip = flip_ok;
  return rep;
}

nlohmann::json YbeReport::to_json() const {
  return {{"holds", holds}, {"nnz", nnz}, {"classical_limit_is_flip", classical_limit_is_flip}};
}

SparseMat coproduct_action(char g, int i) {
  const SparseMat id = SparseMat::identity(16);
  const SparseMat e = chevalley_action(AdGen::E, i);
  const SparseMat f = chevalley_action(AdGen::F, i);
  const SparseMat k = chevalley_action(AdGen::K, i);
  const SparseMat ki = chevalley_action(AdGen::Kinv, i);
  switch (g) {
    case 'E': return ki.kron(e) + e.kron(id);
    case 'F': return id.kron(f) + f.kron(k);
    case 'K': return k.kron(k);
    case 'k': return ki.kron(ki);
    default: break;
  }
  throw std::invalid_argument("coproduct_action: unknown generator");
}

EquivarianceReport equivariance_check() {
  EquivarianceReport rep;
  const SparseMat& r = rhat();
  for (int i = 2; i <= 6; ++i) {
    for (char g : {'E', 'F', 'K', 'k'}) {
      ++rep.checked;
      const SparseMat d = coproduct_action(g, i);
      if (d * r != r * d) rep.failures.push_back(std::string(g == 'k' ? "K^-1" : std::string(1, g)) + std::to_string(i));
    }
  }
  const SparseMat inv = build_rhat_inverse();
  const SparseMat id = SparseMat::identity(256);
  rep.inverse_ok = r * inv == id && inv * r == id;
  return rep;
}

nlohmann::json EquivarianceReport::to_json() const {
  return {{"checked", checked}, {"failures", failures}, {"inverse_ok", inverse_ok}};
}

EigenReport eigen_split() {
  EigenReport rep;
  const SparseMat& r = rhat();
  const SparseMat shifted = r + SparseMat::identity(256);
  const SparseMat cols = shifted.transpose();
  auto in_kernel = [&](const SparseMat::Vec& v) { return shifted.apply(v).empty(); };

  std::map<Weight, std::vector<int>> blocks;
  for (int p = 0; p < 256; ++p) blocks[wt(pair_first(p)) + wt(pair_second(p))].push_back(p);
  rep.blocks = static_cast<int>(blocks.size());
  for (const auto& [w, idx] : blocks) {
    ExactSpan<int> span;
    for (int p : idx) span.insert(cols.row(p));
    rep.kernel_dim += static_cast<int>(idx.size() - span.rank());
  }

  const int a = pair_index(SubsetB::parse("12"), SubsetB());
  const int b = pair_index(SubsetB(), SubsetB::parse("12"));
  const SparseMat::Vec gen = {{a, LaurentPoly(1)}, {b, LaurentPoly::monomial(-1, 1)}};
  rep.generator_in_kernel = in_kernel(gen);

  std::vector<SparseMat> ops;
  for (int i = 2; i <= 6; ++i) {
    ops.push_back(coproduct_action('E', i));
    ops.push_back(coproduct_action('F', i));
  }
  ExactSpan<int> module;
  std::deque<SparseMat::Vec> queue;
  rep.submodule_in_kernel = true;
  auto offer = [&](const SparseMat::Vec& v) {
    if (v.empty() || !module.insert(v)) return;
    if (!in_kernel(v)) rep.submodule_in_kernel = false;
    queue.push_back(v);
  };
  offer(gen);
  while (!queue.empty()) {
    const SparseMat::Vec v = queue.front();
    queue.pop_front();
    for (const auto& op : ops) offer(op.apply(v));
  }
  rep.submodule_dim = static_cast<int>(module.rank());

  // Quadratic relations Y_a Y_b - (rule) under Y_I -> (-q)^{ht(e)-ht(I)} u_I.
  const auto& w = AlgebraPresentation::w();
  const int top = height_B(SubsetB());
  auto scale = [&](char g) { return LaurentPoly::neg_q_pow(top - height_B(w.subset(static_cast<unsigned char>(g)))); };
  ExactSpan<int> rels;
  rep.relations_in_kernel = true;
  for (int x = 0; x < 16; ++x)
    for (int y = x + 1; y < 16; ++y) {
      NCPoly rel = NCPoly::word(Word{static_cast<char>(x), static_cast<char>(y)}) - w.rule(x, y);
      SparseMat::Vec v;
      for (const auto& [word, c] : rel.terms()) {
        const int p = pair_index(w.subset(static_cast<unsigned char>(word[0])), w.subset(static_cast<unsigned char>(word[1])));
        auto [it, fresh] = v.try_emplace(p);
        it->second.add_product(c, scale(word[0]) * scale(word[1]));
        if (it->second.is_zero()) v.erase(it);
      }
      if (!in_kernel(v)) rep.relations_in_kernel = false;
      rels.insert(v);
    }
  rep.relation_rank = static_cast<int>(rels.rank());
  return rep;
}

nlohmann::json EigenReport::to_json() const {
  return {{"kernel_dim", kernel_dim},
          {"weight_blocks", blocks},
          {"generator_in_kernel", generator_in_kernel},
          {"submodule_dim", submodule_dim},
          {"submodule_in_kernel", submodule_in_kernel},
          {"relation_rank", relation_rank},
          {"relations_in_kernel", relations_in_kernel}};
}

nlohmann::json rhat_json() {
  nlohmann::json basis = nlohmann::json::array();
  for (int p = 0; p < 256; ++p) basis.push_back({pair_first(p).label(), pair_second(p).label()});
  nlohmann::json entries = nlohmann::json::array();
  const SparseMat& r = rhat();
  for (int row = 0; row < 256; ++row)
    for (const auto& [c, v] : r.row(row)) entries.push_back({{"r", row}, {"c", c}, {"value", v.to_string()}});
  return {{"basis", basis}, {"entries", entries}};
}

std::string rhat_csv() {
  std::ostringstream os;
  os << "r,c,row_pair,col_pair,value\n";
  const SparseMat& r = rhat();
  for (int row = 0; row < 256; ++row)
    for (const auto& [c, v] : r.row(row))
      os << row << ',' << c << ',' << pair_label(row) << ',' << pair_label(c) << ",\"" << v.to_string() << "\"\n";
  return os.str();
}

}  // namespace qsc
