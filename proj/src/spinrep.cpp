#include "qsc/spinrep.hpp"

#include "qsc/linalg.hpp"

#include <bit>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>

namespace qsc {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

// c(i, j, I) = sign(i - j)(i + j - 3 - 2|I|).
int c_exp(int i, int j, SubsetB s) { return sgn(i - j) * (i + j - 3 - 2 * s.size()); }

void check_pair(int i, int j) {
  if (i < 1 || i > 5 || j < 1 || j > 5 || i == j) throw std::invalid_argument("rho: need i != j in 1..5");
}

std::uint8_t bit(int i) { return static_cast<std::uint8_t>(1U << (i - 1)); }

ExtElement u(std::uint8_t mask) { return ExtElement::monomial(mask); }
ExtElement v(int i) { return ExtElement::monomial(bit(i)); }

// The single term of x = c u_K, with K even.
std::pair<SubsetB, LaurentPoly> single(const ExtElement& x) {
  if (x.terms().size() != 1) throw std::logic_error("expected a monomial");
  const auto& [mask, c] = *x.terms().begin();
  return {SubsetB::from_mask(mask), c};
}

SparseMat from_action(const std::function<std::optional<std::pair<SubsetB, LaurentPoly>>(SubsetB)>& f) {
  SparseMat m(16, 16);
  for (const auto& s : subsets_by_lex()) {
    auto r = f(s);
    if (r) m.set(lex_pos(r->first), lex_pos(s), r->second);
  }
  return m;
}

}  // namespace

ExtElement ExtElement::monomial(std::uint8_t mask, const LaurentPoly& c) {
  ExtElement e;
  e.add_term(mask, c);
  return e;
}

ExtElement ExtElement::word(const std::vector<int>& w) {
  ExtElement e = monomial(0);
  for (int i : w) {
    if (i < 1 || i > 5) throw std::invalid_argument("exterior index out of range");
    e = ext_mul(e, monomial(bit(i)));
  }
  return e;
}

LaurentPoly ExtElement::coeff(std::uint8_t mask) const {
  auto it = t_.find(mask);
  return it == t_.end() ? LaurentPoly() : it->second;
}

void ExtElement::add_term(std::uint8_t mask, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(mask, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

std::string ExtElement::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [mask, c] : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*u[";
    std::string idx;
    for (int i = 1; i <= 5; ++i)
      if (mask & bit(i)) idx += static_cast<char>('0' + i);
    s += (idx.empty() ? "e" : idx) + "]";
  }
  return s;
}

ExtElement ext_mul(const ExtElement& a, const ExtElement& b) {
  ExtElement out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      // Sorting the concatenation takes one swap per pair (i in a, j in b)
      // with i > j, each contributing -q.
      int swaps = 0;
      for (int j = 1; j <= 5; ++j)
        if (mb & bit(j)) swaps += std::popcount(static_cast<unsigned>(ma >> j));
      out.add_term(static_cast<std::uint8_t>(ma | mb), (ca * cb) * LaurentPoly::neg_q_pow(swaps));
    }
  }
  return out;
}

SparseMat rho_E(int i, int j) {
  check_pair(i, j);
  return from_action([&](SubsetB k) -> std::optional<std::pair<SubsetB, LaurentPoly>> {
    if (!k.contains(j)) return std::nullopt;
    const auto rest = static_cast<std::uint8_t>(k.mask() ^ bit(j));  // odd
    if (rest & bit(i)) return std::nullopt;
    // u_I v_j = cf u_K, and rho(E_ij)(u_I v_j) = (-q)^{i-j-sign(i-j)} u_I v_i.
    const auto [kk, cf] = single(ext_mul(u(rest), v(j)));
    const auto [target, cf2] = single(ext_mul(u(rest), v(i)));
    return std::make_pair(target, LaurentPoly::neg_q_pow(i - j - sgn(i - j)) * cf2 * cf.unit_inverse());
  });
}

SparseMat rho_Eprime(int i, int j) {
  check_pair(i, j);
  return from_action([&](SubsetB k) -> std::optional<std::pair<SubsetB, LaurentPoly>> {
    if (i < j) {
      // rho(E'_ij)(u_I v_i v_j) = (-q)^{c(i,j,I)} u_I.
      if (!k.contains(i) || !k.contains(j)) return std::nullopt;
      const SubsetB rest = SubsetB::from_mask(static_cast<std::uint8_t>(k.mask() ^ bit(i) ^ bit(j)));
      const auto [kk, cf] = single(ext_mul(ext_mul(u(rest.mask()), v(i)), v(j)));
      return std::make_pair(rest, LaurentPoly::neg_q_pow(c_exp(i, j, rest)) * cf.unit_inverse());
    }
    // rho(E'_ij)(u_I) = (-q)^{c(i,j,I)} u_I v_j v_i for i > j, i, j not in I.
    if (k.contains(i) || k.contains(j)) return std::nullopt;
    const auto [target, cf] = single(ext_mul(ext_mul(u(k.mask()), v(j)), v(i)));
    return std::make_pair(target, LaurentPoly::neg_q_pow(c_exp(i, j, k)) * cf);
  });
}

SparseMat rho_K(int i, bool inverse) {
  if (i < 2 || i > 6) throw std::invalid_argument("rho_K: node index must lie in {2,...,6}");
  return from_action([&](SubsetB k) {
    const int e = inner(simple_root(i), wt(k));
    return std::optional(std::make_pair(k, LaurentPoly::q_pow(inverse ? -e : e)));
  });
}

SparseMat chevalley_action(AdGen g, int i) {
  if (i < 2 || i > 6) throw std::invalid_argument("chevalley_action: node index must lie in {2,...,6}");
  switch (g) {
    case AdGen::E: return i == 2 ? rho_Eprime(1, 2) : rho_E(i - 2, i - 1);
    case AdGen::F: return i == 2 ? rho_Eprime(2, 1) : rho_E(i - 1, i - 2);
    case AdGen::K: return rho_K(i);
    case AdGen::Kinv: return rho_K(i, true);
  }
  throw std::invalid_argument("chevalley_action: unknown generator");
}

RelationReport spin_relations() {
  return check_uq_relations(
      [](char g, int i) {
        const AdGen a = g == 'E' ? AdGen::E : g == 'F' ? AdGen::F : g == 'K' ? AdGen::K : AdGen::Kinv;
        return chevalley_action(a, i);
      },
      16);
}

SpinCheckReport spin_irreducible() {
  SpinCheckReport rep;
  const int top = lex_pos(SubsetB());
  for (int i = 2; i <= 6; ++i) {
    ++rep.checked;
    const SparseMat e = chevalley_action(AdGen::E, i);
    for (int r = 0; r < 16; ++r)
      if (!e.get(r, top).is_zero()) rep.failures.push_back("E" + std::to_string(i) + " u[e] != 0");
  }
  using Vec = SparseMat::Vec;
  ExactSpan<int> span;
  std::deque<Vec> queue;
  std::array<SparseMat, 7> f;
  for (int i = 2; i <= 6; ++i) f[static_cast<std::size_t>(i)] = chevalley_action(AdGen::F, i);
  auto offer = [&](const Vec& x) {
    if (!x.empty() && span.insert(x)) queue.push_back(x);
  };
  offer(Vec{{top, LaurentPoly(1)}});
  while (!queue.empty()) {
    const Vec x = queue.front();
    queue.pop_front();
    for (int i = 2; i <= 6; ++i) {
      const Vec y = f[static_cast<std::size_t>(i)].apply(x);
      offer(y);
    }
  }
  ++rep.checked;
  if (span.rank() != 16) rep.failures.push_back("F-orbit of u[e] spans " + std::to_string(span.rank()) + " dimensions");
  return rep;
}

SparseMat phi_matrix() {
  const auto& w = AlgebraPresentation::w();
  const int top = height_B(SubsetB());
  SparseMat p(16, 16);
  for (const auto& s : subsets_by_lex()) p.set(lex_pos(s), w.gen_id(s), LaurentPoly::neg_q_pow(top - height_B(s)));
  return p;
}

SpinCheckReport phi_check() {
  SpinCheckReport rep;
  const auto& w = AlgebraPresentation::w();
  const SparseMat p = phi_matrix();
  static const std::array<std::pair<AdGen, const char*>, 4> gens = {
      {{AdGen::E, "E"}, {AdGen::F, "F"}, {AdGen::K, "K"}, {AdGen::Kinv, "K^-1"}}};
  for (int i = 2; i <= 6; ++i) {
    for (const auto& [g, name] : gens) {
      ++rep.checked;
      const SparseMat lhs = p * ad_matrix(w, g, i);
      const SparseMat rhs = chevalley_action(g, i) * p;
      if (lhs != rhs) rep.failures.push_back(std::string(name) + std::to_string(i));
    }
  }
  return rep;
}

std::string subset_label(int lex_index) { return subsets_by_lex()[static_cast<std::size_t>(lex_index)].label(); }

}  // namespace qsc
