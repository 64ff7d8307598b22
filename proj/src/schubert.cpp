#include "qsc/schubert.hpp"

#include "qsc/expr_parse.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace qsc {

// NCPoly

NCPoly::NCPoly(const LaurentPoly& c) {
  if (!c.is_zero()) t_.emplace(Word(), c);
}

NCPoly NCPoly::word(Word w, const LaurentPoly& c) {
  NCPoly p;
  if (!c.is_zero()) p.t_.emplace(std::move(w), c);
  return p;
}

NCPoly NCPoly::generator(int id, const LaurentPoly& c) { return word(Word(1, static_cast<char>(id)), c); }

LaurentPoly NCPoly::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? LaurentPoly() : it->second;
}

void NCPoly::add_term(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

void NCPoly::add_scaled(const NCPoly& o, const LaurentPoly& c) {
  if (c.is_zero()) return;
  const bool one = c.is_one();
  for (const auto& [w, x] : o.t_) {
    auto [it, fresh] = t_.try_emplace(w);
    if (one) it->second += x;
    else it->second.add_product(x, c);
    if (it->second.is_zero()) t_.erase(it);
  }
}

NCPoly NCPoly::scaled(const LaurentPoly& c) const {
  NCPoly out;
  if (c.is_zero()) return out;
  for (const auto& [w, x] : t_) out.t_.emplace_hint(out.t_.end(), w, x * c);
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  add_scaled(o, 1);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  add_scaled(o, -1);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [u, x] : a.t_)
    for (const auto& [v, y] : b.t_) out.add_term(u + v, x * y);
  return out;
}

// AlgebraPresentation

const AlgebraPresentation& AlgebraPresentation::w() {
  static const AlgebraPresentation p(AlgebraId::w);
  return p;
}

const AlgebraPresentation& AlgebraPresentation::what() {
  static const AlgebraPresentation p(AlgebraId::what);
  return p;
}

const AlgebraPresentation& AlgebraPresentation::get(AlgebraId id) { return id == AlgebraId::w ? w() : what(); }

AlgebraPresentation::AlgebraPresentation(AlgebraId id) : id_(id), rules_(32 * 32) {
  std::vector<SubsetB> order(subsets_by_lex().begin(), subsets_by_lex().end());
  std::stable_sort(order.begin(), order.end(), [](SubsetB a, SubsetB b) {
    if (height_B(a) != height_B(b)) return height_B(a) < height_B(b);
    return lex_code(a) < lex_code(b);
  });
  rank_of_mask_.fill(-1);
  for (std::size_t r = 0; r < 16; ++r) {
    by_rank_[r] = order[r];
    rank_of_mask_[order[r].mask()] = static_cast<int>(r);
  }

  const LaurentPoly qh = qhat();
  auto pair_word = [](int x, int y) { return Word{static_cast<char>(x), static_cast<char>(y)}; };
  const int n = num_generators();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const SubsetB I = subset(a), J = subset(b);
      const int hij = ht_pair(I, J);
      NCPoly r = NCPoly::word(pair_word(b, a), LaurentPoly::q_pow(inner(wt(I), wt(J))));
      if (is_delta(a) == is_delta(b)) {
        const bool d = is_delta(a);
        for (const auto& m : class_of(I, J)) {
          if (!pair_precedes(I, J, m.first, m.second) || lex_code(m.second) > lex_code(m.first)) continue;
          r.add_term(pair_word(gen_id(m.first, d), gen_id(m.second, d)),
                     qh * LaurentPoly::neg_q_pow(m.height - hij - 1));
        }
      } else {
        // a is Z_I, b is Z_{J+delta}: the mixed relation, for every pair.
        for (const auto& m : class_of(I, J)) {
          if (!pair_precedes(I, J, m.first, m.second)) continue;
          r.add_term(pair_word(gen_id(m.first, false), gen_id(m.second, true)),
                     qh * LaurentPoly::neg_q_pow(m.height - hij - 1));
        }
        if (epsilon(I, J)) r.add_term(pair_word(gen_id(J, false), gen_id(I, true)), qh * LaurentPoly::q_pow(-1));
      }
      rules_[static_cast<std::size_t>(a * 32 + b)] = std::move(r);
    }
  }
}

SubsetB AlgebraPresentation::subset(int g) const { return by_rank_[static_cast<std::size_t>(g % 16)]; }

int AlgebraPresentation::gen_id(SubsetB s, bool delta) const {
  if (delta && id_ == AlgebraId::w) throw std::invalid_argument("no delta generators in U_q^+[w]");
  return rank_of_mask_[s.mask()] + (delta ? 16 : 0);
}

std::string AlgebraPresentation::label(int g) const {
  std::string name = id_ == AlgebraId::w ? "Y" : (is_delta(g) ? "Zd" : "Z");
  return name + "[" + subset(g).label() + "]";
}

Weight AlgebraPresentation::degree(int g) const {
  Weight d = wt(subset(g));
  if (is_delta(g)) d += delta();
  return d;
}

int AlgebraPresentation::gen_with_degree(const Weight& d) const {
  for (int g = 0; g < num_generators(); ++g)
    if (degree(g) == d) return g;
  return -1;
}

const NCPoly& AlgebraPresentation::rule(int a, int b) const {
  if (!out_of_order(a, b) || b >= num_generators()) throw std::out_of_range("no rule for an ordered pair");
  return rules_[static_cast<std::size_t>(a * 32 + b)];
}

std::size_t AlgebraPresentation::num_rules() const {
  std::size_t n = 0;
  for (const auto& r : rules_)
    if (!r.is_zero()) ++n;
  return n;
}

int AlgebraPresentation::min_height_gain() const {
  int best = INT_MAX;
  const int n = num_generators();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int h = ht_pair(subset(a), subset(b));
      for (const auto& [w, c] : rule(a, b).terms()) {
        const int x = static_cast<unsigned char>(w[0]), y = static_cast<unsigned char>(w[1]);
        if (x == b && y == a) continue;  // the swapped leading term
        best = std::min(best, ht_pair(subset(x), subset(y)) - h);
      }
    }
  }
  return best;
}

bool AlgebraPresentation::is_normal(const Word& w) const {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (out_of_order(w[i - 1], w[i])) return false;
  return true;
}

Weight AlgebraPresentation::degree(const Word& w) const {
  Weight d;
  for (char g : w) d += degree(static_cast<int>(g));
  return d;
}

Weight AlgebraPresentation::q_degree(const NCPoly& x) const {
  if (x.is_zero()) throw std::invalid_argument("q_degree of zero");
  const Weight d = degree(x.terms().begin()->first);
  for (const auto& [w, c] : x.terms())
    if (degree(w) != d) throw std::invalid_argument("q_degree: element is not homogeneous");
  return d;
}

namespace {

std::string coeff_prefix(const LaurentPoly& c, bool first) {
  std::string s = c.to_string();
  if (!c.is_monomial()) return (first ? "(" : "+(") + s + ")";
  if (s[0] != '-' && !first) s = "+" + s;
  return s;
}

}  // namespace

std::string AlgebraPresentation::to_string(const NCPoly& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    std::string pre = coeff_prefix(c, first);
    std::string body;
    for (char g : w) {
      if (!body.empty()) body += "*";
      body += label(g);
    }
    if (body.empty()) {
      out += pre;
    } else if (pre == "1" || pre == "+1") {
      out += (first ? "" : "+") + body;
    } else if (pre == "-1") {
      out += "-" + body;
    } else {
      out += pre + "*" + body;
    }
    first = false;
  }
  return out;
}

NCPoly AlgebraPresentation::parse(std::string_view text) const {
  ExprParser<NCPoly> p(text, [this](std::string_view name, std::string_view label) {
    bool delta = false;
    if (id_ == AlgebraId::w) {
      if (name != "Y") throw ParseError("unknown generator '" + std::string(name) + "' for algebra w");
    } else if (name == "Zd") {
      delta = true;
    } else if (name != "Z") {
      throw ParseError("unknown generator '" + std::string(name) + "' for algebra what");
    }
    return NCPoly::generator(gen_id(SubsetB::parse(label), delta));
  });
  return p.parse();
}

nlohmann::json AlgebraPresentation::to_json(const NCPoly& x) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : x.terms()) {
    nlohmann::json word = nlohmann::json::array();
    for (char g : w) word.push_back(label(g));
    out.push_back({{"coeff", c.to_json()}, {"word", word}});
  }
  return out;
}

NCPoly AlgebraPresentation::from_json(const nlohmann::json& j) const {
  NCPoly out;
  for (const auto& t : j) {
    NCPoly w(LaurentPoly::from_json(t.at("coeff")));
    for (const auto& l : t.at("word")) w = w * parse(l.get<std::string>());
    out += w;
  }
  return out;
}

// Rewriter

const NCPoly& Rewriter::insert(char a, const Word& u) {
  Word key;
  key.reserve(u.size() + 1);
  key += a;
  key += u;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  NCPoly out;
  if (u.empty() || !AlgebraPresentation::out_of_order(a, u[0])) {
    out = NCPoly::word(key);
  } else {
    if (++applications_ > kMaxApplications)
      throw std::runtime_error("normal_form: rule application limit exceeded");
    const Word rest = u.substr(1);
    for (const auto& [w, c] : pres_->rule(a, u[0]).terms()) {
      const NCPoly& tail = insert(w[1], rest);
      for (const auto& [v, x] : tail.terms()) out.add_scaled(insert(w[0], v), c * x);
    }
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

NCPoly Rewriter::left_multiply(char a, const NCPoly& p) {
  NCPoly out;
  for (const auto& [v, x] : p.terms()) out.add_scaled(insert(a, v), x);
  return out;
}

NCPoly Rewriter::normal_form(const Word& w) {
  applications_ = 0;
  std::size_t k = w.size();
  while (k > 1 && !AlgebraPresentation::out_of_order(w[k - 2], w[k - 1])) --k;
  if (k > 0) --k;
  NCPoly acc = NCPoly::word(w.substr(k));
  while (k-- > 0) acc = left_multiply(w[k], acc);
  return acc;
}

NCPoly Rewriter::normal_form(const NCPoly& x) {
  NCPoly out;
  for (const auto& [w, c] : x.terms()) out.add_scaled(normal_form(w), c);
  return out;
}

NCPoly Rewriter::multiply(const NCPoly& x, const NCPoly& y) {
  NCPoly ny = normal_form(y);
  NCPoly out;
  for (const auto& [u, c] : x.terms()) {
    applications_ = 0;
    NCPoly acc = ny;
    for (std::size_t k = u.size(); k-- > 0;) acc = left_multiply(u[k], acc);
    out.add_scaled(acc, c);
  }
  return out;
}

NCPoly Rewriter::multiply_twisted(const NCPoly& x, const NCPoly& y) {
  NCPoly out;
  for (const auto& [u, c] : x.terms()) {
    const Weight du = pres_->degree(u);
    for (const auto& [v, d] : y.terms()) {
      const int e = twist_exponent(du, pres_->degree(v));
      out.add_scaled(normal_form(u + v), c * d * LaurentPoly::q_pow(e));
    }
  }
  return out;
}

int twist_exponent(const Weight& x, const Weight& y) { return x[0] * y[1]; }

int untwist_exponent(const AlgebraPresentation& pres, const Word& w) {
  int e = 0;
  int a0 = 0;  // alpha_0 coefficient of the prefix
  for (char g : w) {
    const Weight d = pres.degree(static_cast<int>(g));
    e -= a0 * d[1];
    a0 += d[0];
  }
  return e;
}

std::vector<Word> normal_words(const AlgebraPresentation& pres, int d) {
  std::vector<Word> out;
  Word cur;
  const int n = pres.num_generators();
  // Non-increasing sequences, generated so the output is sorted.
  auto rec = [&](auto&& self, int max_id) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int g = 0; g <= max_id; ++g) {
      cur.push_back(static_cast<char>(g));
      self(self, g);
      cur.pop_back();
    }
  };
  rec(rec, n - 1);
  return out;
}

Integer hilbert_dim(const AlgebraPresentation& pres, int d) {
  // C(n + d - 1, d)
  Integer r = 1;
  const int n = pres.num_generators();
  for (int i = 1; i <= d; ++i) r = r * (n + i - 1) / i;
  return r;
}

ConfluenceReport confluence_check(Rewriter& rw, int d) {
  const auto& pres = rw.presentation();
  ConfluenceReport rep;
  const int n = pres.num_generators();
  // Every length-3 word is reduced along each available first rewrite; all
  // routes must agree with the memoized normal form.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        ++rep.overlaps;
        const char ca = static_cast<char>(a), cb = static_cast<char>(b), cc = static_cast<char>(c);
        const NCPoly direct = rw.normal_form(Word{ca, cb, cc});
        bool ok = true;
        if (AlgebraPresentation::out_of_order(a, b)) {
          NCPoly left;
          for (const auto& [w, x] : pres.rule(a, b).terms()) left.add_scaled(rw.normal_form(w + cc), x);
          ok = ok && left == direct;
        }
        if (AlgebraPresentation::out_of_order(b, c)) {
          NCPoly right;
          for (const auto& [w, x] : pres.rule(b, c).terms()) right.add_scaled(rw.normal_form(ca + w), x);
          ok = ok && right == direct;
        }
        if (!ok) {
          ++rep.failures;
          if (rep.failing.size() < 10) rep.failing.push_back(pres.label(a) + pres.label(b) + pres.label(c));
        }
      }
    }
  }
  rep.normal_words = normal_words(pres, d).size();
  rep.expected_words = hilbert_dim(pres, d);
  return rep;
}

}  // namespace qsc
