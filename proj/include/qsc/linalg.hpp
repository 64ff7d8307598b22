#pragma once

#include "qsc/laurent.hpp"
#include "qsc/modp.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace qsc {

// Divides v by the gcd of its entries and fixes the unit so that the first
// entry has lowest exponent 0 and a positive leading coefficient.
template <class Vec>
void make_primitive(Vec& v) {
  if (v.empty()) return;
  LaurentPoly g;
  for (const auto& [k, x] : v) {
    g = gcd(g, x);
    if (g.is_one()) break;
  }
  const LaurentPoly& first = v.begin()->second;
  LaurentPoly lead = g.is_one() ? first : *first.divide(g);
  const int shift = -lead.low();
  const bool flip = lead.lead() < 0;
  for (auto& [k, x] : v) {
    if (!g.is_one()) x = *x.divide(g);
    if (shift) x = x.shifted(shift);
    if (flip) x = -x;
  }
}

// Row space of sparse vectors over Z[q, q^-1], maintained fraction-free.
// Every stored row is primitive and has zeros at the pivots of all rows
// inserted before it.
template <class Key, class Compare = std::less<Key>>
class ExactSpan {
 public:
  using Vec = std::map<Key, LaurentPoly, Compare>;

  // Residual of v modulo the span (a nonzero multiple of v minus a
  // combination of rows). Zero iff v lies in the span.
  Vec reduce(Vec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto piv = index_.find(it->first);
      if (piv == index_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      eliminate(v, rows_[piv->second], key);
      it = v.upper_bound(key);
    }
    make_primitive(v);
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  bool insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return false;
    index_.emplace(r.begin()->first, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }

  // The reduced echelon basis scaled to primitive rows, sorted by pivot.
  // Equal spans give identical output.
  std::vector<Vec> canonical_basis() const {
    std::vector<Vec> done(rows_.size());
    for (std::size_t i = rows_.size(); i-- > 0;) {
      Vec v = rows_[i];
      for (auto it = std::next(v.begin()); it != v.end();) {
        auto piv = index_.find(it->first);
        if (piv == index_.end()) {
          ++it;
          continue;
        }
        const Key key = it->first;
        eliminate(v, done[piv->second], key);
        it = v.upper_bound(key);
      }
      make_primitive(v);
      done[i] = std::move(v);
    }
    std::vector<Vec> out;
    for (const auto& [k, idx] : index_) out.push_back(done[idx]);
    return out;
  }

 private:
  static void eliminate(Vec& v, const Vec& row, const Key& key) {
    const LaurentPoly& a = v.at(key);
    const LaurentPoly& b = row.at(key);
    LaurentPoly g = gcd(a, b);
    LaurentPoly fa = *a.divide(g);  // multiplier for row
    LaurentPoly fb = *b.divide(g);  // multiplier for v
    if (!fb.is_one())
      for (auto& [k, x] : v) x = x * fb;
    for (const auto& [k, x] : row) {
      auto [it, fresh] = v.try_emplace(k);
      it->second -= fa * x;
      if (it->second.is_zero()) v.erase(it);
    }
    if (!fb.is_one()) make_primitive(v);
  }

  std::vector<Vec> rows_;
  std::map<Key, std::size_t, Compare> index_;
};

// The same over the field of p elements; rows are normalized to pivot 1.
template <class Key, class Compare = std::less<Key>>
class ModSpan {
 public:
  using Vec = std::map<Key, std::uint64_t, Compare>;

  explicit ModSpan(std::uint64_t p) : p_(p) {}

  Vec reduce(Vec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto piv = index_.find(it->first);
      if (piv == index_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const std::uint64_t f = it->second;
      for (const auto& [k, x] : rows_[piv->second]) {
        auto [jt, fresh] = v.try_emplace(k, 0);
        jt->second = modp::sub(jt->second, modp::mul(f, x, p_), p_);
        if (jt->second == 0) v.erase(jt);
      }
      it = v.upper_bound(key);
    }
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  bool insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return false;
    const std::uint64_t s = modp::inv(r.begin()->second, p_);
    for (auto& [k, x] : r) x = modp::mul(x, s, p_);
    index_.emplace(r.begin()->first, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::uint64_t prime() const { return p_; }

 private:
  std::uint64_t p_;
  std::vector<Vec> rows_;
  std::map<Key, std::size_t, Compare> index_;
};

// Rank of a dense matrix over Z[q, q^-1] by fraction-free (Bareiss)
// elimination with exact division.
std::size_t bareiss_rank(std::vector<std::vector<LaurentPoly>> m);

// Rank of a dense matrix of residues mod p.
std::size_t mod_rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

}  // namespace qsc
