#include "qsc/sparse_mat.hpp"

#include "qsc/rootdata.hpp"

#include <stdexcept>

namespace qsc {

SparseMat SparseMat::identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.rows_[static_cast<std::size_t>(i)].emplace(i, LaurentPoly(1));
  return m;
}

SparseMat SparseMat::diagonal(const std::vector<LaurentPoly>& d) {
  const int n = static_cast<int>(d.size());
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
  return m;
}

std::size_t SparseMat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

LaurentPoly SparseMat::get(int r, int c) const {
  const auto& row = rows_[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? LaurentPoly() : it->second;
}

void SparseMat::set(int r, int c, const LaurentPoly& v) {
  auto& row = rows_[static_cast<std::size_t>(r)];
  if (v.is_zero()) row.erase(c);
  else row[c] = v;
}

void SparseMat::add_to(int r, int c, const LaurentPoly& v) {
  if (v.is_zero()) return;
  auto& row = rows_[static_cast<std::size_t>(r)];
  auto [it, fresh] = row.try_emplace(c, v);
  if (fresh) return;
  it->second += v;
  if (it->second.is_zero()) row.erase(it);
}

SparseMat SparseMat::scaled(const LaurentPoly& c) const {
  SparseMat m(rows(), cols());
  if (c.is_zero()) return m;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [k, v] : rows_[r]) m.rows_[r].emplace_hint(m.rows_[r].end(), k, v * c);
  return m;
}

SparseMat SparseMat::transpose() const {
  SparseMat m(cols(), rows());
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, v] : row(r)) m.rows_[static_cast<std::size_t>(c)].emplace(r, v);
  return m;
}

SparseMat SparseMat::kron(const SparseMat& b) const {
  SparseMat m(rows() * b.rows(), cols() * b.cols());
  for (int i = 0; i < rows(); ++i)
    for (const auto& [j, x] : row(i))
      for (int k = 0; k < b.rows(); ++k)
        for (const auto& [l, y] : b.row(k)) m.set(i * b.rows() + k, j * b.cols() + l, x * y);
  return m;
}

SparseMat::Vec SparseMat::apply(const Vec& x) const {
  Vec y;
  for (int r = 0; r < rows(); ++r) {
    LaurentPoly acc;
    for (const auto& [c, a] : row(r)) {
      auto it = x.find(c);
      if (it != x.end()) acc.add_product(a, it->second);
    }
    if (!acc.is_zero()) y.emplace(r, std::move(acc));
  }
  return y;
}

SparseMat operator+(const SparseMat& a, const SparseMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("SparseMat: shape mismatch");
  SparseMat m = a;
  for (int r = 0; r < b.rows(); ++r)
    for (const auto& [c, v] : b.row(r)) m.add_to(r, c, v);
  return m;
}

SparseMat operator-(const SparseMat& a, const SparseMat& b) { return a + b.scaled(-1); }

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("SparseMat: shape mismatch");
  SparseMat m(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    auto& out = m.rows_[static_cast<std::size_t>(r)];
    for (const auto& [k, x] : a.row(r)) {
      for (const auto& [c, y] : b.row(k)) {
        auto [it, fresh] = out.try_emplace(c);
        it->second.add_product(x, y);
      }
    }
    for (auto it = out.begin(); it != out.end();) {
      if (it->second.is_zero()) it = out.erase(it);
      else ++it;
    }
  }
  return m;
}

std::vector<std::vector<std::uint64_t>> SparseMat::eval_mod(std::uint64_t q0, std::uint64_t p) const {
  std::vector<std::vector<std::uint64_t>> d(rows_.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(ncols_), 0));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) d[r][static_cast<std::size_t>(c)] = v.eval_mod(q0, p);
  return d;
}

nlohmann::json SparseMat::to_json(const std::function<std::string(int)>& label) const {
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, v] : row(r)) entries.push_back({{"r", label(r)}, {"c", label(c)}, {"value", v.to_json()}});
  return {{"rows", rows()}, {"cols", cols()}, {"entries", entries}};
}

RelationReport check_uq_relations(const ChevalleyOps& op, int dim) {
  RelationReport rep;
  const auto& g = gram_matrix();
  const SparseMat id = SparseMat::identity(dim);
  std::map<std::pair<char, int>, SparseMat> m;
  for (int i = 2; i <= 6; ++i)
    for (char c : {'E', 'F', 'K', 'k'}) m[{c, i}] = op(c, i);
  auto check = [&](bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(what);
  };
  const LaurentPoly qh = qhat();
  const LaurentPoly q2 = qint(2);
  for (int i = 2; i <= 6; ++i) {
    const auto& E = m[{'E', i}];
    const auto& K = m[{'K', i}];
    const auto& Ki = m[{'k', i}];
    const std::string s = std::to_string(i);
    check(K * Ki == id && Ki * K == id, "K" + s + " K" + s + "^-1 = 1");
    for (int j = 2; j <= 6; ++j) {
      const std::string t = std::to_string(j);
      const int a = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto& Ej = m[{'E', j}];
      const auto& Fj = m[{'F', j}];
      check(K * m[{'K', j}] == m[{'K', j}] * K, "K" + s + " K" + t + " commute");
      check(K * Ej * Ki == Ej.scaled(LaurentPoly::q_pow(a)), "K" + s + " E" + t + " K" + s + "^-1");
      check(K * Fj * Ki == Fj.scaled(LaurentPoly::q_pow(-a)), "K" + s + " F" + t + " K" + s + "^-1");
      const SparseMat comm = (E * Fj - Fj * E).scaled(qh);
      check(i == j ? comm == K - Ki : comm.is_zero(), "[E" + s + ", F" + t + "]");
      if (i == j) continue;
      for (char c : {'E', 'F'}) {
        const auto& X = m[{c, i}];
        const auto& Y = m[{c, j}];
        bool ok;
        if (a == 0) ok = X * Y == Y * X;
        else ok = (X * X * Y - (X * Y * X).scaled(q2) + Y * X * X).is_zero();
        check(ok, std::string("Serre ") + c + s + c + t);
      }
    }
  }
  return rep;
}

}  // namespace qsc
