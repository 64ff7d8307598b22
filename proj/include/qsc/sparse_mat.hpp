#pragma once

#include "qsc/laurent.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qsc {

// Sparse matrix over Z[q, q^-1], stored by rows. No explicit zeros.
class SparseMat {
 public:
  using Row = std::map<int, LaurentPoly>;
  using Vec = std::map<int, LaurentPoly>;  // sparse column vector

  SparseMat() = default;
  SparseMat(int rows, int cols) : ncols_(cols), rows_(static_cast<std::size_t>(rows)) {}
  static SparseMat identity(int n);
  static SparseMat diagonal(const std::vector<LaurentPoly>& d);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return ncols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  LaurentPoly get(int r, int c) const;
  void set(int r, int c, const LaurentPoly& v);
  void add_to(int r, int c, const LaurentPoly& v);
  const Row& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }

  SparseMat scaled(const LaurentPoly& c) const;
  SparseMat transpose() const;
  // Kronecker product: (A (x) B)[(i, k), (j, l)] = A[i][j] B[k][l], with the
  // pair (i, k) flattened as i * B.rows() + k.
  SparseMat kron(const SparseMat& b) const;
  Vec apply(const Vec& x) const;

  friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator-(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
  friend bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const SparseMat& a, const SparseMat& b) { return !(a == b); }

  // Dense residues at q = q0 mod p, row-major.
  std::vector<std::vector<std::uint64_t>> eval_mod(std::uint64_t q0, std::uint64_t p) const;

  // {rows, cols, entries: [{r, c, value}]}; labels name rows and columns.
  nlohmann::json to_json(const std::function<std::string(int)>& label) const;

 private:
  int ncols_ = 0;
  std::vector<Row> rows_;
};

// Operator family indexed by a Chevalley letter ('E', 'F', 'K', 'k' for
// K^-1) and a node i in {2, ..., 6}.
using ChevalleyOps = std::function<SparseMat(char g, int i)>;

struct RelationReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// Defining relations of U_q(so10) on the given operators: K K^-1 = 1,
// K_i E_j K_i^-1 = q^{a_ij} E_j (same for F with q^{-a_ij}), commuting K's,
// (q - q^-1)[E_i, F_j] = delta_ij (K_i - K_i^-1), and the quantum Serre
// relations for E and F.
RelationReport check_uq_relations(const ChevalleyOps& op, int dim);

}  // namespace qsc
