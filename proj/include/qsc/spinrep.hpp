#pragma once

#include "qsc/adjoint.hpp"
#include "qsc/laurent.hpp"
#include "qsc/rootdata.hpp"
#include "qsc/sparse_mat.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qsc {

// Element of the quantum exterior algebra on v_1..v_5: subsets (bit i-1 for
// v_i, any parity) with Laurent coefficients, monomials sorted ascending.
class ExtElement {
 public:
  using Terms = std::map<std::uint8_t, LaurentPoly>;

  ExtElement() = default;
  static ExtElement monomial(std::uint8_t mask, const LaurentPoly& c = 1);
  // v_{w1} ... v_{wk} brought to sorted form; zero on repeated indices.
  static ExtElement word(const std::vector<int>& w);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  LaurentPoly coeff(std::uint8_t mask) const;
  void add_term(std::uint8_t mask, const LaurentPoly& c);
  friend bool operator==(const ExtElement& a, const ExtElement& b) { return a.t_ == b.t_; }

  std::string to_string() const;

 private:
  Terms t_;
};

// Product in the exterior algebra, v_i v_j = -q v_j v_i for i > j, v_i^2 = 0.
ExtElement ext_mul(const ExtElement& a, const ExtElement& b);

// 16x16 matrices on S with basis u_I, I in B, indexed by lex_pos(I).
SparseMat rho_E(int i, int j);        // E_ij, i != j in 1..5
SparseMat rho_Eprime(int i, int j);   // E'_ij, i != j in 1..5
SparseMat rho_K(int i, bool inverse = false);  // K_i^{+-1}, i in I'

// Simple generators: E_2 = E'_12, F_2 = E'_21, E_i = E_{i-2,i-1},
// F_i = E_{i-1,i-2} for 3 <= i <= 6.
SparseMat chevalley_action(AdGen g, int i);

struct SpinCheckReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// U_q(so10) relations on S.
RelationReport spin_relations();
// u_e is killed by every E_i and its F-orbit spans all of S.
SpinCheckReport spin_irreducible();
// Y_I -> (-q)^{ht(e) - ht(I)} u_I intertwines the adjoint action on the
// generators of U[w] with the action on S.
SpinCheckReport phi_check();
// Matrix of that map, rows by lex_pos(I), columns by generator id.
SparseMat phi_matrix();

std::string subset_label(int lex_index);

}  // namespace qsc
