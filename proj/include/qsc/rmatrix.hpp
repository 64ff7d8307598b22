#pragma once

#include "qsc/rootdata.hpp"
#include "qsc/sparse_mat.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qsc {

// Basis of S (x) S: u_I (x) u_J at index 16 lex_pos(I) + lex_pos(J).
int pair_index(SubsetB i, SubsetB j);
SubsetB pair_first(int p);
SubsetB pair_second(int p);

// 1 + (q - q^-1) rho(X_ij) (x) rho(X_ji), X = E or E', for i < j.
SparseMat phi_factor(int i, int j, bool primed);
// tau o B o (rho (x) rho)(R), built from the twenty ordered factors.
SparseMat build_rhat();
// Cached copy of build_rhat().
const SparseMat& rhat();
// Inverse assembled from the inverse factors, B^-1 and tau.
SparseMat build_rhat_inverse();

// R_IJ^KL, defined by R(u_I (x) u_J) = sum R_IJ^KL u_L (x) u_K.
LaurentPoly r_coeff(SubsetB i, SubsetB j, SubsetB k, SubsetB l);
// Closed-form coefficient; with literal_sign the flip case of size-8 classes
// is read as q^(q - (-q)^{dh+1}) instead of q^(q + (-q)^{dh+1}).
LaurentPoly closed_form_coeff(SubsetB i, SubsetB j, SubsetB k, SubsetB l, bool literal_sign = false);

struct CoeffReport {
  int entries = 0;
  int mismatches = 0;
  std::vector<std::string> first_mismatches;
  int literal_sign_mismatches = 0;  // diagnostic only
  int support_violations = 0;       // nonzero entries with (I,J) not <= (K,L)
  int weight_violations = 0;        // nonzero entries changing total weight
  bool pass() const { return mismatches == 0 && support_violations == 0 && weight_violations == 0; }
  nlohmann::json to_json() const;
};
CoeffReport coeff_check();

struct YbeReport {
  bool holds = false;
  std::size_t nnz = 0;  // nonzeros of each side
  bool classical_limit_is_flip = false;  // R-hat at q = 1 is tau
  bool pass() const { return holds && classical_limit_is_flip; }
  nlohmann::json to_json() const;
};
YbeReport ybe_check();

struct EquivarianceReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool inverse_ok = false;
  bool pass() const { return failures.empty() && inverse_ok; }
  nlohmann::json to_json() const;
};
// [Delta(g), R-hat] = 0 for Delta(E_i) = K_i^-1 (x) E_i + E_i (x) 1,
// Delta(F_i) = 1 (x) F_i + F_i (x) K_i, Delta(K_i) = K_i (x) K_i.
EquivarianceReport equivariance_check();
// Delta(g) on S (x) S.
SparseMat coproduct_action(char g, int i);

struct EigenReport {
  int kernel_dim = 0;          // dim ker(R-hat + 1), blockwise
  bool generator_in_kernel = false;
  int submodule_dim = 0;       // span of the module generated by that vector
  bool submodule_in_kernel = false;
  int relation_rank = 0;       // transported quadratic relations of U[w]
  bool relations_in_kernel = false;
  int blocks = 0;
  bool pass() const {
    return kernel_dim == 120 && generator_in_kernel && submodule_dim == 120 && submodule_in_kernel &&
           relation_rank == 120 && relations_in_kernel;
  }
  nlohmann::json to_json() const;
};
EigenReport eigen_split();

nlohmann::json rhat_json();
std::string rhat_csv();

}  // namespace qsc
