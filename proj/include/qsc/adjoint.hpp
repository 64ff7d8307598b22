#pragma once

#include "qsc/schubert.hpp"
#include "qsc/sparse_mat.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace qsc {

enum class AdGen { E, F, K, Kinv };

// Lowering word (i1, ..., ik) over I' = {2, ..., 6}; ad(F_i1 ... F_ik).
using LoweringWord = std::vector<int>;

// Weight sum_i c_i w_i of D5, coefficients listed for i = 2, ..., 6.
struct DominantWeightD5 {
  std::array<int, 5> c{};

  static DominantWeightD5 fundamental(int i);  // i in I'
  // (<alpha_i, mu>)_{i in I'}; throws std::invalid_argument if not dominant.
  static DominantWeightD5 of_degree(const Weight& mu);
  int operator[](int i) const { return c[static_cast<std::size_t>(i - 2)]; }

  friend DominantWeightD5 operator+(DominantWeightD5 a, const DominantWeightD5& b);
  friend DominantWeightD5 operator*(int k, DominantWeightD5 a);
  friend bool operator==(const DominantWeightD5& a, const DominantWeightD5& b) { return a.c == b.c; }
  friend bool operator<(const DominantWeightD5& a, const DominantWeightD5& b) { return a.c < b.c; }

  std::string to_string() const;  // "0", "w2", "2w2+w6"
  nlohmann::json to_json() const { return c; }
};

// (<alpha_i, mu>)_{i in I'}, without a dominance requirement.
std::array<int, 5> d5_pairing(const Weight& mu);

// Adjoint action of U_q(g_I') on the algebra of rw, result in normal form.
NCPoly ad_gen(Rewriter& rw, AdGen g, int i, const NCPoly& x);
// ad(F_i1 ... F_ik) x = ad(F_i1)(... ad(F_ik)(x)).
NCPoly ad_word(Rewriter& rw, const LoweringWord& word, const NCPoly& x);
// Matrix of ad(g) on the degree-1 span, basis ordered by generator id.
SparseMat ad_matrix(const AlgebraPresentation& pres, AdGen g, int i);

struct HighestWeightResult {
  bool highest = false;
  DominantWeightD5 weight;  // meaningful only when highest
};
// Throws std::invalid_argument for x = 0 or inhomogeneous x.
HighestWeightResult is_highest_weight(Rewriter& rw, const NCPoly& x);

// Y[1234] Y[e] - q Y[34] Y[12] + q^2 Y[24] Y[13] - q^3 Y[23] Y[14], normal form.
NCPoly build_theta(Rewriter& rw);

struct OmegaInfo {
  int k;
  DominantWeightD5 weight;
  int degree;
  const char* formula;
};
// Listed weights and Z-degrees of the conjectured generators.
const std::array<OmegaInfo, 13>& omega_table();

// Builds the vectors Omega_1..Omega_13 of the 32-generator algebra, with
// memoization since later ones are assembled from earlier ones.
class OmegaBuilder {
 public:
  explicit OmegaBuilder(Rewriter& rw);
  const NCPoly& omega(int k);

 private:
  NCPoly build(int k);
  NCPoly gen(const char* label, bool delta) const;

  Rewriter* rw_;
  std::map<int, NCPoly> cache_;
};

// Basis of the cyclic submodule generated by a highest weight vector: closure
// under all ad(F_i), reduced exactly within each weight space.
std::vector<NCPoly> submodule_span(Rewriter& rw, const NCPoly& x);

// Product over the 20 positive roots of D5 of <lambda + rho, a> / <rho, a>.
Integer weyl_dim(const DominantWeightD5& lambda);
// Closed form (m+3)/105 C(m+5,5) C(n+4,4) C(n+m+7,4) for m w2 + n w6.
Integer weyl_dim_closed_form(int m, int n);

struct IdentityReport {
  int degree = 0;
  Integer lhs, rhs;
  bool closed_form_agrees = true;  // closed form equals weyl_dim on every term
  bool pass() const { return lhs == rhs && closed_form_agrees; }
};
// sum_{m+2n=d} dim V(m w2 + n w6) = C(15+d, 15), exactly.
IdentityReport identity_check(int d);

struct DecompositionBlock {
  Weight weight;  // Q-degree of the block
  DominantWeightD5 lambda;
  int dim = 0;
  int hw_dim = 0;
};

struct DecompositionReport {
  AlgebraId algebra = AlgebraId::w;
  int degree = 0;
  std::vector<DecompositionBlock> blocks;  // dominant weight spaces only
  Integer component_dim;
  std::map<DominantWeightD5, int> observed;  // highest weight multiplicities
  std::map<DominantWeightD5, int> expected;
  Integer observed_dim;                 // sum of mult * weyl_dim over observed
  bool generators_ok = true;            // w only: Y_e^m Theta^n checks
  bool match() const { return observed == expected && observed_dim == component_dim && generators_ok; }
  nlohmann::json to_json() const;
};
// Highest weight space of the degree-d component by exact kernels of the
// ad(E_i) on each dominant weight space. For w the expected multiplicities
// are m w2 + n w6 (m + 2n = d); for what they are the weights of the
// Omega-monomials of degree d with r5 r9 = 0.
DecompositionReport decompose_degree(Rewriter& rw, int d);

struct RelationEvidence {
  std::size_t stated_terms = 0;  // normal-form terms of the stated combination
  bool vanishing_found = false;  // a one-dimensional relation among the products
  RatFunc coeff_311;             // c in P59 + c P311 + c' P410 = 0
  RatFunc coeff_410;
  bool stated_holds() const { return stated_terms == 0; }
  nlohmann::json to_json() const;
};
// Checks Omega5 Omega9 + q^-6 Omega3 Omega11 - q^-2 Omega4 Omega10 = 0 and
// solves for the relation that the three products actually satisfy.
RelationEvidence conjecture_relation(OmegaBuilder& omegas, Rewriter& rw);

struct ModuleAlgebraReport {
  int pairs = 0;
  int checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};
// ad(g)(xy) against the coproduct expansion on random normal monomials.
ModuleAlgebraReport module_algebra_check(Rewriter& rw, std::mt19937_64& rng, int pairs);

}  // namespace qsc
