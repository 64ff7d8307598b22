#pragma once

#include "qsc/laurent.hpp"
#include "qsc/rootdata.hpp"
#include "qsc/schubert.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsc {

// Generator X_{row,col} of the FRT bialgebra, 256 in total. Its id is
// 16 lex_pos(row) + lex_pos(col).
struct FRTGen {
  SubsetB row;
  SubsetB col;

  int id() const;
  static FRTGen from_id(int id);
  std::string label() const;  // X[e,12]
};

// A word in the X generators, one byte per generator id.
using FRTWord = std::string;
FRTWord frt_word(std::initializer_list<FRTGen> gens);
FRTGen frt_letter(const FRTWord& w, std::size_t k);

// Degree-2 (or higher) relation: words with Laurent coefficients.
using RelationVector = std::map<FRTWord, LaurentPoly>;

std::string relation_to_string(const RelationVector& r);
nlohmann::json relation_json(const RelationVector& r);

// sum_{K,L} R_KL^{TS} X_KI X_LJ - sum_{K,L} R_IJ^{KL} X_SL X_TK.
RelationVector frt_relation(SubsetB s, SubsetB t, SubsetB i, SubsetB j);

// |S delta T| = 2 and S < T.
bool admissible_pair(SubsetB s, SubsetB t);
// The 80 admissible pairs, ordered by (lex_pos S, lex_pos T).
const std::vector<std::pair<SubsetB, SubsetB>>& admissible_pairs();

// Canonical bases of the degree-2 relation spaces, block by block in the
// (row weight, column weight) grading.
std::vector<RelationVector> row_presentation(SubsetB s);
// Rows S and T together: both single-row spaces plus the mixed block.
// Throws std::invalid_argument unless admissible_pair(s, t).
std::vector<RelationVector> two_row_presentation(SubsetB s, SubsetB t);

// The displayed relation families.
std::vector<RelationVector> stated_commutation(SubsetB s);         // X_SI X_SJ, I not >= J
std::vector<RelationVector> stated_octet_relations(SubsetB s);     // ten, alternating in -q
std::vector<RelationVector> stated_mixed(SubsetB s, SubsetB t);    // X_SI X_TJ, all I, J
std::vector<RelationVector> stated_mixed_octet(SubsetB s, SubsetB t);  // ten, (-q)^ht
std::vector<RelationVector> stated_row_relations(SubsetB s);
std::vector<RelationVector> stated_two_row_relations(SubsetB s, SubsetB t);

struct SpanComparison {
  int computed_rank = 0;
  int stated_rank = 0;
  int stated_vectors = 0;
  int stated_outside = 0;    // stated vectors not in the computed span
  int computed_outside = 0;  // computed basis vectors not in the stated span
  bool pass() const { return stated_outside == 0 && computed_outside == 0; }
  nlohmann::json to_json() const;
};
SpanComparison compare_spans(const std::vector<RelationVector>& computed, const std::vector<RelationVector>& stated);

struct PresentationReport {
  int checked = 0;
  int expected_rank = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
  nlohmann::json to_json() const;
};
// Row spans against the stated families, for all 16 rows (rank 130 each).
PresentationReport row_presentation_check();
// Two-row spans against the stated families, for all 80 pairs (rank 526).
PresentationReport two_row_presentation_check();

// Dense matrices over Z[q, q^-1].
using DenseMatrix = std::vector<std::vector<LaurentPoly>>;
// The 8x8 proof matrix as displayed; without literal the entry (4,6) is
// q^ rather than the printed 1.
DenseMatrix displayed_A(bool literal = false);
DenseMatrix skew_diag(const LaurentPoly& x);
DenseMatrix row_block_matrix(const DenseMatrix& a);      // A - SkewDiag(q^2)
DenseMatrix two_row_block_matrix(const DenseMatrix& a);  // 16x16 block matrix
// Positions in the X vector: (A_p, a_p) for p = 1..4, then (a_p, A_p) for
// p = 4..1, with (a_p, A_p) the octet member of height p.
std::vector<std::pair<SubsetB, SubsetB>> octet_positions(const PairClass& octet);
// Entry (r, c) is R_IJ^{ML} for (I, J) at position 9 - r and (L, M) at c.
DenseMatrix derived_A(const PairClass& octet);
// Coefficients of the FRT relations of one octet, with sign so that they
// read as the displayed systems.
DenseMatrix derived_row_matrix(SubsetB s, const PairClass& octet);
DenseMatrix derived_two_row_matrix(SubsetB s, SubsetB t, const PairClass& octet);

struct RankReport {
  int rank_row = 0;      // A - SkewDiag(q^2)
  int rank_two_row = 0;  // 16x16
  int rank_a = 0;
  int literal_rank_row = 0;  // diagnostics for the printed entry (4,6) = 1
  int literal_rank_two_row = 0;
  int matrices_compared = 0;
  int entry_mismatches = 0;
  int literal_entry_mismatches = 0;  // diagnostic
  std::vector<std::string> first_mismatches;
  bool pass() const { return rank_row == 5 && rank_two_row == 9 && rank_a == 8 && entry_mismatches == 0; }
  nlohmann::json to_json() const;
};
RankReport rank_checks();

// Transport of U_q^+[w] elements along Y_I -> X_SI.
RelationVector transport_row(const AlgebraPresentation& w, const NCPoly& x, SubsetB s);
// Transport of the primed image of a U_q^+[what] element along
// (Z_I)' -> X_SI, (Z_{I+delta})' -> X_TI.
RelationVector transport_two_rows(const AlgebraPresentation& what, const NCPoly& x, SubsetB s, SubsetB t);

struct DimensionEvidence {
  int degree = 0;
  bool exact = true;
  std::vector<long> algebra_dims;   // A side, one per evaluation point (or one exact)
  std::vector<long> quotient_dims;  // Schubert quotient side
  bool match() const;
  nlohmann::json to_json() const;
};

struct PsiReport {
  std::string target;
  int relations_checked = 0;
  std::vector<std::string> relation_failures;
  int kernel_checked = 0;
  std::vector<std::string> kernel_failures;
  std::vector<DimensionEvidence> dims;
  bool pass() const;
  nlohmann::json to_json() const;
};

// Y_I -> X_SI: relations, kernel containment of the Theta-module, and
// dimension evidence through max_degree (degree 3 and up is modular).
PsiReport psi_S_check(SubsetB s, int max_degree = 2, std::uint64_t seed = 1);
// (Z_I)' -> X_SI, (Z_{I+delta})' -> X_TI, with kernel generated by the
// modules of Omega_3, Omega_4, Omega_5.
PsiReport psi_ST_check(SubsetB s, SubsetB t, int max_degree = 2, std::uint64_t seed = 1);

// Bases of the kernel generators, in normal form.
const std::vector<NCPoly>& theta_module();
const std::vector<NCPoly>& omega_module(int k);  // k in {3, 4, 5}

}  // namespace qsc
