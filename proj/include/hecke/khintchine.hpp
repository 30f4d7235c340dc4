#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"

namespace hecke {

/// One block of the creation-diagonal-annihilation decomposition of a
/// length-d product of generators. Free blocks are tagged by the split
/// position k (and the diagonal letter for insertion blocks); general blocks
/// by (k, Gamma0, Gamma1, Gamma2). Zero blocks are emitted with nonzero=false
/// so the component list matches the block index set.
struct KhintchineComponent {
  enum class Kind { FreeSplit, FreeDiagonal, General };
  Kind kind = Kind::FreeSplit;
  int k = 0;                 // number of creation legs
  Clique gamma0 = 0;         // diagonal clique (a single letter for FreeDiagonal)
  Clique gamma1 = 0;         // clique the creation word ends on, inside Link(gamma0)
  Clique gamma2 = 0;         // clique the annihilation word starts on, inside Link(gamma0)
  Word creators;             // creation legs, normal-form order
  Word annihilators;         // annihilation legs, normal-form order
  bool nonzero = false;
};

/// Free-case decomposition of T_{w_1} (x) ... (x) T_{w_d}: d+1 split blocks
/// plus d*|S| diagonal-insertion blocks (zero unless the slot letter matches).
/// Requires an edgeless graph and a reduced letter sequence.
std::vector<KhintchineComponent> jd_free(const std::vector<Letter>& letters,
                                         const CoxeterGraph& g);

/// General decomposition: one block per (l, Gamma0 in Cliq(l),
/// (Gamma1, Gamma2) in Comm(Gamma0), 0 <= k <= d-l), nonzero exactly when the
/// word rearranges as w1 (VGamma1) (VGamma0) (VGamma2) w2 with w1 not ending
/// and w2 not starting on letters commuting with Gamma0.
std::vector<KhintchineComponent> jd_general(const std::vector<Letter>& letters,
                                            const CoxeterGraph& g);

/// Size of the block index set of the degree-d decomposition space:
/// sum over cliques Gamma0 of |Comm(Gamma0)| * (d - |Gamma0| + 1).
std::int64_t khintchine_block_count(const CoxeterGraph& g, int d);

/// Applies a component's legs to the basis vector delta_v (annihilation legs
/// filter and shorten, the diagonal filters, creation legs filter and
/// lengthen). The p^{#Gamma0} weight is NOT included.
std::optional<Word> apply_component(const KhintchineComponent& c, const Word& v,
                                    const CoxeterGraph& g);

/// Exact check, on every basis vector of the radius-N ball, that the product
/// T_{w_1} ... T_{w_d} expanded by T_w = T^(1)_w + p P_w equals the sum of
/// the jd components weighted by p^{#Gamma0} (and both equal the plain Hecke
/// product).
bool verify_factorization(const std::vector<Letter>& letters, const CoxeterGraph& g, int N);

/// Rebuilds a general component's operator out of the free-group side:
/// checks R* o (free legs) o Q = (general legs) on every basis vector of the
/// radius-N ball, where Q and R are the partial basis maps into the free
/// GNS space given by segment-minimal rearrangements.
bool intertwiner_check(const KhintchineComponent& c, const std::vector<Letter>& letters,
                       const CoxeterGraph& g, int N);

enum class DiagonalVariant { Free3, Rst };

/// Family of length-2d words whose first halves are pairwise distinct and
/// whose second halves are pairwise distinct.
struct DiagonalFamily {
  int d = 0;
  std::vector<std::pair<Word, Word>> halves;  // (first half, second half)
  std::vector<Word> words;                    // the concatenations
};

/// Constructs the family: size 2^{d-1} over three free generators, or
/// 2^{(d-1)/2} for odd d over generators r,s,t with only r,t commuting.
/// The half-pairing is the lexicographic bijection.
DiagonalFamily diagonal_family(const CoxeterGraph& g, int d, DiagonalVariant variant);

/// True iff equal first halves or equal second halves force equal indices.
bool diagonal_condition_holds(const DiagonalFamily& fam);

struct CrossoverReport {
  DiagonalVariant variant = DiagonalVariant::Free3;
  double p = 0.0;
  int S_count = 3;
  int d_star = 0;
  double lhs = 0.0;  // family size at d_star
  double rhs = 0.0;  // decomposition bound at d_star
};

/// Smallest d where the family size outgrows the decomposition bound:
/// free3:  2^{d-1}       vs 2^{(d-1)/2} (1+(d+1)p) ((2d+1) + 2d|S|)
/// rst:    2^{(d-1)/2}   vs 2^{(d-1)/4} (1+(d+1)p) * block count at length 2d
/// (rst scans odd d only, with the exact block count of the 3-vertex graph).
CrossoverReport crossover(double p_value, int S_count, DiagonalVariant variant);

/// Norm bound sqrt(sum of squared block norms) for a block matrix whose rows
/// each meet a single column group. Throws std::invalid_argument when the
/// row-disjointness hypothesis fails.
struct NormBlock {
  int row = 0;
  int col = 0;
  double norm = 0.0;
};
double structured_norm_bound(const std::vector<NormBlock>& blocks);

std::string to_string(DiagonalVariant v);

}  // namespace hecke
