#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "hecke/algebra.hpp"

namespace hecke {

/// Radial multiplier T_w -> r^{|w|} T_w. Unital, completely positive for
/// 0 < r <= 1; the parameter is exact so the semigroup law holds exactly.
HeckeElement radial_multiplier(const Rational& r, const HeckeElement& a);

/// Word-length cut: keeps terms with |w| <= n.
HeckeElement wordlength_projection(int n, const HeckeElement& a);
/// Keeps exactly the length-n terms.
HeckeElement wordlength_component(int n, const HeckeElement& a);

/// One-generator Kraus decomposition of the radial multiplier: checks
/// A*A + B*B + C*C = I and A*xA + B*xB + C*xC = Phi_{r}(x) on the unit and
/// the generator matrix [[0,1],[1,p]] at parameter q, to 1e-12.
bool kraus_check(double r, double q);
/// Same check at a fixed sample of q values.
bool kraus_check(double r);

/// The vector xi_A^{+/-} over finite subsets of A: constant 1 on subsets of
/// the support (+), or (-1)^{|subset|} (-).
struct SignedSetVector {
  Clique support = 0;
  int sign = +1;  // +1 or -1
};

/// <xi_A^e, xi_B^f>: 2^{|A n B|} for equal signs, the disjointness indicator
/// for opposite signs.
std::int64_t xi_pairing(const SignedSetVector& a, const SignedSetVector& b);

/// Memo for the beta coefficients; keyed on (g, Lambda_{g,x}, Lambda, a),
/// which determines the value.
struct BetaCache {
  std::unordered_map<std::uint64_t, long long> map;
};

/// beta^+_{g,x,Lambda,a} = sum over v in C(g,x) of (-1)^{|g^-1 v|} F_{Lambda,a}(v),
/// with F_{Lambda,a}(v) = [2|v(1,Lambda)| + |v(2,Lambda)| <= a].
long long beta_plus(const Word& gw, const Word& x, Clique lambda, int a, const CoxeterGraph& g,
                    BetaCache* cache = nullptr);
/// 1 when beta^+ is nonzero, else 0.
long long beta_minus(const Word& gw, const Word& x, Clique lambda, int a, const CoxeterGraph& g,
                     BetaCache* cache = nullptr);

enum class DilationSign { Plus, Minus };

/// One summand of U_a^{+/-} delta_x: coeff * delta_g (x) delta_{g^-1 x} (x)
/// delta_{g(2,Lambda)} (x) xi_Lambda^{+/-}.
struct DilationTerm {
  Word leg_g;
  Word leg_h;  // g^-1 x
  Word leg_d;  // the clique word g(2, Lambda)
  SignedSetVector xi;
  long long coeff = 0;
};

struct DilationVector {
  std::vector<DilationTerm> terms;
};

/// U_a^{+/-} delta_x as the exact finite sum (zero-coefficient summands dropped).
DilationVector dilation_apply(DilationSign sign, int a, const Word& x, const CoxeterGraph& g,
                              BetaCache* cache = nullptr);

/// Inner product of two dilation vectors (integer; legs pair coordinatewise,
/// the xi legs through xi_pairing).
std::int64_t dilation_pairing(const DilationVector& a, const DilationVector& b);

/// <sigma_{a,b}(term) delta_x, delta_y> evaluated literally through the
/// dilation vectors: sigma_{a,b}(op) = (U_a^-)^* (op (x) 1 (x) 1 (x) 1) U_b^+.
PolyScalar sigma_entry(const OperatorTerm& term, int a, int b, const Word& x, const Word& y,
                       const CoxeterGraph& g, BetaCache* cache = nullptr);

/// Term-level length-change filter: keeps terms with
/// |annihilator| - |creator| == i (the grading a clean creation-diagonal-
/// annihilation factor carries under the circle average).
std::vector<OperatorTerm> phi_component(int i, const std::vector<OperatorTerm>& terms);

/// Keeps terms with |creator| + |annihilator| == k.
std::vector<OperatorTerm> rho_component(int k, const std::vector<OperatorTerm>& terms);

/// Exact check of the diagonal-unit identity
/// Q_w = sum over v in C(w,+) of (-1)^{|w^-1 v|} P_v, evaluated on every
/// basis vector of the radius-N ball.
bool delta_identity_check(const Word& w, const CoxeterGraph& g, int N);

/// Exact check of the telescoping beta sum: for u'' annihilating x fully,
/// u' creating fully and (u'')^-1 <= v <= x,
///   sum over v <= g <= x of
///     beta^+_{g,x,L(g),a} * beta^-_{u'u''g, u'u''x, L'(g), a + 2|u'| - 2|u''|}
/// equals the indicator [2|v(1,S)| + |v(2,S)| <= a], where
/// L(g) = g(2,0) \ (u'u''g)(2,0), L'(g) the reverse difference, and
/// S = v(2,0) \ (u'u''v)(2,0). Preconditions are validated.
bool aux_sum_check(const Word& x, const Word& u_prime, const Word& u_doubleprime, const Word& v,
                   int a, const CoxeterGraph& g);

/// Exact check of the wordlength-cutdown factorization
///   Psi_{<=n} = sum_{i=-n}^{n} sigma_{n-i, n+i} o Phi_i
/// applied to the expansion of T_w, on every basis vector delta_x of the
/// radius-N ball. Matrix entries are graded by i = |x| - |y| (the circle
/// average is a Kronecker delta per entry), so each entry is evaluated at
/// its own index pair (U+ at n+i on the domain side, U- at n-i on the range
/// side). The comparison is exact in PolyScalar arithmetic.
bool cutdown_identity_check(int n, const Word& w, const CoxeterGraph& g, int N);
/// Runs the check for every w in the ball of radius 2n+2.
bool cutdown_identity_check(int n, const CoxeterGraph& g, int N);

/// Dense numeric matrix of an operator-term sum between truncated balls.
struct TruncatedMatrix {
  std::vector<Word> cols;  // ball of radius N
  std::vector<Word> rows;  // ball closed under the terms' images
  std::vector<std::vector<double>> entries;  // entries[r][c]
};

TruncatedMatrix build_truncated(const std::vector<OperatorTerm>& terms, const CoxeterGraph& g,
                                int N, double q);

/// Largest singular value of the truncated matrix via power iteration on
/// M^T M; Rayleigh quotients make every iterate a certified lower bound for
/// the operator norm. Throws std::runtime_error past max_iter.
double operator_norm_lower(const std::vector<OperatorTerm>& terms, const CoxeterGraph& g, int N,
                           double q, double tol, int max_iter = 10000);

/// ||Psi_{<=n}(Phi_r(a)) - a||_2 at parameter q along the schedule.
std::vector<double> ccap_convergence_demo(const CoxeterGraph& g, const HeckeElement& a,
                                          const std::vector<std::pair<Rational, int>>& schedule,
                                          double q);

}  // namespace hecke
