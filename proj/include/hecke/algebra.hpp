#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hecke/coxeter.hpp"
#include "hecke/poly.hpp"

namespace hecke {

/// Finite linear combination sum_w c_w T_w with exact PolyScalar coefficients.
/// The same object serves as the GNS vector sum_w c_w T_w Omega; the basis
/// {T_w Omega} is orthonormal for the trace inner product.
class HeckeElement {
 public:
  HeckeElement() = default;
  static HeckeElement basis(const Word& w, const PolyScalar& c = PolyScalar(1));
  static HeckeElement unit() { return basis(Word{}); }

  void add(const Word& w, const PolyScalar& c);
  void set(const Word& w, const PolyScalar& c);
  PolyScalar coeff(const Word& w) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, PolyScalar>& terms() const { return terms_; }

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const PolyScalar& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const PolyScalar& c, HeckeElement a) { return a *= c; }
  bool operator==(const HeckeElement& o) const { return terms_ == o.terms_; }

  /// GNS 2-norm at deformation parameter q.
  double gns_norm(double q) const;

 private:
  std::map<Word, PolyScalar> terms_;  // no zero coefficients stored
};

/// Product in the Hecke algebra, folding the generator rule
/// T_s T_w = T_{sw} (length up) or T_{sw} + p T_w (length down)
/// over the normal-form letters of each basis word of `a`.
HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b, const CoxeterGraph& g);

/// The *-involution T_w -> T_{w^-1}.
HeckeElement adjoint(const HeckeElement& a, const CoxeterGraph& g);

/// tau(a): the coefficient of T_e.
PolyScalar trace(const HeckeElement& a);

/// <a, b> = tau(b^* a), computed through the product.
PolyScalar inner_product(const HeckeElement& a, const HeckeElement& b, const CoxeterGraph& g);

/// The group-algebra operator T^(1)_v: basis permutation T_w Omega -> T_{vw} Omega.
HeckeElement group_action(const Word& v, const HeckeElement& a, const CoxeterGraph& g);

/// P_w: keeps the terms T_v Omega with w <= v.
HeckeElement project_prefix(const Word& w, const HeckeElement& a, const CoxeterGraph& g);

/// Trace-preserving conditional expectation onto the subsystem generated by
/// `subset`: keeps terms whose words use only those letters.
HeckeElement conditional_expectation(Clique subset, const HeckeElement& a, const CoxeterGraph& g);

/// A triple w = w' * (clique word) * w'' with additive lengths and no letter
/// commuting with the clique at the end of w'.
struct ExpansionTriple {
  Word w_prime;
  Clique clique = 0;
  Word w_doubleprime;
  bool operator==(const ExpansionTriple&) const = default;
};

/// All decomposition triples of w (the index set of the creation-diagonal-
/// annihilation expansion). For the empty clique the unique triple is (e, {}, w).
std::vector<ExpansionTriple> enumerate_Aw(const Word& w, const CoxeterGraph& g);

struct BreakdownParts {
  Word u;
  Word u_prime;
  Word u_doubleprime;
};

/// Maximal cancellation between the end of w' and the start of w'':
/// u is the longest word with w' = u' u and w'' = u^-1 u'' (additive lengths),
/// giving the operator identity
///   T^(1)_{w'} P_{VGamma0} T^(1)_{w''} = T^(1)_{u'} P_{u VGamma0} T^(1)_{u''}.
BreakdownParts breakdown(const ExpansionTriple& t, const CoxeterGraph& g);

/// One creation-diagonal-annihilation factor: weight * T^(1)_{creator} P_{diagonal} T^(1)_{annihilator}.
struct OperatorTerm {
  Word creator;
  Word diagonal;
  Word annihilator;
  PolyScalar weight;
};

/// Applies the term to the basis vector T_v Omega: the annihilator acts by
/// the group law, the diagonal filters on the prefix order, the creator acts
/// by the group law. Returns the image word, or nullopt when projected away.
std::optional<Word> apply_term(const OperatorTerm& t, const Word& v, const CoxeterGraph& g);

/// Sum of the terms applied to an element, weights included.
HeckeElement apply_terms(const std::vector<OperatorTerm>& ts, const HeckeElement& a,
                         const CoxeterGraph& g);

/// The expansion T_w = sum over triples of p^{#clique} T^(1)_{w'} P_{clique} T^(1)_{w''},
/// one OperatorTerm per triple of enumerate_Aw.
std::vector<OperatorTerm> t_expansion(const Word& w, const CoxeterGraph& g);

/// The breakdown-normalized form of a triple's term: creator u', diagonal
/// word u * (clique word), annihilator u''. Creator and annihilator
/// concatenate reducedly.
OperatorTerm normalized_term(const ExpansionTriple& t, const CoxeterGraph& g);

}  // namespace hecke
