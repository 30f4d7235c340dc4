#include "hecke/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace hecke {

HeckeElement HeckeElement::basis(const Word& w, const PolyScalar& c) {
  HeckeElement out;
  out.add(w, c);
  return out;
}

void HeckeElement::add(const Word& w, const PolyScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HeckeElement::set(const Word& w, const PolyScalar& c) {
  if (c.is_zero())
    terms_.erase(w);
  else
    terms_[w] = c;
}

PolyScalar HeckeElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? PolyScalar() : it->second;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const PolyScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, cw] : terms_) cw *= c;
  return *this;
}

double HeckeElement::gns_norm(double q) const {
  double acc = 0.0;
  for (const auto& [w, c] : terms_) {
    double v = c.eval_at_q(q);
    acc += v * v;
  }
  return std::sqrt(acc);
}

namespace {

// T_s * x by the generator rule.
HeckeElement generator_mul(Letter s, const HeckeElement& x, const CoxeterGraph& g) {
  HeckeElement out;
  for (const auto& [w, c] : x.terms()) {
    Word sw = left_mul(s, w, g);
    out.add(sw, c);
    if (sw.size() < w.size()) out.add(w, PolyScalar::p_power(1) * c);
  }
  return out;
}

}  // namespace

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b, const CoxeterGraph& g) {
  HeckeElement out;
  for (const auto& [w, c] : a.terms()) {
    HeckeElement acc = b;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
      acc = generator_mul(*it, acc, g);
    acc *= c;
    out += acc;
  }
  return out;
}

HeckeElement adjoint(const HeckeElement& a, const CoxeterGraph& g) {
  HeckeElement out;
  for (const auto& [w, c] : a.terms()) out.add(inverse(w, g), c);
  return out;
}

PolyScalar trace(const HeckeElement& a) { return a.coeff(Word{}); }

PolyScalar inner_product(const HeckeElement& a, const HeckeElement& b, const CoxeterGraph& g) {
  return trace(hecke_multiply(adjoint(b, g), a, g));
}

HeckeElement group_action(const Word& v, const HeckeElement& a, const CoxeterGraph& g) {
  HeckeElement out;
  for (const auto& [w, c] : a.terms()) out.add(multiply(v, w, g), c);
  return out;
}

HeckeElement project_prefix(const Word& w, const HeckeElement& a, const CoxeterGraph& g) {
  HeckeElement out;
  for (const auto& [v, c] : a.terms())
    if (is_prefix(w, v, g)) out.add(v, c);
  return out;
}

HeckeElement conditional_expectation(Clique subset, const HeckeElement& a, const CoxeterGraph& g) {
  (void)g;
  HeckeElement out;
  for (const auto& [w, c] : a.terms()) {
    bool inside = true;
    for (Letter l : w.letters)
      if (!((subset >> l) & 1u)) {
        inside = false;
        break;
      }
    if (inside) out.add(w, c);
  }
  return out;
}

std::vector<ExpansionTriple> enumerate_Aw(const Word& w, const CoxeterGraph& g) {
  std::vector<ExpansionTriple> out;
  for (const Word& w1 : prefix_set(w, g)) {
    Word rest = multiply(inverse(w1, g), w, g);
    Clique start = prefix_clique(rest, g);
    Clique sc1 = suffix_clique(w1, g);
    Clique sub = 0;
    while (true) {
      // Letters commuting with the whole clique may not end w'; for the
      // empty clique this excludes every letter, forcing w' = e.
      if ((sc1 & g.link_of_set(sub)) == 0) {
        Word w2 = multiply(clique_word(sub, g), rest, g);
        out.push_back(ExpansionTriple{w1, sub, std::move(w2)});
      }
      if (sub == start) break;
      sub = (sub - start) & start;
    }
  }
  std::sort(out.begin(), out.end(), [](const ExpansionTriple& a, const ExpansionTriple& b) {
    if (a.w_prime != b.w_prime) return a.w_prime < b.w_prime;
    if (a.clique != b.clique) return a.clique < b.clique;
    return a.w_doubleprime < b.w_doubleprime;
  });
  return out;
}

BreakdownParts breakdown(const ExpansionTriple& t, const CoxeterGraph& g) {
  Word up = t.w_prime;
  Word upp = t.w_doubleprime;
  while (true) {
    Clique common = suffix_clique(up, g) & prefix_clique(upp, g);
    if (common == 0) break;
    Letter s = static_cast<Letter>(__builtin_ctz(common));
    up = right_mul(up, s, g);
    upp = left_mul(s, upp, g);
  }
  Word u = multiply(inverse(up, g), t.w_prime, g);
  return BreakdownParts{std::move(u), std::move(up), std::move(upp)};
}

std::optional<Word> apply_term(const OperatorTerm& t, const Word& v, const CoxeterGraph& g) {
  Word mid = multiply(t.annihilator, v, g);
  if (!is_prefix(t.diagonal, mid, g)) return std::nullopt;
  return multiply(t.creator, mid, g);
}

HeckeElement apply_terms(const std::vector<OperatorTerm>& ts, const HeckeElement& a,
                         const CoxeterGraph& g) {
  HeckeElement out;
  for (const auto& [v, c] : a.terms())
    for (const OperatorTerm& t : ts)
      if (auto img = apply_term(t, v, g)) out.add(*img, t.weight * c);
  return out;
}

std::vector<OperatorTerm> t_expansion(const Word& w, const CoxeterGraph& g) {
  std::vector<OperatorTerm> out;
  for (const ExpansionTriple& t : enumerate_Aw(w, g))
    out.push_back(OperatorTerm{t.w_prime, clique_word(t.clique, g), t.w_doubleprime,
                               PolyScalar::p_power(clique_size(t.clique))});
  return out;
}

OperatorTerm normalized_term(const ExpansionTriple& t, const CoxeterGraph& g) {
  BreakdownParts b = breakdown(t, g);
  Word diag = multiply(b.u, clique_word(t.clique, g), g);
  return OperatorTerm{b.u_prime, std::move(diag), b.u_doubleprime,
                      PolyScalar::p_power(clique_size(t.clique))};
}

}  // namespace hecke
