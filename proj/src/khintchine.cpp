#include "hecke/khintchine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace hecke {

namespace {

void require_reduced(const std::vector<Letter>& letters, const CoxeterGraph& g) {
  Word w = reduce(letters, g);
  if (w.size() != static_cast<int>(letters.size()))
    throw std::invalid_argument("letter sequence is not reduced");
}

}  // namespace

std::vector<KhintchineComponent> jd_free(const std::vector<Letter>& letters,
                                         const CoxeterGraph& g) {
  if (!g.edge_list().empty())
    throw std::invalid_argument("jd_free requires an edgeless commutation graph");
  require_reduced(letters, g);
  int d = static_cast<int>(letters.size());
  std::vector<KhintchineComponent> out;
  for (int k = 0; k <= d; ++k) {
    KhintchineComponent c;
    c.kind = KhintchineComponent::Kind::FreeSplit;
    c.k = k;
    c.creators.letters.assign(letters.begin(), letters.begin() + k);
    c.annihilators.letters.assign(letters.begin() + k, letters.end());
    c.nonzero = true;
    out.push_back(std::move(c));
  }
  for (int k = 0; k < d; ++k) {
    for (int s = 0; s < g.size(); ++s) {
      KhintchineComponent c;
      c.kind = KhintchineComponent::Kind::FreeDiagonal;
      c.k = k;
      c.gamma0 = 1u << s;
      c.nonzero = letters[k] == s;
      if (c.nonzero) {
        c.creators.letters.assign(letters.begin(), letters.begin() + k);
        c.annihilators.letters.assign(letters.begin() + k + 1, letters.end());
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<KhintchineComponent> jd_general(const std::vector<Letter>& letters,
                                            const CoxeterGraph& g) {
  require_reduced(letters, g);
  Word w = reduce(letters, g);
  int d = w.size();
  // Nonzero components first: every decomposition w = c * (clique word) * a
  // determines its block through the boundary cliques.
  struct Key {
    Clique gamma0, gamma1, gamma2;
    int k;
    bool operator<(const Key& o) const {
      return std::tie(gamma0, gamma1, gamma2, k) < std::tie(o.gamma0, o.gamma1, o.gamma2, o.k);
    }
  };
  std::map<Key, std::pair<Word, Word>> found;
  for (const Word& c : prefix_set(w, g)) {
    Word rest = multiply(inverse(c, g), w, g);
    Clique start = prefix_clique(rest, g);
    Clique sub = 0;
    while (true) {
      Word a = multiply(clique_word(sub, g), rest, g);
      Clique lk = g.link_of_set(sub);
      Key key{sub, suffix_clique(c, g) & lk, prefix_clique(a, g) & lk, c.size()};
      auto [it, inserted] = found.emplace(key, std::make_pair(c, a));
      if (!inserted && !(it->second.first == c))
        throw std::logic_error("decomposition uniqueness violated");
      if (sub == start) break;
      sub = (sub - start) & start;
    }
  }
  std::vector<KhintchineComponent> out;
  for (Clique gamma0 : enumerate_cliques(g)) {
    int l = clique_size(gamma0);
    if (l > d) continue;
    Clique lk = g.link_of_set(gamma0);
    std::vector<Clique> link_cliques;
    for (Clique c : enumerate_cliques(g))
      if ((c & lk) == c) link_cliques.push_back(c);
    for (Clique g1 : link_cliques)
      for (Clique g2 : link_cliques) {
        if ((g1 & g2) != 0) continue;
        for (int k = 0; k <= d - l; ++k) {
          KhintchineComponent c;
          c.kind = KhintchineComponent::Kind::General;
          c.k = k;
          c.gamma0 = gamma0;
          c.gamma1 = g1;
          c.gamma2 = g2;
          auto it = found.find(Key{gamma0, g1, g2, k});
          if (it != found.end()) {
            c.nonzero = true;
            c.creators = it->second.first;
            c.annihilators = it->second.second;
          }
          out.push_back(std::move(c));
        }
      }
  }
  return out;
}

std::int64_t khintchine_block_count(const CoxeterGraph& g, int d) {
  std::int64_t total = 0;
  std::vector<Clique> cliques = enumerate_cliques(g);
  for (Clique gamma0 : cliques) {
    int l = clique_size(gamma0);
    if (l > d) continue;
    Clique lk = g.link_of_set(gamma0);
    std::int64_t comm = 0;
    for (Clique a : cliques) {
      if ((a & lk) != a) continue;
      for (Clique b : cliques)
        if ((b & lk) == b && (a & b) == 0) ++comm;
    }
    total += comm * (d - l + 1);
  }
  return total;
}

std::optional<Word> apply_component(const KhintchineComponent& c, const Word& v,
                                    const CoxeterGraph& g) {
  if (!c.nonzero) return std::nullopt;
  Word cur = v;
  // Annihilation legs act rightmost first; each requires its letter as prefix.
  for (auto it = c.annihilators.letters.rbegin(); it != c.annihilators.letters.rend(); ++it) {
    Word nxt = left_mul(*it, cur, g);
    if (nxt.size() >= cur.size()) return std::nullopt;
    cur = std::move(nxt);
  }
  if (!is_prefix(clique_word(c.gamma0, g), cur, g)) return std::nullopt;
  for (auto it = c.creators.letters.rbegin(); it != c.creators.letters.rend(); ++it) {
    Word nxt = left_mul(*it, cur, g);
    if (nxt.size() <= cur.size()) return std::nullopt;
    cur = std::move(nxt);
  }
  return cur;
}

bool verify_factorization(const std::vector<Letter>& letters, const CoxeterGraph& g, int N) {
  require_reduced(letters, g);
  int d = static_cast<int>(letters.size());
  bool free_case = g.edge_list().empty();
  std::vector<KhintchineComponent> comps =
      free_case ? jd_free(letters, g) : jd_general(letters, g);

  for (const Word& v : enumerate_ball(g, N)) {
    // Route 1: distribute T_w = T^(1)_w + p P_w over all 2^d sign patterns.
    HeckeElement lhs;
    struct State {
      Word v;
      int ppow;
    };
    std::vector<State> states{{v, 0}};
    for (int i = d - 1; i >= 0; --i) {
      Letter s = letters[i];
      std::vector<State> next;
      for (const State& st : states) {
        next.push_back(State{left_mul(s, st.v, g), st.ppow});  // T^(1)_s branch
        if (is_prefix(Word{{s}}, st.v, g)) next.push_back(State{st.v, st.ppow + 1});  // p P_s
      }
      states = std::move(next);
    }
    for (const State& st : states) lhs.add(st.v, PolyScalar::p_power(st.ppow));

    // Route 2: the decomposition components with weights p^{#Gamma0}.
    HeckeElement rhs;
    for (const KhintchineComponent& c : comps)
      if (auto img = apply_component(c, v, g))
        rhs.add(*img, PolyScalar::p_power(clique_size(c.gamma0)));
    if (!(lhs == rhs)) return false;

    // Route 3: the plain Hecke product.
    HeckeElement chain = HeckeElement::basis(v);
    for (int i = d - 1; i >= 0; --i)
      chain = hecke_multiply(HeckeElement::basis(Word{{letters[i]}}), chain, g);
    if (!(lhs == chain)) return false;
  }
  return true;
}

namespace {

// Rearrangement v = head * (clique word) * tail with |head| = k and the
// head's suffix clique meeting Link(gamma0) in exactly `boundary`. Unique
// when it exists. Returns (head, tail).
std::optional<std::pair<Word, Word>> segment_decomposition(const Word& v, int k, Clique gamma0,
                                                           Clique boundary,
                                                           const CoxeterGraph& g) {
  for (const Word& head : prefix_set(v, g)) {
    if (head.size() != k) continue;
    Word rest = multiply(inverse(head, g), v, g);
    if (!is_prefix(clique_word(gamma0, g), rest, g)) continue;
    if ((suffix_clique(head, g) & g.link_of_set(gamma0)) != boundary) continue;
    Word tail = multiply(clique_word(gamma0, g), rest, g);
    return std::make_pair(head, tail);
  }
  return std::nullopt;
}

// Expression of a word in the free GNS basis: the letters of `head` written
// so that the reversed string is minimal when `transpose` is set (else the
// string itself is minimal), then the clique letters in generator order, then
// the minimal expression of `tail`.
std::vector<Letter> free_expression(const Word& head, Clique gamma0, const Word& tail,
                                    bool transpose_head, const CoxeterGraph& g) {
  std::vector<Letter> out;
  if (transpose_head) {
    Word rev = inverse(head, g);
    out.assign(rev.letters.rbegin(), rev.letters.rend());
  } else {
    out = head.letters;
  }
  Word mid = clique_word(gamma0, g);
  out.insert(out.end(), mid.letters.begin(), mid.letters.end());
  out.insert(out.end(), tail.letters.begin(), tail.letters.end());
  return out;
}

}  // namespace

bool intertwiner_check(const KhintchineComponent& c, const std::vector<Letter>& letters,
                       const CoxeterGraph& g, int N) {
  if (c.kind != KhintchineComponent::Kind::General)
    throw std::invalid_argument("intertwiner_check expects a general component");
  if (!c.nonzero) return true;
  int d = static_cast<int>(letters.size());
  int l = clique_size(c.gamma0);
  CoxeterGraph gf = CoxeterGraph::free_graph(g.labels());

  // Q sends delta_v to the free basis vector of the rearrangement
  // [d-l-k letters ending on gamma2, transpose-minimal][gamma0][rest minimal].
  auto qmap = [&](const Word& v) -> std::optional<Word> {
    auto dec = segment_decomposition(v, d - l - c.k, c.gamma0, c.gamma2, g);
    if (!dec) return std::nullopt;
    return Word{free_expression(dec->first, c.gamma0, dec->second, /*transpose_head=*/true, g)};
  };
  // R sends delta_z to [k letters ending on gamma1, minimal][gamma0][rest minimal].
  auto rmap = [&](const Word& z) -> std::optional<Word> {
    auto dec = segment_decomposition(z, c.k, c.gamma0, c.gamma1, g);
    if (!dec) return std::nullopt;
    return Word{free_expression(dec->first, c.gamma0, dec->second, /*transpose_head=*/false, g)};
  };

  // Free-side legs of the component.
  auto free_op = [&](const Word& u) -> std::optional<Word> {
    KhintchineComponent cf = c;
    return apply_component(cf, u, gf);
  };
  // General-side legs.
  auto general_op = [&](const Word& v) -> std::optional<Word> {
    return apply_component(c, v, g);
  };

  for (const Word& v : enumerate_ball(g, N)) {
    std::optional<Word> lhs;
    if (auto fv = qmap(v)) {
      if (auto moved = free_op(*fv)) {
        // R^* of a free basis vector: the unique W-preimage, when R maps it back.
        Word z = reduce(moved->letters, g);
        if (auto rz = rmap(z); rz && *rz == *moved) lhs = z;
      }
    }
    std::optional<Word> rhs = general_op(v);
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

// Reduced words over an edgeless triple with a fixed final (or initial) letter.
void free_words_rec(const std::array<Letter, 3>& gens, int len, Letter fixed, bool fixed_at_end,
                    std::vector<Letter>& acc, std::vector<Word>& out) {
  if (static_cast<int>(acc.size()) == len - 1) {
    std::vector<Letter> word;
    if (fixed_at_end) {
      word = acc;
      word.push_back(fixed);
    } else {
      word.push_back(fixed);
      word.insert(word.end(), acc.begin(), acc.end());
    }
    // No two adjacent letters equal: already enforced below plus the seam.
    out.push_back(Word{std::move(word)});
    return;
  }
  for (Letter l : gens) {
    Letter neighbor;
    if (acc.empty()) {
      neighbor = fixed_at_end ? 255 : fixed;  // seam letter for the prefix case
    } else {
      neighbor = acc.back();
    }
    if (fixed_at_end && static_cast<int>(acc.size()) == len - 2 && l == fixed) continue;
    if (l == neighbor) continue;
    acc.push_back(l);
    free_words_rec(gens, len, fixed, fixed_at_end, acc, out);
    acc.pop_back();
  }
}

std::vector<Word> free_words_ending(const std::array<Letter, 3>& gens, int len, Letter fixed) {
  std::vector<Word> out;
  std::vector<Letter> acc;
  if (len == 1) return {Word{{fixed}}};
  free_words_rec(gens, len, fixed, /*fixed_at_end=*/true, acc, out);
  return out;
}

std::vector<Word> free_words_starting(const std::array<Letter, 3>& gens, int len, Letter fixed) {
  std::vector<Word> out;
  std::vector<Letter> acc;
  if (len == 1) return {Word{{fixed}}};
  free_words_rec(gens, len, fixed, /*fixed_at_end=*/false, acc, out);
  return out;
}

// Builder for the fixed-at-end case walks left to right, so the seam with the
// fixed final letter is the last chosen position (handled above); for the
// fixed-at-start case the first chosen letter must differ from `fixed`.

std::optional<std::array<Letter, 3>> find_free_triple(const CoxeterGraph& g) {
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b)
      for (int c = b + 1; c < g.size(); ++c)
        if (!g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c))
          return std::array<Letter, 3>{static_cast<Letter>(a), static_cast<Letter>(b),
                                       static_cast<Letter>(c)};
  return std::nullopt;
}

// Generators (r, s, t) with exactly r,t commuting among the three.
std::optional<std::array<Letter, 3>> find_rst_triple(const CoxeterGraph& g) {
  for (int r = 0; r < g.size(); ++r)
    for (int t = 0; t < g.size(); ++t) {
      if (r == t || !g.adjacent(r, t)) continue;
      for (int s = 0; s < g.size(); ++s) {
        if (s == r || s == t) continue;
        if (!g.adjacent(r, s) && !g.adjacent(s, t))
          return std::array<Letter, 3>{static_cast<Letter>(r), static_cast<Letter>(s),
                                       static_cast<Letter>(t)};
      }
    }
  return std::nullopt;
}

}  // namespace

DiagonalFamily diagonal_family(const CoxeterGraph& g, int d, DiagonalVariant variant) {
  if (d < 1) throw std::invalid_argument("diagonal_family requires d >= 1");
  DiagonalFamily fam;
  fam.d = d;
  std::vector<Word> first, second;
  if (variant == DiagonalVariant::Free3) {
    auto triple = find_free_triple(g);
    if (!triple) throw std::invalid_argument("graph has no three pairwise-free generators");
    Letter s = (*triple)[0], t = (*triple)[1];
    first = free_words_ending(*triple, d, s);
    second = free_words_starting(*triple, d, t);
  } else {
    auto triple = find_rst_triple(g);
    if (!triple) throw std::invalid_argument("graph has no r,s,t pattern with m(r,t)=2 only");
    if (d % 2 == 0) throw std::invalid_argument("rst variant requires odd d");
    Letter r = (*triple)[0], s = (*triple)[1], t = (*triple)[2];
    int slots = (d - 1) / 2;
    // First halves a_1 s a_3 s ... s r, second halves t s a_1 s ... s a_{d-2},
    // with each a_i in {r, t}.
    for (int bits = 0; bits < (1 << slots); ++bits) {
      std::vector<Letter> a, b;
      b.push_back(t);
      for (int i = 0; i < slots; ++i) {
        Letter ai = ((bits >> i) & 1) ? t : r;
        a.push_back(ai);
        a.push_back(s);
        b.push_back(s);
        b.push_back(ai);
      }
      a.push_back(r);
      first.push_back(reduce(a, g));
      second.push_back(reduce(b, g));
    }
  }
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  if (first.size() != second.size()) throw std::logic_error("half-family size mismatch");
  for (std::size_t i = 0; i < first.size(); ++i) {
    Word word = multiply(first[i], second[i], g);
    if (word.size() != 2 * d) throw std::logic_error("family concatenation not reduced");
    fam.halves.emplace_back(first[i], second[i]);
    fam.words.push_back(std::move(word));
  }
  return fam;
}

bool diagonal_condition_holds(const DiagonalFamily& fam) {
  for (std::size_t i = 0; i < fam.halves.size(); ++i)
    for (std::size_t j = i + 1; j < fam.halves.size(); ++j) {
      if (fam.halves[i].first == fam.halves[j].first) return false;
      if (fam.halves[i].second == fam.halves[j].second) return false;
    }
  return true;
}

CrossoverReport crossover(double p_value, int S_count, DiagonalVariant variant) {
  if (p_value < 0) throw std::invalid_argument("crossover requires p >= 0");
  if (S_count < 3) throw std::invalid_argument("crossover requires at least 3 generators");
  CrossoverReport rep;
  rep.variant = variant;
  rep.p = p_value;
  rep.S_count = S_count;
  if (variant == DiagonalVariant::Free3) {
    for (int d = 1;; ++d) {
      long double lhs = std::pow(2.0L, d - 1);
      long double rhs = std::pow(2.0L, (d - 1) / 2.0L) * (1.0L + (d + 1) * p_value) *
                        ((2.0L * d + 1) + 2.0L * d * S_count);
      if (lhs > rhs) {
        rep.d_star = d;
        rep.lhs = static_cast<double>(lhs);
        rep.rhs = static_cast<double>(rhs);
        return rep;
      }
    }
  }
  CoxeterGraph rst({"r", "s", "t"}, {{"r", "t"}});
  for (int d = 1;; d += 2) {
    long double lhs = std::pow(2.0L, (d - 1) / 2.0L);
    long double rhs = std::pow(2.0L, (d - 1) / 4.0L) * (1.0L + (d + 1) * p_value) *
                      static_cast<long double>(khintchine_block_count(rst, 2 * d));
    if (lhs > rhs) {
      rep.d_star = d;
      rep.lhs = static_cast<double>(lhs);
      rep.rhs = static_cast<double>(rhs);
      return rep;
    }
  }
}

double structured_norm_bound(const std::vector<NormBlock>& blocks) {
  std::map<int, int> row_col;
  double acc = 0.0;
  for (const NormBlock& b : blocks) {
    if (b.norm == 0.0) continue;
    auto [it, inserted] = row_col.emplace(b.row, b.col);
    if (!inserted && it->second != b.col)
      throw std::invalid_argument("row meets two column groups");
    acc += b.norm * b.norm;
  }
  return std::sqrt(acc);
}

std::string to_string(DiagonalVariant v) {
  return v == DiagonalVariant::Free3 ? "free3" : "rst";
}

}  // namespace hecke
