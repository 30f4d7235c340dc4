#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Letter = std::uint8_t;

/// Set of generators as a bitmask. Cliques, links and stars all live here.
using Clique = std::uint32_t;

inline int clique_size(Clique c) { return __builtin_popcount(c); }

/// Thrown when a ball enumeration exceeds its element cap.
struct BallCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Commutation graph of a right-angled Coxeter system: vertices are the
/// generators, an edge means the two generators commute (m = 2), absence of
/// an edge means they generate an infinite dihedral pair (m = infinity).
class CoxeterGraph {
 public:
  CoxeterGraph(std::vector<std::string> labels,
               const std::vector<std::pair<std::string, std::string>>& edges);

  static CoxeterGraph free_graph(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int s) const { return labels_[s]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws std::invalid_argument for an unknown generator label.
  int index_of(const std::string& label) const;

  bool adjacent(int s, int t) const { return (adj_[s] >> t) & 1u; }
  /// Distinct generators joined by an edge commute; a generator never
  /// commutes with itself.
  bool commute(int s, int t) const { return s != t && adjacent(s, t); }

  Clique link(int s) const { return adj_[s]; }
  Clique star(int s) const { return adj_[s] | (1u << s); }
  /// Intersection of links over `set`; the full vertex set when `set` is empty.
  Clique link_of_set(Clique set) const;
  Clique full_mask() const { return size() == 32 ? ~0u : (1u << size()) - 1u; }

  bool is_clique(Clique set) const;
  std::vector<std::pair<int, int>> edge_list() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Clique> adj_;
};

/// A group element in canonical normal form: the ShortLex-least reduced
/// expression under adjacent commuting swaps. Equality of Words is equality
/// in the group.
struct Word {
  std::vector<Letter> letters;

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    return letters < o.letters;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w.letters) {
      h ^= l;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// ShortLex-least rearrangement of an already reduced letter sequence.
Word canonicalize(std::vector<Letter> letters, const CoxeterGraph& g);

/// Canonical reduced representative of an arbitrary letter sequence.
/// Throws std::invalid_argument when a letter is out of range.
Word reduce(std::span<const Letter> letters, const CoxeterGraph& g);

/// w * s, renormalized. Length changes by exactly one.
Word right_mul(const Word& w, Letter s, const CoxeterGraph& g);
/// s * w, renormalized.
Word left_mul(Letter s, const Word& w, const CoxeterGraph& g);

Word multiply(const Word& a, const Word& b, const CoxeterGraph& g);
Word inverse(const Word& w, const CoxeterGraph& g);

/// w <= x in the weak right order: |w^-1 x| == |x| - |w|.
bool is_prefix(const Word& w, const Word& x, const CoxeterGraph& g);

/// Letters s with |ws| < |w|: the maximal clique that can be cut off the end.
Clique suffix_clique(const Word& w, const CoxeterGraph& g);
/// Letters s with |sw| < |w|.
Clique prefix_clique(const Word& w, const CoxeterGraph& g);

/// The clique's vertices as a word, letters in generator order.
Word clique_word(Clique c, const CoxeterGraph& g);

/// Splits v = v1 * v2 where v2 is the maximal clique suffix of v minus
/// `lambda` (set difference). Returns (v1, v2 as a clique).
/// Throws std::invalid_argument when `lambda` is not a clique.
std::pair<Word, Clique> clique_split(const Word& v, Clique lambda, const CoxeterGraph& g);

/// Maximal clique at the start of g^-1 x; requires gw <= x.
Clique lambda_gx(const Word& gw, const Word& x, const CoxeterGraph& g);

/// C(g, x) = {w : g <= w <= g*Lambda_{g,x}}, of cardinality 2^|Lambda_{g,x}|.
/// Throws std::invalid_argument unless g <= x.
std::vector<Word> interval_set(const Word& gw, const Word& x, const CoxeterGraph& g);

/// All w <= x, sorted ShortLex.
std::vector<Word> prefix_set(const Word& x, const CoxeterGraph& g);

/// All cliques including the empty one, sorted by (size, mask).
std::vector<Clique> enumerate_cliques(const CoxeterGraph& g);

std::size_t default_ball_cap();

/// All group elements of length <= N, sorted ShortLex.
/// Throws BallCapExceeded past `cap` elements.
std::vector<Word> enumerate_ball(const CoxeterGraph& g, int N, std::size_t cap = 0);

/// True iff the complement of the commutation graph is connected.
bool is_reduced_system(const CoxeterGraph& g);

/// True iff the graph has no induced 4-cycle.
bool is_hyperbolic(const CoxeterGraph& g);

/// A vertex v with at least two vertices outside Star(v), if one exists.
std::optional<int> find_separating_vertex(const CoxeterGraph& g);

std::string word_str(const Word& w, const CoxeterGraph& g);

}  // namespace hecke
