#include "hecke/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hecke {

CoxeterGraph::CoxeterGraph(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)), adj_(labels_.size(), 0) {
  if (labels_.empty() || labels_.size() > 16)
    throw std::invalid_argument("generator count must be in [1, 16]");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw std::invalid_argument("duplicate generator label: " + labels_[i]);
  for (const auto& [a, b] : edges) {
    int s = index_of(a), t = index_of(b);
    if (s == t) throw std::invalid_argument("self-edge on generator " + a);
    adj_[s] |= 1u << t;
    adj_[t] |= 1u << s;
  }
}

CoxeterGraph CoxeterGraph::free_graph(std::vector<std::string> labels) {
  return CoxeterGraph(std::move(labels), {});
}

int CoxeterGraph::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator label: " + label);
}

Clique CoxeterGraph::link_of_set(Clique set) const {
  Clique acc = full_mask();
  for (int s = 0; s < size(); ++s)
    if ((set >> s) & 1u) acc &= adj_[s];
  return acc;
}

bool CoxeterGraph::is_clique(Clique set) const {
  for (int s = 0; s < size(); ++s) {
    if (!((set >> s) & 1u)) continue;
    Clique rest = set & ~(1u << s);
    if ((rest & adj_[s]) != rest) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> CoxeterGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < size(); ++s)
    for (int t = s + 1; t < size(); ++t)
      if (adjacent(s, t)) out.emplace_back(s, t);
  return out;
}

Word canonicalize(std::vector<Letter> letters, const CoxeterGraph& g) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  while (!letters.empty()) {
    // A letter can move to the front iff everything before it commutes with
    // it; the least such letter is the next normal-form letter.
    int best = -1;
    for (int i = 0; i < static_cast<int>(letters.size()); ++i) {
      bool movable = true;
      for (int j = 0; j < i; ++j) {
        if (!g.commute(letters[j], letters[i])) {
          movable = false;
          break;
        }
      }
      if (movable && (best < 0 || letters[i] < letters[best])) best = i;
    }
    out.push_back(letters[best]);
    letters.erase(letters.begin() + best);
  }
  return Word{std::move(out)};
}

Word right_mul(const Word& w, Letter s, const CoxeterGraph& g) {
  std::vector<Letter> ls = w.letters;
  for (int i = static_cast<int>(ls.size()) - 1; i >= 0; --i) {
    if (ls[i] == s) {
      ls.erase(ls.begin() + i);
      return canonicalize(std::move(ls), g);
    }
    if (!g.commute(ls[i], s)) break;
  }
  ls.push_back(s);
  return canonicalize(std::move(ls), g);
}

Word left_mul(Letter s, const Word& w, const CoxeterGraph& g) {
  std::vector<Letter> ls = w.letters;
  for (int i = 0; i < static_cast<int>(ls.size()); ++i) {
    if (ls[i] == s) {
      ls.erase(ls.begin() + i);
      return canonicalize(std::move(ls), g);
    }
    if (!g.commute(ls[i], s)) break;
  }
  ls.insert(ls.begin(), s);
  return canonicalize(std::move(ls), g);
}

Word reduce(std::span<const Letter> letters, const CoxeterGraph& g) {
  for (Letter l : letters)
    if (l >= g.size()) throw std::invalid_argument("letter index out of range");
  Word acc;
  for (Letter l : letters) acc = right_mul(acc, l, g);
  return acc;
}

Word multiply(const Word& a, const Word& b, const CoxeterGraph& g) {
  Word acc = a;
  for (Letter l : b.letters) acc = right_mul(acc, l, g);
  return acc;
}

Word inverse(const Word& w, const CoxeterGraph& g) {
  std::vector<Letter> rev(w.letters.rbegin(), w.letters.rend());
  return canonicalize(std::move(rev), g);
}

bool is_prefix(const Word& w, const Word& x, const CoxeterGraph& g) {
  if (w.size() > x.size()) return false;
  return multiply(inverse(w, g), x, g).size() == x.size() - w.size();
}

Clique suffix_clique(const Word& w, const CoxeterGraph& g) {
  Clique out = 0;
  for (int s = 0; s < g.size(); ++s) {
    for (int i = w.size() - 1; i >= 0; --i) {
      if (w.letters[i] == s) {
        out |= 1u << s;
        break;
      }
      if (!g.commute(w.letters[i], s)) break;
    }
  }
  return out;
}

Clique prefix_clique(const Word& w, const CoxeterGraph& g) {
  Clique out = 0;
  for (int s = 0; s < g.size(); ++s) {
    for (int i = 0; i < w.size(); ++i) {
      if (w.letters[i] == s) {
        out |= 1u << s;
        break;
      }
      if (!g.commute(w.letters[i], s)) break;
    }
  }
  return out;
}

Word clique_word(Clique c, const CoxeterGraph& g) {
  std::vector<Letter> ls;
  for (int s = 0; s < g.size(); ++s)
    if ((c >> s) & 1u) ls.push_back(static_cast<Letter>(s));
  return Word{std::move(ls)};
}

std::pair<Word, Clique> clique_split(const Word& v, Clique lambda, const CoxeterGraph& g) {
  if (!g.is_clique(lambda)) throw std::invalid_argument("lambda is not a clique");
  Clique v2 = suffix_clique(v, g) & ~lambda;
  Word v1 = multiply(v, clique_word(v2, g), g);  // clique words are involutions
  return {std::move(v1), v2};
}

Clique lambda_gx(const Word& gw, const Word& x, const CoxeterGraph& g) {
  if (!is_prefix(gw, x, g)) throw std::invalid_argument("lambda_gx requires g <= x");
  return prefix_clique(multiply(inverse(gw, g), x, g), g);
}

std::vector<Word> interval_set(const Word& gw, const Word& x, const CoxeterGraph& g) {
  Clique lam = lambda_gx(gw, x, g);
  std::vector<Word> out;
  Clique sub = 0;
  while (true) {
    out.push_back(multiply(gw, clique_word(sub, g), g));
    if (sub == lam) break;
    sub = (sub - lam) & lam;  // next submask
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> prefix_set(const Word& x, const CoxeterGraph& g) {
  std::unordered_set<Word, WordHash> seen;
  std::vector<std::pair<Word, Word>> frontier{{Word{}, x}};  // (g, g^-1 x)
  seen.insert(Word{});
  std::vector<Word> out{Word{}};
  while (!frontier.empty()) {
    std::vector<std::pair<Word, Word>> next;
    for (const auto& [gw, rest] : frontier) {
      Clique pc = prefix_clique(rest, g);
      for (int s = 0; s < g.size(); ++s) {
        if (!((pc >> s) & 1u)) continue;
        Word gw2 = right_mul(gw, static_cast<Letter>(s), g);
        if (seen.insert(gw2).second) {
          Word rest2 = left_mul(static_cast<Letter>(s), rest, g);
          out.push_back(gw2);
          next.emplace_back(std::move(gw2), std::move(rest2));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clique> enumerate_cliques(const CoxeterGraph& g) {
  std::vector<Clique> out;
  auto grow = [&](auto&& self, Clique base, int from) -> void {
    out.push_back(base);
    for (int s = from; s < g.size(); ++s) {
      Clique bit = 1u << s;
      if ((base & g.link(s)) == base) self(self, base | bit, s + 1);
    }
  };
  grow(grow, 0, 0);
  std::sort(out.begin(), out.end(), [](Clique a, Clique b) {
    if (clique_size(a) != clique_size(b)) return clique_size(a) < clique_size(b);
    return a < b;
  });
  return out;
}

std::size_t default_ball_cap() {
  if (const char* env = std::getenv("HECKE_MAX_BALL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

std::vector<Word> enumerate_ball(const CoxeterGraph& g, int N, std::size_t cap) {
  if (cap == 0) cap = default_ball_cap();
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> out{Word{}};
  seen.insert(Word{});
  std::vector<Word> level{Word{}};
  for (int k = 1; k <= N; ++k) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (int s = 0; s < g.size(); ++s) {
        Word w2 = right_mul(w, static_cast<Letter>(s), g);
        if (w2.size() != k) continue;
        if (seen.insert(w2).second) {
          if (seen.size() > cap)
            throw BallCapExceeded("ball enumeration exceeded cap of " + std::to_string(cap));
          out.push_back(w2);
          next.push_back(std::move(w2));
        }
      }
    }
    level = std::move(next);
    if (level.empty()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_reduced_system(const CoxeterGraph& g) {
  int n = g.size();
  if (n <= 1) return true;
  std::vector<bool> vis(n, false);
  std::queue<int> q;
  q.push(0);
  vis[0] = true;
  int count = 1;
  while (!q.empty()) {
    int s = q.front();
    q.pop();
    for (int t = 0; t < n; ++t) {
      if (t != s && !g.adjacent(s, t) && !vis[t]) {
        vis[t] = true;
        ++count;
        q.push(t);
      }
    }
  }
  return count == n;
}

bool is_hyperbolic(const CoxeterGraph& g) {
  int n = g.size();
  std::vector<int> v(4);
  for (v[0] = 0; v[0] < n; ++v[0])
    for (v[1] = v[0] + 1; v[1] < n; ++v[1])
      for (v[2] = v[1] + 1; v[2] < n; ++v[2])
        for (v[3] = v[2] + 1; v[3] < n; ++v[3]) {
          int edges = 0;
          bool deg2 = true;
          for (int i = 0; i < 4; ++i) {
            int d = 0;
            for (int j = 0; j < 4; ++j)
              if (i != j && g.adjacent(v[i], v[j])) ++d;
            edges += d;
            if (d != 2) deg2 = false;
          }
          // 4 vertices, every induced degree 2: that is an induced square.
          if (deg2 && edges == 8) return false;
        }
  return true;
}

std::optional<int> find_separating_vertex(const CoxeterGraph& g) {
  for (int s = 0; s < g.size(); ++s) {
    int outside = g.size() - clique_size(g.star(s));
    if (outside >= 2) return s;
  }
  return std::nullopt;
}

std::string word_str(const Word& w, const CoxeterGraph& g) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (int i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << g.label(w.letters[i]);
  }
  return os.str();
}

}  // namespace hecke
