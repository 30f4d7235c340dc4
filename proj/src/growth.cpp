#include "hecke/growth.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hecke {

std::vector<std::uint64_t> count_by_length_bfs(const CoxeterGraph& g, int K, std::size_t cap) {
  std::vector<Word> ball = enumerate_ball(g, K, cap);
  std::vector<std::uint64_t> counts(K + 1, 0);
  for (const Word& w : ball) ++counts[w.size()];
  return counts;
}

int SuccessorAutomaton::state_index(Clique c) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == c) return static_cast<int>(i);
  return -1;
}

SuccessorAutomaton build_successor_automaton(const CoxeterGraph& g) {
  SuccessorAutomaton aut;
  std::map<Clique, int> index;
  auto intern = [&](Clique c) {
    auto it = index.find(c);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(aut.states.size());
    index.emplace(c, id);
    aut.states.push_back(c);
    aut.next.emplace_back(g.size(), -1);
    return id;
  };
  intern(g.full_mask());
  for (std::size_t i = 0; i < aut.states.size(); ++i) {
    Clique state = aut.states[i];
    for (int a = 0; a < g.size(); ++a) {
      if (!((state >> a) & 1u)) continue;
      // After emitting letter a, letter s stays admissible when it commutes
      // with a and a < s (ShortLex), or when it does not commute and s != a.
      Clique nxt = 0;
      for (int s = 0; s < g.size(); ++s) {
        bool ok = g.commute(s, a) ? (((state >> s) & 1u) && a < s) : (s != a);
        if (ok) nxt |= 1u << s;
      }
      aut.next[i][a] = intern(nxt);
    }
  }
  return aut;
}

std::vector<std::uint64_t> count_by_length_automaton(const CoxeterGraph& g, int K) {
  SuccessorAutomaton aut = build_successor_automaton(g);
  std::vector<std::uint64_t> occ(aut.states.size(), 0);
  occ[0] = 1;
  std::vector<std::uint64_t> counts{1};
  for (int k = 1; k <= K; ++k) {
    std::vector<std::uint64_t> nxt(aut.states.size(), 0);
    for (std::size_t i = 0; i < aut.states.size(); ++i) {
      if (!occ[i]) continue;
      for (int a = 0; a < g.size(); ++a) {
        int j = aut.next[i][a];
        if (j < 0) continue;
        if (nxt[j] > std::numeric_limits<std::uint64_t>::max() - occ[i])
          throw std::overflow_error("word count overflow");
        nxt[j] += occ[i];
      }
    }
    occ = std::move(nxt);
    std::uint64_t total = 0;
    for (std::uint64_t c : occ) {
      if (total > std::numeric_limits<std::uint64_t>::max() - c)
        throw std::overflow_error("word count overflow");
      total += c;
    }
    counts.push_back(total);
  }
  return counts;
}

std::vector<std::uint64_t> count_by_length(const CoxeterGraph& g, int K) {
  std::vector<std::uint64_t> a = count_by_length_automaton(g, K);
  std::vector<std::uint64_t> b = count_by_length_bfs(g, K);
  if (a != b) throw std::logic_error("automaton and bfs word counts disagree");
  return a;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool language_is_finite(const CoxeterGraph& g) {
  // The group is finite iff the graph is complete, in which case the longest
  // element has length |S|; a_{|S|+1} = 0 is conclusive either way.
  try {
    std::vector<std::uint64_t> counts = count_by_length_automaton(g, g.size() + 1);
    return counts.back() == 0;
  } catch (const std::overflow_error&) {
    return false;
  }
}

}  // namespace

double growth_rate(const CoxeterGraph& g, double tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  if (language_is_finite(g)) return kInf;
  SuccessorAutomaton aut = build_successor_automaton(g);
  int n = static_cast<int>(aut.states.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < g.size(); ++a)
      if (aut.next[i][a] >= 0) m(aut.next[i][a], i) += 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
  double lambda = 0.0;
  for (int i = 0; i < n; ++i) lambda = std::max(lambda, std::abs(es.eigenvalues()[i]));
  if (lambda <= 0) return kInf;
  return 1.0 / lambda;
}

double growth_rate_ratio_estimate(const CoxeterGraph& g, double tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  if (language_is_finite(g)) return kInf;
  // Geometric-mean ratio over a window, pushed as far as 64-bit counts allow.
  int K = 8;
  std::vector<std::uint64_t> counts;
  while (true) {
    try {
      counts = count_by_length_automaton(g, K);
    } catch (const std::overflow_error&) {
      K -= 8;
      counts = count_by_length_automaton(g, K);
      break;
    }
    if (K >= 512) break;
    K += 8;
  }
  int hi = static_cast<int>(counts.size()) - 1;
  int window = std::min(8, hi - 1);
  double ratio = std::pow(static_cast<double>(counts[hi]) / static_cast<double>(counts[hi - window]),
                          1.0 / window);
  return 1.0 / ratio;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Factor: return "Factor";
    case Classification::FactorPlusC: return "FactorPlusC";
    case Classification::Boundary: return "Boundary";
    case Classification::NotApplicable: return "NotApplicable";
  }
  return "?";
}

FactorReport factor_classification(const CoxeterGraph& g, double q, double tol) {
  FactorReport rep;
  rep.q = q;
  if (!is_reduced_system(g) || g.size() < 3) {
    rep.classification = Classification::NotApplicable;
    return rep;
  }
  double rho = growth_rate(g, std::min(tol, 1e-12));
  rep.rho = rho;
  rep.rho_inv = 1.0 / rho;
  if (std::abs(q - rep.rho) <= tol || std::abs(q - rep.rho_inv) <= tol)
    rep.classification = Classification::Boundary;
  else if (q > rep.rho && q < rep.rho_inv)
    rep.classification = Classification::Factor;
  else
    rep.classification = Classification::FactorPlusC;
  return rep;
}

GrowthReport growth_report(const CoxeterGraph& g, int K, double tol) {
  GrowthReport rep;
  rep.counts = count_by_length(g, K);
  rep.method = "transfer-matrix";
  rep.rho = growth_rate(g, tol);
  rep.finite_group = is_infinite_rho(rep.rho);
  rep.rho_inv = rep.finite_group ? 0.0 : 1.0 / rep.rho;
  return rep;
}

std::int64_t kappa_count(const Word& x, int a, const CoxeterGraph& g) {
  if (a < 0 || a > x.size()) throw std::invalid_argument("kappa_count requires 0 <= a <= |x|");
  std::int64_t n = 0;
  for (const Word& w : prefix_set(x, g))
    if (w.size() == a) ++n;
  return n;
}

KappaBoundReport kappa_bound_check(const CoxeterGraph& g, int N) {
  KappaBoundReport rep;
  rep.exponent = g.size() - 2;
  std::vector<Word> ball = enumerate_ball(g, N);
  rep.words_scanned = ball.size();
  for (const Word& x : ball) {
    std::vector<std::int64_t> by_len(x.size() + 1, 0);
    for (const Word& w : prefix_set(x, g)) ++by_len[w.size()];
    for (int a = 1; a <= x.size(); ++a) {
      double c = static_cast<double>(by_len[a]) / std::pow(static_cast<double>(a), rep.exponent);
      if (c > rep.constant) {
        rep.constant = c;
        rep.witness_x = x;
        rep.witness_a = a;
        rep.witness_kappa = by_len[a];
      }
    }
  }
  return rep;
}

}  // namespace hecke
