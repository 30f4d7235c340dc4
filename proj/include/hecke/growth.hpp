#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hecke/coxeter.hpp"

namespace hecke {

/// Word counts by length with the spectral data of the fundamental series.
struct GrowthReport {
  std::vector<std::uint64_t> counts;  // counts[k] = #{w : |w| = k}
  double rho = 0.0;                   // radius of convergence; +inf for finite groups
  double rho_inv = 0.0;
  std::string method;                 // "transfer-matrix" or "bfs"
  bool finite_group = false;
};

inline bool is_infinite_rho(double rho) { return rho == std::numeric_limits<double>::infinity(); }

/// Counts by breadth-first enumeration with normal-form dedup.
std::vector<std::uint64_t> count_by_length_bfs(const CoxeterGraph& g, int K, std::size_t cap = 0);

/// Deterministic automaton over the ShortLex normal-form language: the state
/// is the set of letters admissible as the next normal-form letter.
struct SuccessorAutomaton {
  std::vector<Clique> states;             // states[0] is the start state
  std::vector<std::vector<int>> next;     // next[i][s] = state index or -1
  int state_index(Clique c) const;
};

SuccessorAutomaton build_successor_automaton(const CoxeterGraph& g);

/// Counts by powers of the automaton's transfer matrix. Exact in 64-bit
/// (throws std::overflow_error if a count would overflow).
std::vector<std::uint64_t> count_by_length_automaton(const CoxeterGraph& g, int K);

/// Counts computed both ways and cross-checked; throws std::logic_error on
/// disagreement.
std::vector<std::uint64_t> count_by_length(const CoxeterGraph& g, int K);

/// Radius of convergence of the fundamental power series, via the dominant
/// eigenvalue of the transfer matrix (rho = 1/lambda_max); +infinity for
/// finite groups. The ratio estimate a_{k+1}/a_k is exposed for cross-checks.
double growth_rate(const CoxeterGraph& g, double tol);
double growth_rate_ratio_estimate(const CoxeterGraph& g, double tol);

enum class Classification { Factor, FactorPlusC, Boundary, NotApplicable };

std::string to_string(Classification c);

struct FactorReport {
  Classification classification = Classification::NotApplicable;
  double rho = 0.0;
  double rho_inv = 0.0;
  double q = 0.0;
};

/// Factor for q in [rho, 1/rho], FactorPlusC outside, Boundary within tol of
/// an endpoint; NotApplicable unless the system is reduced with >= 3 generators.
FactorReport factor_classification(const CoxeterGraph& g, double q, double tol);

GrowthReport growth_report(const CoxeterGraph& g, int K, double tol);

/// kappa_x(a) = #{w <= x : |w| = a}.
std::int64_t kappa_count(const Word& x, int a, const CoxeterGraph& g);

struct KappaBoundReport {
  double constant = 0.0;      // smallest C with kappa_x(a) <= C a^{|S|-2}, a >= 1
  Word witness_x;
  int witness_a = 1;
  std::int64_t witness_kappa = 0;
  int exponent = 0;           // |S| - 2
  std::size_t words_scanned = 0;
};

/// Fits the uniform polynomial bound over the ball of radius N.
KappaBoundReport kappa_bound_check(const CoxeterGraph& g, int N);

}  // namespace hecke
