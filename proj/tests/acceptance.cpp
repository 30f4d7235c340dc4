// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and ball radii are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/growth.hpp"
#include "hecke/io.hpp"
#include "hecke/khintchine.hpp"
#include "hecke/multipliers.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

int failures = 0;

void run(int index, const std::string& name, const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  std::printf("[%s] %02d %-22s %9.1f ms%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(), ms,
              detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool suites_ok(const std::vector<SuiteReport>& reps, std::string& detail) {
  long long cases = 0;
  for (const SuiteReport& r : reps) {
    cases += r.cases_checked;
    if (!r.ok()) {
      detail = r.graph + ": " + r.failures.front();
      return false;
    }
  }
  detail = std::to_string(cases) + " cases";
  return true;
}

}  // namespace

int main() {
  const auto& graphs = builtin_test_graphs();
  const NamedGraph* free3 = &graphs[0];
  const NamedGraph* rst = &graphs[1];
  const NamedGraph* k23 = nullptr;
  for (const NamedGraph& ng : graphs)
    if (ng.name == "k23") k23 = &ng;

  run(1, "hecke-relations", [&](std::string& detail) {
    std::vector<SuiteReport> reps;
    for (const NamedGraph& ng : graphs) reps.push_back(run_hecke_relations(ng));
    return suites_ok(reps, detail);
  });

  run(2, "orthonormality", [&](std::string& detail) {
    std::vector<SuiteReport> reps;
    for (const NamedGraph& ng : graphs) reps.push_back(run_orthonormality(ng, 4));
    return suites_ok(reps, detail);
  });

  run(3, "expansion", [&](std::string& detail) {
    std::vector<SuiteReport> reps;
    for (const NamedGraph& ng : graphs) reps.push_back(run_expansion(ng, 4));
    return suites_ok(reps, detail);
  });

  run(4, "breakdown", [&](std::string& detail) {
    std::vector<SuiteReport> reps;
    for (const NamedGraph& ng : graphs) reps.push_back(run_breakdown(ng, 5));
    return suites_ok(reps, detail);
  });

  run(5, "qw-identity+aux-sum", [&](std::string& detail) {
    std::vector<SuiteReport> reps;
    for (const NamedGraph& ng : graphs) {
      reps.push_back(run_qw_identity(ng, 5));
      reps.push_back(run_aux_sum(ng, ng.graph.size() <= 3 ? 4 : 3));
    }
    return suites_ok(reps, detail);
  });

  run(6, "cutdown", [&](std::string& detail) {
    std::vector<SuiteReport> reps;
    for (const NamedGraph& ng : graphs)
      if (ng.graph.size() <= 4) reps.push_back(run_cutdown(ng, 2, 4, 1.0));
    return suites_ok(reps, detail);
  });

  run(7, "growth", [&](std::string& detail) {
    auto counts = count_by_length(free3->graph, 12);
    if (counts[0] != 1) return false;
    for (int k = 1; k <= 12; ++k)
      if (counts[k] != (3ull << (k - 1))) {
        detail = "free3 count mismatch at k=" + std::to_string(k);
        return false;
      }
    double rho = growth_rate(free3->graph, 1e-9);
    if (std::abs(rho - 0.5) > 1e-6) {
      detail = "rho(free3) = " + std::to_string(rho);
      return false;
    }
    FactorReport f1 = factor_classification(free3->graph, 1.0, 1e-9);
    FactorReport f3 = factor_classification(free3->graph, 3.0, 1e-9);
    if (std::abs(f1.rho - 0.5) > 1e-6 || std::abs(f1.rho_inv - 2.0) > 1e-6) {
      detail = "interval mismatch";
      return false;
    }
    if (f1.classification != Classification::Factor ||
        f3.classification != Classification::FactorPlusC) {
      detail = "classification mismatch";
      return false;
    }
    for (const NamedGraph& ng : graphs)
      if (count_by_length_bfs(ng.graph, 10) != count_by_length_automaton(ng.graph, 10)) {
        detail = "count oracle disagreement on " + ng.name;
        return false;
      }
    detail = "a_k and [0.5, 2] verified";
    return true;
  });

  run(8, "operator-norm", [&](std::string& detail) {
    const CoxeterGraph& g = free3->graph;
    Word s{{0}};
    auto terms = t_expansion(s, g);
    for (double q : {0.25, 1.0, 4.0}) {
      double got = operator_norm_lower(terms, g, 2, q, 1e-12);
      double expect = std::max(std::sqrt(q), 1.0 / std::sqrt(q));
      if (std::abs(got - expect) > 1e-9) {
        detail = "q=" + std::to_string(q) + " got " + std::to_string(got);
        return false;
      }
    }
    return true;
  });

  run(9, "kraus-grid", [&](std::string&) {
    for (int k = 1; k <= 99; ++k)
      for (double q : {1.0, 2.0})
        if (!kraus_check(k / 100.0, q)) return false;
    return true;
  });

  run(10, "factorization", [&](std::string& detail) {
    std::vector<SuiteReport> reps;
    for (const NamedGraph& ng : graphs) reps.push_back(run_factorization(ng, 3, 4));
    return suites_ok(reps, detail);
  });

  run(11, "crossover", [&](std::string& detail) {
    CrossoverReport rep = crossover(0.0, 3, DiagonalVariant::Free3);
    if (rep.d_star != 15) {
      detail = "d* = " + std::to_string(rep.d_star);
      return false;
    }
    auto holds = [](int d) {
      long double lhs = std::pow(2.0L, d - 1);
      long double rhs = std::pow(2.0L, (d - 1) / 2.0L) * ((2.0L * d + 1) + 2.0L * d * 3);
      return lhs <= rhs;
    };
    if (!holds(14) || holds(15)) {
      detail = "inequality edge mismatch";
      return false;
    }
    std::ostringstream os;
    os << "d*=15, " << rep.lhs << " > " << rep.rhs;
    detail = os.str();
    return true;
  });

  run(12, "diagonal-families", [&](std::string&) {
    for (int d = 1; d <= 7; ++d) {
      DiagonalFamily fam = diagonal_family(free3->graph, d, DiagonalVariant::Free3);
      if (fam.words.size() != (1u << (d - 1))) return false;
      if (!diagonal_condition_holds(fam)) return false;
    }
    for (int d = 1; d <= 7; d += 2) {
      DiagonalFamily fam = diagonal_family(rst->graph, d, DiagonalVariant::Rst);
      if (fam.words.size() != (1u << ((d - 1) / 2))) return false;
      if (!diagonal_condition_holds(fam)) return false;
    }
    return true;
  });

  run(13, "kappa-bound", [&](std::string& detail) {
    std::ostringstream os;
    for (const NamedGraph& ng : graphs) {
      KappaBoundReport rep = kappa_bound_check(ng.graph, 6);
      if (!(rep.constant > 0) || !std::isfinite(rep.constant)) {
        detail = "no finite constant on " + ng.name;
        return false;
      }
      os << ng.name << ":C=" << rep.constant << ' ';
    }
    detail = os.str();
    return true;
  });

  run(14, "ccap-demo", [&](std::string& detail) {
    const CoxeterGraph& g = free3->graph;
    HeckeElement a = HeckeElement::unit();
    a += HeckeElement::basis(reduce(std::vector<Letter>{0}, g));
    a += HeckeElement::basis(reduce(std::vector<Letter>{0, 1}, g));
    a += HeckeElement::basis(reduce(std::vector<Letter>{0, 1, 2}, g));
    std::vector<std::pair<Rational, int>> schedule;
    for (int k = 1; k <= 10; ++k) schedule.emplace_back(Rational(1) - Rational(1, 1 << k), k);
    auto gaps = ccap_convergence_demo(g, a, schedule, 1.0);
    for (std::size_t i = 1; i < gaps.size(); ++i)
      if (!(gaps[i] < gaps[i - 1])) {
        detail = "not strictly decreasing at step " + std::to_string(i);
        return false;
      }
    std::ostringstream os;
    os << "gap falls " << gaps.front() << " -> " << gaps.back();
    detail = os.str();
    return gaps.back() < 0.01;
  });

  run(15, "hypotheses", [&](std::string& detail) {
    if (k23 == nullptr) {
      detail = "k23 graph missing";
      return false;
    }
    if (is_hyperbolic(k23->graph)) {
      detail = "k23 reported hyperbolic";
      return false;
    }
    const CoxeterGraph& g = rst->graph;
    if (!is_reduced_system(g) || !is_hyperbolic(g)) {
      detail = "rst hypotheses mismatch";
      return false;
    }
    auto sep = find_separating_vertex(g);
    if (!sep) {
      detail = "rst has no separating vertex";
      return false;
    }
    detail = "separating vertex " + g.label(*sep);
    return true;
  });

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
