#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hecke/coxeter.hpp"

namespace hecke {

/// Result of one verification suite on one graph.
struct SuiteReport {
  std::string lemma;            // suite name
  std::string graph;            // graph name or description
  nlohmann::json parameters;
  long long cases_checked = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

struct NamedGraph {
  std::string name;
  CoxeterGraph graph;
};

/// The fixed test set: free3, rst, free2, z2z2, path4, square4, k23.
const std::vector<NamedGraph>& builtin_test_graphs();

SuiteReport run_hecke_relations(const NamedGraph& ng);
SuiteReport run_orthonormality(const NamedGraph& ng, int N);
SuiteReport run_expansion(const NamedGraph& ng, int N);
SuiteReport run_breakdown(const NamedGraph& ng, int N);
SuiteReport run_qw_identity(const NamedGraph& ng, int N);
SuiteReport run_aux_sum(const NamedGraph& ng, int N);
SuiteReport run_cutdown(const NamedGraph& ng, int n_max, int N, double q);
SuiteReport run_factorization(const NamedGraph& ng, int d_max, int N);
SuiteReport run_intertwiner(const NamedGraph& ng, int d_max, int N);
SuiteReport run_kappa(const NamedGraph& ng, int N);

/// Runs one named suite ("hecke-relations", "expansion", "qw-identity",
/// "cutdown", "aux-sum", "factorization", "intertwiner", "kappa") over the
/// given graphs; unknown names throw std::invalid_argument.
std::vector<SuiteReport> run_suite(const std::string& name, const std::vector<NamedGraph>& graphs,
                                   int N, double q);

const std::vector<std::string>& suite_names();

}  // namespace hecke
