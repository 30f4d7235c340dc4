#include "hecke/verify.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include "hecke/algebra.hpp"
#include "hecke/growth.hpp"
#include "hecke/io.hpp"
#include "hecke/khintchine.hpp"
#include "hecke/multipliers.hpp"

namespace hecke {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string describe(const Word& w, const CoxeterGraph& g) { return word_str(w, g); }

}  // namespace

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["lemma"] = lemma;
  j["graph"] = graph;
  j["parameters"] = parameters;
  j["cases_checked"] = cases_checked;
  j["failures"] = failures;
  j["seconds"] = seconds;
  return j;
}

const std::vector<NamedGraph>& builtin_test_graphs() {
  static const std::vector<NamedGraph> graphs = [] {
    std::vector<NamedGraph> out;
    out.push_back({"free3", CoxeterGraph::free_graph({"a", "b", "c"})});
    out.push_back({"rst", CoxeterGraph({"r", "s", "t"}, {{"r", "t"}})});
    out.push_back({"free2", CoxeterGraph::free_graph({"a", "b"})});
    out.push_back({"z2z2", CoxeterGraph({"a", "b"}, {{"a", "b"}})});
    out.push_back({"path4", CoxeterGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}})});
    out.push_back({"square4",
                   CoxeterGraph({"a", "b", "c", "d"},
                                {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}})});
    out.push_back({"k23", CoxeterGraph({"u1", "u2", "v1", "v2", "v3"},
                                       {{"u1", "v1"}, {"u1", "v2"}, {"u1", "v3"},
                                        {"u2", "v1"}, {"u2", "v2"}, {"u2", "v3"}})});
    return out;
  }();
  return graphs;
}

SuiteReport run_hecke_relations(const NamedGraph& ng) {
  Timer timer;
  const CoxeterGraph& g = ng.graph;
  SuiteReport rep{"hecke-relations", ng.name, {}, 0, {}, 0};
  HeckeElement unit = HeckeElement::unit();
  for (int s = 0; s < g.size(); ++s) {
    HeckeElement ts = HeckeElement::basis(Word{{static_cast<Letter>(s)}});
    HeckeElement lhs = hecke_multiply(ts, ts, g);
    HeckeElement rhs = unit + PolyScalar::p_power(1) * ts;
    ++rep.cases_checked;
    if (!(lhs == rhs)) rep.failures.push_back("T_" + g.label(s) + "^2 != 1 + p T_" + g.label(s));
  }
  for (const auto& [s, t] : g.edge_list()) {
    HeckeElement ts = HeckeElement::basis(Word{{static_cast<Letter>(s)}});
    HeckeElement tt = HeckeElement::basis(Word{{static_cast<Letter>(t)}});
    ++rep.cases_checked;
    if (!(hecke_multiply(ts, tt, g) == hecke_multiply(tt, ts, g)))
      rep.failures.push_back("edge commutation fails on (" + g.label(s) + "," + g.label(t) + ")");
  }
  rep.seconds = timer.seconds();
  return rep;
}

SuiteReport run_orthonormality(const NamedGraph& ng, int N) {
  Timer timer;
  const CoxeterGraph& g = ng.graph;
  SuiteReport rep{"orthonormality", ng.name, {{"N", N}}, 0, {}, 0};
  std::vector<Word> ball = enumerate_ball(g, N);
  for (const Word& w : ball) {
    HeckeElement tw = HeckeElement::basis(w);
    for (const Word& v : ball) {
      PolyScalar ip = inner_product(tw, HeckeElement::basis(v), g);
      PolyScalar expect = (w == v) ? PolyScalar(1) : PolyScalar();
      ++rep.cases_checked;
      if (!(ip == expect))
        rep.failures.push_back("<T_" + describe(w, g) + ", T_" + describe(v, g) + "> = " + ip.str());
    }
  }
  rep.seconds = timer.seconds();
  return rep;
}

SuiteReport run_expansion(const NamedGraph& ng, int N) {
  Timer timer;
  const CoxeterGraph& g = ng.graph;
  SuiteReport rep{"expansion", ng.name, {{"N", N}}, 0, {}, 0};
  std::vector<Word> ball = enumerate_ball(g, N);
  for (const Word& w : ball) {
    std::vector<OperatorTerm> terms = t_expansion(w, g);
    HeckeElement tw = HeckeElement::basis(w);
    for (const Word& v : ball) {
      HeckeElement via_terms = apply_terms(terms, HeckeElement::basis(v), g);
      HeckeElement via_product = hecke_multiply(tw, HeckeElement::basis(v), g);
      ++rep.cases_checked;
      if (!(via_terms == via_product))
        rep.failures.push_back("expansion of " + describe(w, g) + " fails on " + describe(v, g));
    }
  }
  rep.seconds = timer.seconds();
  return rep;
}

SuiteReport run_breakdown(const NamedGraph& ng, int N) {
  Timer timer;
  const CoxeterGraph& g = ng.graph;
  SuiteReport rep{"breakdown", ng.name, {{"N", N}}, 0, {}, 0};
  std::vector<Word> small = enumerate_ball(g, N - 1);
  std::vector<Word> ball = enumerate_ball(g, N);
  for (const Word& w : small) {
    for (const ExpansionTriple& t : enumerate_Aw(w, g)) {
      OperatorTerm raw{t.w_prime, clique_word(t.clique, g), t.w_doubleprime, PolyScalar(1)};
      OperatorTerm norm = normalized_term(t, g);
      BreakdownParts parts = breakdown(t, g);
      bool additive = multiply(parts.u_prime, parts.u_doubleprime, g).size() ==
                      parts.u_prime.size() + parts.u_doubleprime.size();
      for (const Word& v : ball) {
        ++rep.cases_checked;
        if (apply_term(raw, v, g) != apply_term(norm, v, g)) {
          rep.failures.push_back("breakdown of (" + describe(t.w_prime, g) + ", clique, " +
                                 describe(t.w_doubleprime, g) + ") fails on " + describe(v, g));
        }
      }
      if (!additive)
        rep.failures.push_back("u' u'' not reduced for triple of " + describe(w, g));
    }
  }
  rep.seconds = timer.seconds();
  return rep;
}

SuiteReport run_qw_identity(const NamedGraph& ng, int N) {
  Timer timer;
  const CoxeterGraph& g = ng.graph;
  SuiteReport rep{"qw-identity", ng.name, {{"N", N}}, 0, {}, 0};
  for (const Word& w : enumerate_ball(g, N - 2)) {
    ++rep.cases_checked;
    if (!delta_identity_check(w, g, N))
      rep.failures.push_back("diagonal-unit identity fails at " + describe(w, g));
  }
  rep.seconds = timer.seconds();
  return rep;
}

SuiteReport run_aux_sum(const NamedGraph& ng, int N) {
  Timer timer;
  const CoxeterGraph& g = ng.graph;
  SuiteReport rep{"aux-sum", ng.name, {{"N", N}}, 0, {}, 0};
  int maxclique = 0;
  for (Clique c : enumerate_cliques(g)) maxclique = std::max(maxclique, clique_size(c));
  for (const Word& x : enumerate_ball(g, N)) {
    for (const Word& upp_inv : prefix_set(x, g)) {
      Word upp = inverse(upp_inv, g);
      Word ux = multiply(upp, x, g);
      for (const Word& up : enumerate_ball(g, 2)) {
        if (multiply(up, ux, g).size() != ux.size() + up.size()) continue;
        for (const Word& v : prefix_set(x, g)) {
          if (!is_prefix(upp_inv, v, g)) continue;
          for (int a = 0; a <= 2 * x.size() + 2 * maxclique + 1; ++a) {
            ++rep.cases_checked;
            if (!aux_sum_check(x, up, upp, v, a, g)) {
              std::ostringstream os;
              os << "aux sum fails: x=" << describe(x, g) << " u'=" << describe(up, g)
                 << " u''=" << describe(upp, g) << " v=" << describe(v, g) << " a=" << a;
              rep.failures.push_back(os.str());
            }
          }
        }
      }
    }
  }
  rep.seconds = timer.seconds();
  return rep;
}

SuiteReport run_cutdown(const NamedGraph& ng, int n_max, int N, double q) {
  Timer timer;
  const CoxeterGraph& g = ng.graph;
  SuiteReport rep{"cutdown", ng.name, {{"N", N}, {"n_max", n_max}, {"q", q}}, 0, {}, 0};
  for (int n = 0; n <= n_max; ++n) {
    for (const Word& w : enumerate_ball(g, 2 * n + 2)) {
      ++rep.cases_checked;
      if (!cutdown_identity_check(n, w, g, N)) {
        std::ostringstream os;
        os << "cutdown identity fails: n=" << n << " w=" << describe(w, g);
        rep.failures.push_back(os.str());
      }
    }
  }
  rep.seconds = timer.seconds();
  return rep;
}

SuiteReport run_factorization(const NamedGraph& ng, int d_max, int N) {
  Timer timer;
  const CoxeterGraph& g = ng.graph;
  SuiteReport rep{"factorization", ng.name, {{"d_max", d_max}, {"N", N}}, 0, {}, 0};
  for (const Word& w : enumerate_ball(g, d_max)) {
    ++rep.cases_checked;
    if (!verify_factorization(w.letters, g, N))
      rep.failures.push_back("factorization fails for " + describe(w, g));
  }
  rep.seconds = timer.seconds();
  return rep;
}

SuiteReport run_intertwiner(const NamedGraph& ng, int d_max, int N) {
  Timer timer;
  const CoxeterGraph& g = ng.graph;
  SuiteReport rep{"intertwiner", ng.name, {{"d_max", d_max}, {"N", N}}, 0, {}, 0};
  for (const Word& w : enumerate_ball(g, d_max)) {
    if (w.empty()) continue;
    for (const KhintchineComponent& c : jd_general(w.letters, g)) {
      if (!c.nonzero) continue;
      ++rep.cases_checked;
      if (!intertwiner_check(c, w.letters, g, N)) {
        std::ostringstream os;
        os << "intertwiner fails for " << describe(w, g) << " at block k=" << c.k;
        rep.failures.push_back(os.str());
      }
    }
  }
  rep.seconds = timer.seconds();
  return rep;
}

SuiteReport run_kappa(const NamedGraph& ng, int N) {
  Timer timer;
  const CoxeterGraph& g = ng.graph;
  SuiteReport rep{"kappa", ng.name, {{"N", N}}, 0, {}, 0};
  KappaBoundReport kb = kappa_bound_check(g, N);
  rep.cases_checked = static_cast<long long>(kb.words_scanned);
  if (!(kb.constant > 0) || !std::isfinite(kb.constant))
    rep.failures.push_back("fitted constant is not finite and positive");
  rep.parameters["constant"] = kb.constant;
  rep.parameters["witness_x"] = word_str(kb.witness_x, g);
  rep.parameters["witness_a"] = kb.witness_a;
  rep.seconds = timer.seconds();
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "hecke-relations", "expansion", "qw-identity", "cutdown",
      "aux-sum",         "factorization", "intertwiner", "kappa"};
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const std::vector<NamedGraph>& graphs,
                                   int N, double q) {
  std::vector<std::future<SuiteReport>> futures;
  for (const NamedGraph& ng : graphs) {
    futures.push_back(std::async(std::launch::async, [&, name]() -> SuiteReport {
      if (name == "hecke-relations") return run_hecke_relations(ng);
      if (name == "orthonormality") return run_orthonormality(ng, N);
      if (name == "expansion") return run_expansion(ng, N);
      if (name == "breakdown") return run_breakdown(ng, std::min(N + 1, 5));
      if (name == "qw-identity") return run_qw_identity(ng, N);
      if (name == "aux-sum") return run_aux_sum(ng, std::min(N, 3));
      if (name == "cutdown") {
        if (ng.graph.size() > 4) {
          SuiteReport skip{"cutdown", ng.name, {{"skipped", "graph larger than 4 vertices"}}, 0, {}, 0};
          return skip;
        }
        return run_cutdown(ng, 2, N, q);
      }
      if (name == "factorization") return run_factorization(ng, 3, N);
      if (name == "intertwiner") return run_intertwiner(ng, 3, N);
      if (name == "kappa") return run_kappa(ng, std::max(N, 6));
      throw std::invalid_argument("unknown suite: " + name);
    }));
  }
  std::vector<SuiteReport> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace hecke
