// Command-line front end: growth reports, factoriality classification,
// verification suites, expansion printing, and hypothesis checks.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hecke/algebra.hpp"
#include "hecke/growth.hpp"
#include "hecke/io.hpp"
#include "hecke/khintchine.hpp"
#include "hecke/multipliers.hpp"
#include "hecke/verify.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
  std::string graph_path;
  double q = 1.0;
  int ball_radius = 4;
  double tol = 1e-9;
  std::string output;
  std::string format = "json";
};

std::ostream& open_output(const RunConfig& cfg, std::ofstream& file) {
  if (cfg.output.empty()) return std::cout;
  file.open(cfg.output);
  if (!file) throw std::invalid_argument("cannot open output file: " + cfg.output);
  return file;
}

// CLI words use bracketed space-separated labels: "[t r s]", "[e]".
hecke::Word parse_cli_word(std::string text, const hecke::CoxeterGraph& g) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
    text = text.substr(1, text.size() - 2);
  return hecke::parse_word(text, g);
}

hecke::CoxeterGraph require_graph(const RunConfig& cfg) {
  if (cfg.graph_path.empty())
    throw std::invalid_argument("this command needs --graph PATH");
  return hecke::load_graph(cfg.graph_path);
}

int emit(const RunConfig& cfg, const json& j, const std::string& text_form,
         const std::string& csv_form = "") {
  std::ofstream file;
  std::ostream& os = open_output(cfg, file);
  if (cfg.format == "json")
    os << j.dump(2) << '\n';
  else if (cfg.format == "csv" && !csv_form.empty())
    os << csv_form;
  else
    os << text_form << '\n';
  return 0;
}

int cmd_growth(const RunConfig& cfg) {
  hecke::CoxeterGraph g = require_graph(cfg);
  int K = std::max(cfg.ball_radius, 10);
  hecke::GrowthReport rep = hecke::growth_report(g, K, cfg.tol);
  json j;
  j["counts"] = rep.counts;
  j["method"] = rep.method;
  if (rep.finite_group) {
    j["rho"] = "infinite";
  } else {
    j["rho"] = rep.rho;
    j["interval"] = {rep.rho, rep.rho_inv};
  }
  std::ostringstream text;
  text << "counts:";
  for (auto c : rep.counts) text << ' ' << c;
  if (rep.finite_group)
    text << "\nrho: infinite (finite group)";
  else
    text << "\nrho: " << rep.rho << "  interval: [" << rep.rho << ", " << rep.rho_inv << "]";
  return emit(cfg, j, text.str(), hecke::growth_csv(rep.counts));
}

int cmd_classify(const RunConfig& cfg) {
  hecke::CoxeterGraph g = require_graph(cfg);
  hecke::FactorReport rep = hecke::factor_classification(g, cfg.q, cfg.tol);
  json j;
  j["q"] = rep.q;
  j["classification"] = hecke::to_string(rep.classification);
  if (rep.classification != hecke::Classification::NotApplicable) {
    j["rho"] = rep.rho;
    j["interval"] = {rep.rho, rep.rho_inv};
  }
  std::ostringstream text;
  text << hecke::to_string(rep.classification);
  if (rep.classification == hecke::Classification::Factor)
    text << " (q ∈ [" << rep.rho << ", " << rep.rho_inv << "])";
  else if (rep.classification == hecke::Classification::FactorPlusC)
    text << " (q ∉ [" << rep.rho << ", " << rep.rho_inv << "])";
  return emit(cfg, j, text.str());
}

int cmd_expand(const RunConfig& cfg, const std::string& word_text) {
  hecke::CoxeterGraph g = require_graph(cfg);
  hecke::Word w = parse_cli_word(word_text, g);
  auto terms = hecke::t_expansion(w, g);
  json j = json::array();
  std::ostringstream text;
  for (const auto& t : terms) {
    json jt;
    jt["weight"] = t.weight.str();
    jt["creator"] = hecke::format_word(t.creator, g);
    jt["diagonal"] = hecke::format_word(t.diagonal, g);
    jt["annihilator"] = hecke::format_word(t.annihilator, g);
    j.push_back(jt);
    text << t.weight.str() << " * T1[" << hecke::format_word(t.creator, g) << "] P["
         << hecke::format_word(t.diagonal, g) << "] T1["
         << hecke::format_word(t.annihilator, g) << "]\n";
  }
  std::string s = text.str();
  if (!s.empty()) s.pop_back();
  return emit(cfg, j, s);
}

int cmd_mult(const RunConfig& cfg, const std::string& w1, const std::string& w2) {
  hecke::CoxeterGraph g = require_graph(cfg);
  hecke::HeckeElement a = hecke::HeckeElement::basis(parse_cli_word(w1, g));
  hecke::HeckeElement b = hecke::HeckeElement::basis(parse_cli_word(w2, g));
  hecke::HeckeElement prod = hecke::hecke_multiply(a, b, g);
  json j;
  j["canonical"] = hecke::format_element(prod, g);
  json terms = json::array();
  for (const auto& [w, c] : prod.terms())
    terms.push_back({{"word", hecke::format_word(w, g)}, {"coeff", c.str()}});
  j["terms"] = terms;
  return emit(cfg, j, hecke::format_element_pretty(prod, g));
}

int cmd_khintchine(const RunConfig& cfg, int d) {
  hecke::CoxeterGraph g = require_graph(cfg);
  json j;
  j["d"] = d;
  j["block_count"] = hecke::khintchine_block_count(g, d);
  std::ostringstream text;
  text << "blocks: " << hecke::khintchine_block_count(g, d);
  for (auto variant : {hecke::DiagonalVariant::Free3, hecke::DiagonalVariant::Rst}) {
    json jv;
    try {
      hecke::DiagonalFamily fam = hecke::diagonal_family(g, d, variant);
      jv["available"] = true;
      jv["size"] = fam.words.size();
      json words = json::array();
      for (const auto& w : fam.words) words.push_back(hecke::format_word(w, g));
      if (fam.words.size() <= 16) jv["words"] = words;
      text << "\n" << hecke::to_string(variant) << " family size: " << fam.words.size();
    } catch (const std::invalid_argument& e) {
      jv["available"] = false;
      jv["reason"] = e.what();
      text << "\n" << hecke::to_string(variant) << " family: unavailable (" << e.what() << ")";
    }
    j[hecke::to_string(variant)] = jv;
  }
  return emit(cfg, j, text.str());
}

int cmd_crossover(const RunConfig& cfg, const std::string& variant_name,
                  std::optional<double> p_override, std::optional<int> s_override) {
  hecke::DiagonalVariant variant = variant_name == "rst" ? hecke::DiagonalVariant::Rst
                                                         : hecke::DiagonalVariant::Free3;
  double p = p_override ? *p_override : (cfg.q - 1.0) / std::sqrt(cfg.q);
  if (p < 0)
    throw std::invalid_argument("crossover needs p >= 0 (pass --p or q >= 1)");
  int s_count = 3;
  if (s_override) {
    s_count = *s_override;
  } else if (!cfg.graph_path.empty()) {
    s_count = hecke::load_graph(cfg.graph_path).size();
  }
  hecke::CrossoverReport rep = hecke::crossover(p, s_count, variant);
  json j;
  j["variant"] = hecke::to_string(rep.variant);
  j["p"] = rep.p;
  j["S_count"] = rep.S_count;
  j["d_star"] = rep.d_star;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  std::ostringstream text;
  text << "d* = " << rep.d_star << "  (family " << rep.lhs << " > bound " << rep.rhs << ")";
  return emit(cfg, j, text.str());
}

int cmd_hypotheses(const RunConfig& cfg) {
  hecke::CoxeterGraph g = require_graph(cfg);
  bool reduced = hecke::is_reduced_system(g);
  bool big = g.size() >= 3;
  bool hyp = hecke::is_hyperbolic(g);
  auto sep = hecke::find_separating_vertex(g);
  json j;
  j["reduced"] = reduced;
  j["S_ge_3"] = big;
  j["hyperbolic"] = hyp;
  j["separating_vertex"] = sep ? json(g.label(*sep)) : json(nullptr);
  std::ostringstream text;
  text << "reduced: " << (reduced ? "true" : "false") << "\n|S| >= 3: "
       << (big ? "true" : "false") << "\nhyperbolic: " << (hyp ? "true" : "false");
  if (reduced && big) {
    hecke::FactorReport rep = hecke::factor_classification(g, cfg.q, cfg.tol);
    j["q_in_interval"] = rep.classification == hecke::Classification::Factor ||
                         rep.classification == hecke::Classification::Boundary;
    j["interval"] = {rep.rho, rep.rho_inv};
    text << "\nq ∈ [ρ, ρ⁻¹]: " << (j["q_in_interval"].get<bool>() ? "true" : "false")
         << "  (interval [" << rep.rho << ", " << rep.rho_inv << "])";
  } else {
    j["q_in_interval"] = nullptr;
    text << "\nq ∈ [ρ, ρ⁻¹]: not applicable";
  }
  text << "\nseparating vertex: " << (sep ? g.label(*sep) : "none");
  return emit(cfg, j, text.str());
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  std::vector<hecke::NamedGraph> graphs;
  if (cfg.graph_path.empty()) {
    graphs = hecke::builtin_test_graphs();
  } else {
    graphs.push_back({cfg.graph_path, hecke::load_graph(cfg.graph_path)});
  }
  std::vector<std::string> names;
  if (suite == "all")
    names = hecke::suite_names();
  else
    names.push_back(suite);
  json j = json::array();
  bool all_ok = true;
  std::ostringstream text;
  for (const std::string& name : names) {
    for (const hecke::SuiteReport& rep : hecke::run_suite(name, graphs, cfg.ball_radius, cfg.q)) {
      j.push_back(rep.to_json());
      all_ok = all_ok && rep.ok();
      text << (rep.ok() ? "PASS" : "FAIL") << ' ' << rep.lemma << " on " << rep.graph << " ("
           << rep.cases_checked << " cases, " << rep.seconds << " s)\n";
      for (const std::string& f : rep.failures) text << "  " << f << '\n';
    }
  }
  std::string s = text.str();
  if (!s.empty()) s.pop_back();
  emit(cfg, j, s);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word and operator calculus for right-angled Coxeter systems and their Hecke deformations"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--graph", cfg.graph_path, "graph JSON file");
  app.add_option("--q", cfg.q, "deformation parameter q > 0")->check(CLI::PositiveNumber);
  app.add_option("--N", cfg.ball_radius, "ball radius for verification suites")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "output path (default stdout)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  app.add_subcommand("growth", "word counts and the growth radius");
  app.add_subcommand("classify", "factoriality classification at q");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::vector<std::string> allowed = hecke::suite_names();
  allowed.push_back("all");
  verify->add_option("suite", suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(allowed));

  auto* expand = app.add_subcommand("expand", "creation-diagonal-annihilation expansion of T_w");
  std::string expand_word;
  expand->add_option("word", expand_word, "word, e.g. \"[t r s]\"")->required();

  auto* mult = app.add_subcommand("mult", "exact Hecke product of two basis elements");
  std::string mw1, mw2;
  mult->add_option("w1", mw1)->required();
  mult->add_option("w2", mw2)->required();

  auto* khin = app.add_subcommand("khintchine", "decomposition block counts and diagonal families");
  int khin_d = 2;
  khin->add_option("d", khin_d, "tensor length d")->required()->check(CLI::PositiveNumber);

  auto* cross = app.add_subcommand("crossover", "first block length defeating the norm bound");
  std::string variant = "free3";
  cross->add_option("--variant", variant)->check(CLI::IsMember({"free3", "rst"}));
  std::optional<double> p_override;
  cross->add_option("--p", p_override, "override p (default derives from --q)");
  std::optional<int> s_override;
  cross->add_option("--S", s_override, "generator count (default from graph, else 3)");

  app.add_subcommand("hypotheses", "checkable hypotheses of the structure theorems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand("growth")) return cmd_growth(cfg);
    if (app.got_subcommand("classify")) return cmd_classify(cfg);
    if (app.got_subcommand("verify")) return cmd_verify(cfg, suite);
    if (app.got_subcommand("expand")) return cmd_expand(cfg, expand_word);
    if (app.got_subcommand("mult")) return cmd_mult(cfg, mw1, mw2);
    if (app.got_subcommand("khintchine")) return cmd_khintchine(cfg, khin_d);
    if (app.got_subcommand("crossover")) return cmd_crossover(cfg, variant, p_override, s_override);
    if (app.got_subcommand("hypotheses")) return cmd_hypotheses(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
