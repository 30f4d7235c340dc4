#include "hecke/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hecke {

CoxeterGraph graph_from_json(const nlohmann::json& j) {
  std::vector<std::string> labels = j.at("generators").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("edge entries must be pairs of labels");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return CoxeterGraph(std::move(labels), edges);
}

CoxeterGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  nlohmann::json j;
  in >> j;
  return graph_from_json(j);
}

nlohmann::json graph_to_json(const CoxeterGraph& g) {
  nlohmann::json j;
  j["generators"] = g.labels();
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [s, t] : g.edge_list())
    edges.push_back({g.label(s), g.label(t)});
  j["edges"] = std::move(edges);
  return j;
}

Word parse_word(const std::string& text, const CoxeterGraph& g) {
  std::istringstream is(text);
  std::string tok;
  std::vector<Letter> letters;
  bool saw_e = false;
  while (is >> tok) {
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    letters.push_back(static_cast<Letter>(g.index_of(tok)));
  }
  if (saw_e && !letters.empty())
    throw std::invalid_argument("'e' cannot be mixed with generator labels");
  return reduce(letters, g);
}

std::string format_word(const Word& w, const CoxeterGraph& g) { return word_str(w, g); }

std::string format_element(const HeckeElement& a, const CoxeterGraph& g) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    bool composite = false;
    int monomials = 0;
    for (const Rational& r : c.coeffs())
      if (r != Rational(0)) ++monomials;
    composite = monomials > 1;
    if (composite) os << '(' << c.str() << ')';
    else os << c.str();
    os << " * [" << format_word(w, g) << ']';
  }
  return os.str();
}

HeckeElement parse_element(const std::string& text, const CoxeterGraph& g) {
  HeckeElement out;
  std::string trimmed;
  for (char ch : text)
    if (ch != '\n') trimmed += ch;
  if (trimmed == "0") return out;
  std::size_t pos = 0;
  while (pos < trimmed.size()) {
    std::size_t star = trimmed.find('*', pos);
    if (star == std::string::npos) throw std::invalid_argument("element term missing '*'");
    std::string coeff = trimmed.substr(pos, star - pos);
    // Strip spaces and optional parentheses around the coefficient.
    auto strip = [](std::string s) {
      std::size_t b = s.find_first_not_of(' ');
      std::size_t e = s.find_last_not_of(' ');
      if (b == std::string::npos) return std::string();
      s = s.substr(b, e - b + 1);
      if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
      return s;
    };
    coeff = strip(coeff);
    std::size_t lb = trimmed.find('[', star);
    std::size_t rb = trimmed.find(']', lb);
    if (lb == std::string::npos || rb == std::string::npos)
      throw std::invalid_argument("element term missing bracketed word");
    std::string word = trimmed.substr(lb + 1, rb - lb - 1);
    out.add(parse_word(word, g), PolyScalar::parse(coeff));
    pos = trimmed.find('+', rb);
    if (pos == std::string::npos) break;
    ++pos;
  }
  return out;
}

std::string format_element_pretty(const HeckeElement& a, const CoxeterGraph& g) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    int monomials = 0;
    for (const Rational& r : c.coeffs())
      if (r != Rational(0)) ++monomials;
    if (w.empty()) {
      os << c.str();
      continue;
    }
    if (monomials > 1) os << '(' << c.str() << ") ";
    else os << c.str() << ' ';
    os << '[' << format_word(w, g) << ']';
  }
  return os.str();
}

std::string growth_csv(const std::vector<std::uint64_t>& counts) {
  std::ostringstream os;
  os << "k,a_k\n";
  for (std::size_t k = 0; k < counts.size(); ++k) os << k << ',' << counts[k] << '\n';
  return os.str();
}

}  // namespace hecke
