#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "hecke/algebra.hpp"

namespace hecke {

/// Graph file format: {"generators": ["r","s","t"], "edges": [["r","t"]]}.
CoxeterGraph graph_from_json(const nlohmann::json& j);
CoxeterGraph load_graph(const std::string& path);
nlohmann::json graph_to_json(const CoxeterGraph& g);

/// Words serialize as space-separated labels; the empty word as "e".
Word parse_word(const std::string& text, const CoxeterGraph& g);
std::string format_word(const Word& w, const CoxeterGraph& g);

/// Canonical element form "c1 * [w1] + c2 * [w2]": coefficients printed as
/// PolyScalar::str(), parenthesized when they have several monomials; words
/// bracketed, "[e]" for the unit. Parse and print round-trip exactly.
std::string format_element(const HeckeElement& a, const CoxeterGraph& g);
HeckeElement parse_element(const std::string& text, const CoxeterGraph& g);

/// Loose human form: drops "* [e]" on the unit term and the "*" separator.
std::string format_element_pretty(const HeckeElement& a, const CoxeterGraph& g);

/// CSV rows "k,a_k" preceded by a header.
std::string growth_csv(const std::vector<std::uint64_t>& counts);

}  // namespace hecke
