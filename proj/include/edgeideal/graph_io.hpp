#pragma once

#include <string>

#include "edgeideal/betti_polynomial.hpp"
#include "edgeideal/classifiers.hpp"
#include "edgeideal/formulas.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/homology.hpp"

namespace edgeideal {

/// "n m" header then one "u v" line per edge, sorted; loading normalizes
/// endpoint order and drops duplicates, so save/load/save is byte-stable.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(const std::string& text);

/// Standard graph6 ASCII encoding (short and long vertex-count forms).
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& text);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string complex_to_json(const SimplicialComplex& d);
SimplicialComplex complex_from_json(const std::string& text);

std::string betti_to_json(const BettiTable& t, const FieldSpec& k);
std::string profile_to_json(const HomologyProfile& h);
std::string bound_report_to_json(const BoundReport& r);
std::string classification_to_json(const ClassificationReport& r);
std::string polynomial_to_json(const BettiPolynomial& p);

enum class GraphFormat { EdgeList, Graph6, Json };

/// Format by extension: .g6 -> graph6, .json -> JSON, anything else edge list.
GraphFormat format_for_path(const std::string& path);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path, GraphFormat format);

} // namespace edgeideal
