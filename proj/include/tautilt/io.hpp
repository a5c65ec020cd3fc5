#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tautilt/silting.hpp"
#include "tautilt/tau_tilt.hpp"

namespace tautilt::io {

using nlohmann::json;

json read_json_file(const std::string& path);
json parse_json(const std::string& text);

QuiverPresentation parse_presentation(const json& doc);
Field parse_field(const json& doc);
AlgebraPtr parse_algebra(const json& doc);

Module parse_module(const AlgebraPtr& algebra, const json& doc);
json module_to_json(const Module& m);

/// A pair file {"summands": [...], "support": [...]} or a bare module file
/// (read as a pair with empty support), checked with check_pair.
TauPair parse_pair(const AlgebraPtr& algebra, const json& doc);
/// Same input read without the pair checks, for invariants of arbitrary pairs.
ModulePair parse_module_pair(const AlgebraPtr& algebra, const json& doc);
json pair_to_json(const TauPair& pair);

TwoTermComplex parse_complex(const AlgebraPtr& algebra, const json& doc);
json complex_to_json(const TwoTermComplex& c);

std::vector<std::string> vertex_names(const Algebra& algebra, const std::vector<int>& vertices);
std::string vector_text(const std::vector<int>& v);
/// "Λ" for (Λ, 0), "0" for (0, Λ), otherwise summand labels and P(i)[1] terms joined by " ⊕ ".
std::string pair_label(const TauPair& pair);

/// Per-summand data shared by the graph export and the session endpoints.
json summand_json(const PairSummand& s);
json pair_summary(const TauPair& pair);

enum class GraphFormat { Dot, Json };

std::string export_graph(const ExchangeGraph& graph, GraphFormat format);
json graph_to_json(const ExchangeGraph& graph);

struct GraphDocument {
  std::vector<PairKey> vertices;
  std::vector<GraphArrow> arrows;
  bool complete = false;
};

GraphDocument import_graph(const json& doc);

}  // namespace tautilt::io
