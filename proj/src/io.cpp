#include "tautilt/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tautilt/errors.hpp"

namespace tautilt::io {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::ParseError, message); }

const json& member(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) fail(std::string("missing field '") + name + "'");
  return doc.at(name);
}

std::string as_string(const json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(what + " must be a string");
}

Scalar as_scalar(const Field& field, const json& v) {
  if (v.is_number_integer()) return field.reduce(Scalar(mpz_class(std::to_string(v.get<long long>()))));
  if (v.is_string()) return field.parse(v.get<std::string>());
  fail("coefficient must be a string or an integer");
}

int vertex_of(const Algebra& algebra, const std::string& name) {
  try {
    return algebra.vertex_index(name);
  } catch (const Error&) {
    fail("unknown vertex '" + name + "'");
  }
}

std::vector<int> read_vertex_counts(const Algebra& algebra, const json& doc, const std::string& what) {
  std::vector<int> counts(algebra.vertex_count(), 0);
  if (!doc.is_object()) fail(what + " must be an object keyed by vertex name");
  for (const auto& [name, value] : doc.items()) {
    if (!value.is_number_integer() || value.get<long long>() < 0) fail(what + " entries must be nonnegative integers");
    counts[vertex_of(algebra, name)] = value.get<int>();
  }
  return counts;
}

std::vector<int> read_support(const Algebra& algebra, const json& doc) {
  std::vector<int> support;
  if (!doc.is_array()) fail("support must be a list of vertex names");
  for (const auto& v : doc) support.push_back(vertex_of(algebra, as_string(v, "support vertex")));
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return support;
}

json vertex_counts_json(const Algebra& algebra, const std::vector<int>& counts) {
  json out = json::object();
  for (int v = 0; v < algebra.vertex_count(); ++v) {
    if (counts[v] != 0) out[algebra.vertex_name(v)] = counts[v];
  }
  return out;
}

std::vector<int> copies_from_counts(const std::vector<int>& counts) {
  std::vector<int> copies;
  for (int v = 0; v < static_cast<int>(counts.size()); ++v) copies.insert(copies.end(), counts[v], v);
  return copies;
}

std::vector<int> counts_from_copies(const Algebra& algebra, const std::vector<int>& copies) {
  std::vector<int> counts(algebra.vertex_count(), 0);
  for (int v : copies) ++counts[v];
  return counts;
}

// Coefficient vector over the algebra basis, required to lie in e_column Λ e_row.
AlgebraElement parse_element(const Algebra& algebra, const json& doc, int row, int column) {
  if (!doc.is_array() || doc.size() != algebra.dimension()) {
    fail("complex entries must be coefficient vectors of length " + std::to_string(algebra.dimension()));
  }
  AlgebraElement x = algebra.zero();
  for (std::size_t b = 0; b < doc.size(); ++b) {
    x.coefficients[b] = as_scalar(algebra.field(), doc[b]);
    if (x.coefficients[b] == 0) continue;
    const auto& path = algebra.basis(b);
    if (path.source != row || path.target != column) {
      throw Error(ErrorKind::InvalidComplex, "entry uses basis element " + algebra.basis_label(b) +
                                                 " outside e_" + algebra.vertex_name(column) + " Λ e_" +
                                                 algebra.vertex_name(row));
    }
  }
  return x;
}

json element_json(const Algebra& algebra, const AlgebraElement& x) {
  json out = json::array();
  for (const auto& c : x.coefficients) out.push_back(algebra.field().format(c));
  return out;
}

json key_json(const PairKey& key) { return json(key); }

PairKey key_from_json(const json& doc) {
  if (doc.is_string()) return parse_key(doc.get<std::string>());
  try {
    return doc.get<PairKey>();
  } catch (const json::exception&) {
    fail("vertex key must be a string or a list of integer vectors");
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

bool is_projective_summand(const PairSummand& s) { return s.presentation.p1().empty(); }

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Field parse_field(const json& doc) {
  if (!doc.contains("field")) return Field::rational();
  const json& f = doc.at("field");
  const std::string kind = as_string(member(f, "kind"), "field kind");
  if (kind == "rational") return Field::rational();
  if (kind == "prime") {
    mpz_class p;
    if (p.set_str(as_string(member(f, "p"), "field characteristic"), 10) != 0) fail("invalid characteristic");
    return Field::prime(p);
  }
  fail("unknown field kind '" + kind + "'");
}

QuiverPresentation parse_presentation(const json& doc) {
  QuiverPresentation spec;
  const json& quiver = member(doc, "quiver");
  const json& vertices = member(quiver, "vertices");
  if (!vertices.is_array()) fail("quiver vertices must be a list");
  for (const auto& v : vertices) spec.vertices.push_back(as_string(v, "vertex name"));
  if (quiver.contains("arrows")) {
    if (!quiver.at("arrows").is_array()) fail("quiver arrows must be a list");
    for (const auto& a : quiver.at("arrows")) {
      spec.arrows.push_back({as_string(member(a, "name"), "arrow name"), as_string(member(a, "from"), "arrow source"),
                             as_string(member(a, "to"), "arrow target")});
    }
  }
  const Field field = parse_field(doc);
  if (doc.contains("relations")) {
    if (!doc.at("relations").is_array()) fail("relations must be a list");
    for (const auto& r : doc.at("relations")) {
      if (!r.is_array()) fail("a relation must be a list of terms");
      Relation relation;
      for (const auto& t : r) {
        RelationTerm term;
        term.coefficient = as_scalar(field, t.contains("coeff") ? t.at("coeff") : json("1"));
        const json& path = member(t, "path");
        if (!path.is_array()) fail("relation path must be a list of arrow names");
        for (const auto& a : path) term.path.push_back(as_string(a, "arrow name"));
        relation.push_back(std::move(term));
      }
      spec.relations.push_back(std::move(relation));
    }
  }
  const json& bound = member(doc, "nilpotency_bound");
  if (!bound.is_number_integer() || bound.get<long long>() < 1) fail("nilpotency_bound must be a positive integer");
  spec.nilpotency_bound = bound.get<int>();
  return spec;
}

AlgebraPtr parse_algebra(const json& doc) { return build_algebra(parse_presentation(doc), parse_field(doc)); }

Module parse_module(const AlgebraPtr& algebra, const json& doc) {
  const std::vector<int> dims = read_vertex_counts(*algebra, member(doc, "dims"), "dims");
  std::vector<Matrix> maps;
  for (int a = 0; a < algebra->arrow_count(); ++a) {
    maps.emplace_back(dims[algebra->arrow_target(a)], dims[algebra->arrow_source(a)]);
  }
  if (doc.contains("maps")) {
    const json& given = doc.at("maps");
    if (!given.is_object()) fail("maps must be an object keyed by arrow name");
    for (const auto& [name, rows] : given.items()) {
      int a = -1;
      try {
        a = algebra->arrow_index(name);
      } catch (const Error&) {
        fail("unknown arrow '" + name + "'");
      }
      Matrix& m = maps[a];
      if (!rows.is_array() || rows.size() != m.rows()) fail("map '" + name + "' has the wrong number of rows");
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != m.cols()) fail("map '" + name + "' has the wrong number of columns");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = as_scalar(algebra->field(), rows[r][c]);
      }
    }
  }
  return Module(algebra, dims, std::move(maps));
}

json module_to_json(const Module& m) {
  const Algebra& algebra = *m.algebra();
  json maps = json::object();
  for (int a = 0; a < algebra.arrow_count(); ++a) {
    const Matrix& x = m.arrow_map(a);
    if (x.empty()) continue;
    json rows = json::array();
    for (std::size_t r = 0; r < x.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(algebra.field().format(x(r, c)));
      rows.push_back(row);
    }
    maps[algebra.arrow_name(a)] = rows;
  }
  return {{"dims", vertex_counts_json(algebra, m.dims())}, {"maps", maps}};
}

ModulePair parse_module_pair(const AlgebraPtr& algebra, const json& doc) {
  if (!doc.is_object()) fail("expected a pair or module object");
  if (!doc.contains("summands")) {
    std::vector<int> support;
    if (doc.contains("support")) support = read_support(*algebra, doc.at("support"));
    if (!doc.contains("dims")) return {Module::zero(algebra), support};
    return {parse_module(algebra, doc), support};
  }
  const json& summands = doc.at("summands");
  if (!summands.is_array()) fail("summands must be a list");
  std::vector<Module> parts;
  for (const auto& s : summands) parts.push_back(parse_module(algebra, s));
  std::vector<int> support;
  if (doc.contains("support")) support = read_support(*algebra, doc.at("support"));
  return {parts.empty() ? Module::zero(algebra) : direct_sum(parts), support};
}

TauPair parse_pair(const AlgebraPtr& algebra, const json& doc) {
  if (!doc.is_object()) fail("expected a pair or module object");
  std::vector<Module> parts;
  if (doc.contains("summands")) {
    if (!doc.at("summands").is_array()) fail("summands must be a list");
    for (const auto& s : doc.at("summands")) parts.push_back(parse_module(algebra, s));
  } else if (doc.contains("dims")) {
    parts.push_back(parse_module(algebra, doc));
  }
  std::vector<int> support;
  if (doc.contains("support")) support = read_support(*algebra, doc.at("support"));
  if (parts.empty()) parts.push_back(Module::zero(algebra));
  return check_pair(parts, support);
}

json pair_to_json(const TauPair& pair) {
  json summands = json::array();
  for (const auto& s : pair.summands()) summands.push_back(module_to_json(s.module));
  return {{"summands", summands}, {"support", vertex_names(*pair.algebra(), pair.support())}};
}

TwoTermComplex parse_complex(const AlgebraPtr& algebra, const json& doc) {
  const std::vector<int> minus1 = copies_from_counts(read_vertex_counts(*algebra, member(doc, "deg-1"), "deg-1"));
  const std::vector<int> zero = copies_from_counts(read_vertex_counts(*algebra, member(doc, "deg0"), "deg0"));
  ProjMap d = zero_proj_map(algebra, minus1, zero);
  const json& rows = doc.contains("d") ? doc.at("d") : json::array();
  if (!rows.is_array()) fail("d must be a list of rows");
  if (!rows.empty() || (!zero.empty() && !minus1.empty())) {
    if (rows.size() != zero.size()) fail("d must have one row per degree-0 copy");
    for (std::size_t r = 0; r < zero.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != minus1.size()) fail("d must have one column per degree -1 copy");
      for (std::size_t c = 0; c < minus1.size(); ++c) d.at(r, c) = parse_element(*algebra, rows[r][c], zero[r], minus1[c]);
    }
  }
  return make_complex(std::move(d));
}

json complex_to_json(const TwoTermComplex& c) {
  const Algebra& algebra = *c.algebra();
  json rows = json::array();
  for (std::size_t r = 0; r < c.degree0().size(); ++r) {
    json row = json::array();
    for (std::size_t k = 0; k < c.degree_minus1().size(); ++k) row.push_back(element_json(algebra, c.d.at(r, k)));
    rows.push_back(row);
  }
  return {{"deg-1", vertex_counts_json(algebra, counts_from_copies(algebra, c.degree_minus1()))},
          {"deg0", vertex_counts_json(algebra, counts_from_copies(algebra, c.degree0()))},
          {"d", rows}};
}

std::vector<std::string> vertex_names(const Algebra& algebra, const std::vector<int>& vertices) {
  std::vector<std::string> names;
  for (int v : vertices) names.push_back(algebra.vertex_name(v));
  return names;
}

std::string vector_text(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string pair_label(const TauPair& pair) {
  const Algebra& algebra = *pair.algebra();
  const auto n = static_cast<std::size_t>(algebra.vertex_count());
  if (pair.support().empty() && pair.summands().size() == n &&
      std::all_of(pair.summands().begin(), pair.summands().end(), is_projective_summand)) {
    return "Λ";
  }
  if (pair.summands().empty() && pair.support().size() == n) return "0";
  std::vector<std::string> parts;
  for (const auto& s : pair.summands()) parts.push_back(loewy_label(s.module));
  for (int v : pair.support()) parts.push_back("P" + algebra.vertex_name(v) + "[1]");
  if (parts.empty()) return "0";
  std::string label;
  for (std::size_t i = 0; i < parts.size(); ++i) label += (i > 0 ? " ⊕ " : "") + parts[i];
  return label;
}

json summand_json(const PairSummand& s) {
  return {{"dims", s.module.dims()}, {"gvector", s.g}, {"label", loewy_label(s.module)}};
}

json pair_summary(const TauPair& pair) {
  json summands = json::array();
  for (const auto& s : pair.summands()) summands.push_back(summand_json(s));
  return {{"key", key_string(pair.key())},
          {"label", pair_label(pair)},
          {"summands", summands},
          {"support", vertex_names(*pair.algebra(), pair.support())}};
}

json graph_to_json(const ExchangeGraph& graph) {
  json vertices = json::array();
  for (const auto& [key, pair] : graph.vertices) {
    json summands = json::array();
    for (const auto& s : pair.summands()) summands.push_back({{"dims", s.module.dims()}, {"gvector", s.g}});
    vertices.push_back({{"key", key_json(key)},
                        {"label", pair_label(pair)},
                        {"summands", summands},
                        {"support", vertex_names(*graph.algebra, pair.support())}});
  }
  json arrows = json::array();
  for (const auto& a : graph.arrows) {
    arrows.push_back({{"from", key_json(a.from)}, {"to", key_json(a.to)}, {"position", a.position}});
  }
  return {{"vertices", vertices}, {"arrows", arrows}, {"complete", graph.complete}};
}

std::string export_graph(const ExchangeGraph& graph, GraphFormat format) {
  if (format == GraphFormat::Json) return graph_to_json(graph).dump(2) + "\n";

  std::map<PairKey, std::string> names;
  std::set<std::string> used;
  for (const auto& [key, pair] : graph.vertices) {
    std::string name = pair_label(pair);
    if (!used.insert(name).second) {
      name += " " + key_string(key);
      used.insert(name);
    }
    names.emplace(key, name);
  }
  std::ostringstream out;
  out << "digraph exchange {\n";
  for (const auto& [key, pair] : graph.vertices) {
    std::string label;
    for (const auto& s : pair.summands()) label += (label.empty() ? "" : " ") + vector_text(s.module.dims());
    if (label.empty()) label = "0";
    label += "\\nsupport {";
    const auto support = vertex_names(*graph.algebra, pair.support());
    for (std::size_t i = 0; i < support.size(); ++i) label += (i > 0 ? "," : "") + support[i];
    label += "}";
    out << "  \"" << dot_escape(names.at(key)) << "\" [label=\"" << dot_escape(names.at(key)) << "\\n" << label
        << "\"];\n";
  }
  for (const auto& a : graph.arrows) {
    out << "  \"" << dot_escape(names.at(a.from)) << "\" -> \"" << dot_escape(names.at(a.to)) << "\" [label=\""
        << a.position << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

GraphDocument import_graph(const json& doc) {
  GraphDocument g;
  const json& vertices = member(doc, "vertices");
  const json& arrows = member(doc, "arrows");
  if (!vertices.is_array() || !arrows.is_array()) fail("vertices and arrows must be lists");
  for (const auto& v : vertices) g.vertices.push_back(key_from_json(member(v, "key")));
  for (const auto& a : arrows) {
    const json& position = member(a, "position");
    if (!position.is_number_unsigned()) fail("arrow position must be a nonnegative integer");
    g.arrows.push_back({key_from_json(member(a, "from")), key_from_json(member(a, "to")), position.get<std::size_t>()});
  }
  const json& complete = member(doc, "complete");
  if (!complete.is_boolean()) fail("complete must be a boolean");
  g.complete = complete.get<bool>();
  std::sort(g.vertices.begin(), g.vertices.end());
  std::sort(g.arrows.begin(), g.arrows.end());
  return g;
}

}  // namespace tautilt::io
