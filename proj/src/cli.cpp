#include "tautilt/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/io.hpp"
#include "tautilt/service.hpp"

namespace tautilt {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  std::string algebra;
  std::string module;
  std::string other;
  std::string output;
  std::string format;
  std::size_t position = 0;
  std::size_t max_vertices = Limits{}.max_vertices;
  std::size_t max_depth = Limits{}.max_depth;
  bool count_only = false;
  std::string from_pair;
  std::string check;
  std::string mutate;
  std::string host = "127.0.0.1";
  int port = 8080;
};

AlgebraPtr load_algebra(const Options& o) { return io::parse_algebra(io::read_json_file(o.algebra)); }

void write_output(const Options& o, const io::json& doc, std::ostream& out) {
  if (o.output.empty()) {
    out << doc.dump(2) << "\n";
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + o.output + "'");
  file << doc.dump(2) << "\n";
}

void print_pair(const TauPair& pair, std::ostream& out) {
  out << "label: " << io::pair_label(pair) << "\n";
  out << "key: " << key_string(pair.key()) << "\n";
  out << "kind: " << to_string(pair.kind()) << "\n";
}

void print_flags(const PairFlags& f, std::ostream& out) {
  out << "tau-rigid: " << yes_no(f.tau_rigid) << "; support-tau-tilting: " << yes_no(f.support_tau_tilting)
      << "; tau-tilting: " << yes_no(f.tau_tilting) << "; tilting: " << yes_no(f.tilting)
      << "; sincere: " << yes_no(f.sincere) << "; faithful: " << yes_no(f.faithful) << "\n";
}

Limits limits_of(const Options& o) { return {o.max_vertices, o.max_depth}; }

int cmd_check(const Options& o, std::ostream& out) {
  const AlgebraPtr alg = load_algebra(o);
  const TauPair pair = io::parse_pair(alg, io::read_json_file(o.module));
  const PairFlags flags = classify_pair(pair);
  out << "support-tau-tilting: " << yes_no(flags.support_tau_tilting) << "; tilting: " << yes_no(flags.tilting) << "\n";
  print_pair(pair, out);
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const AlgebraPtr alg = load_algebra(o);
  const TauPair pair = io::parse_pair(alg, io::read_json_file(o.module));
  print_flags(classify_pair(pair), out);
  print_pair(pair, out);
  return 0;
}

int cmd_mutate(const Options& o, std::ostream& out) {
  const AlgebraPtr alg = load_algebra(o);
  const TauPair pair = io::parse_pair(alg, io::read_json_file(o.module));
  const Mutation m = mutate(pair, o.position);
  out << "direction: " << to_string(m.direction) << "\n";
  out << "exchanged: " << m.exchanged << "\n";
  print_pair(m.pair, out);
  write_output(o, io::pair_to_json(m.pair), out);
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const ExchangeGraph graph = enumerate(load_algebra(o), limits_of(o));
  if (o.count_only) {
    out << graph.vertices.size() << (graph.complete ? " complete" : " partial") << "\n";
    return 0;
  }
  if (o.format == "dot") {
    out << io::export_graph(graph, io::GraphFormat::Dot);
  } else if (o.format == "text") {
    for (const auto& [key, pair] : graph.vertices) out << key_string(key) << "  " << io::pair_label(pair) << "\n";
    out << graph.vertices.size() << " vertices, " << graph.arrows.size() << " arrows"
        << (graph.complete ? ", complete" : ", partial") << "\n";
  } else {
    out << io::export_graph(graph, io::GraphFormat::Json);
  }
  return 0;
}

int cmd_hasse(const Options& o, std::ostream& out, std::ostream& err) {
  const ExchangeGraph graph = enumerate(load_algebra(o), limits_of(o));
  const HasseReport report = verify_hasse(graph);
  err << "hasse: " << report.vertices << " vertices, " << report.covers << " covers verified\n";
  out << io::export_graph(graph, o.format == "json" ? io::GraphFormat::Json : io::GraphFormat::Dot);
  return 0;
}

int cmd_gvectors(const Options& o, std::ostream& out) {
  const AlgebraPtr alg = load_algebra(o);
  const ModulePair mp = io::parse_module_pair(alg, io::read_json_file(o.module));
  if (!mp.module.is_zero()) {
    for (const auto& s : decompose(mp.module).summands) {
      out << loewy_label(s.module) << "  g=" << io::vector_text(g_vector(s.module))
          << "  c=" << io::vector_text(c_vector(s.module));
      if (s.multiplicity > 1) out << "  x" << s.multiplicity;
      out << "\n";
    }
  }
  for (int v : mp.projective) {
    std::vector<int> g(alg->vertex_count(), 0);
    g[v] = -1;
    out << "P" << alg->vertex_name(v) << "[1]  g=" << io::vector_text(g) << "\n";
  }
  return 0;
}

int cmd_einvariant(const Options& o, std::ostream& out) {
  const AlgebraPtr alg = load_algebra(o);
  const ModulePair a = io::parse_module_pair(alg, io::read_json_file(o.module));
  const ModulePair b = io::parse_module_pair(alg, io::read_json_file(o.other));
  const EInvariant e = e_invariant(a, b);
  out << "E'(A,B) = " << e.prime_ab << "\n";
  out << "E'(B,A) = " << e.prime_ba << "\n";
  out << "E(A,B) = " << e.total << "\n";
  return 0;
}

int cmd_silting(const Options& o, std::ostream& out) {
  const AlgebraPtr alg = load_algebra(o);
  if (!o.from_pair.empty()) {
    const TauPair pair = io::parse_pair(alg, io::read_json_file(o.from_pair));
    write_output(o, io::complex_to_json(pair_to_complex(pair)), out);
    return 0;
  }
  if (!o.check.empty()) {
    const TwoTermComplex c = io::parse_complex(alg, io::read_json_file(o.check));
    const bool presilting = is_presilting(c);
    out << "presilting: " << yes_no(presilting) << "; silting: " << yes_no(presilting && is_silting(c)) << "\n";
    if (presilting) print_pair(complex_to_pair(c), out);
    return 0;
  }
  const TwoTermComplex c = io::parse_complex(alg, io::read_json_file(o.mutate));
  const SiltingMutation m = silting_mutate(c, o.position);
  out << "direction: " << to_string(m.direction) << "\n";
  write_output(o, io::complex_to_json(m.complex), out);
  return 0;
}

int cmd_bongartz(const Options& o, std::ostream& out) {
  const AlgebraPtr alg = load_algebra(o);
  const ModulePair mp = io::parse_module_pair(alg, io::read_json_file(o.module));
  const TauPair completion = bongartz_completion(mp.module, limits_of(o));
  print_pair(completion, out);
  write_output(o, io::pair_to_json(completion), out);
  return 0;
}

int cmd_dagger(const Options& o, std::ostream& out) {
  const AlgebraPtr alg = load_algebra(o);
  const TauPair pair = io::parse_pair(alg, io::read_json_file(o.module));
  const TauPair dual = dagger(pair);
  print_pair(dual, out);
  write_output(o, io::pair_to_json(dual), out);
  return 0;
}

int cmd_serve(const Options& o, std::ostream& out) {
  SessionService service;
  out << "listening on " << o.host << ":" << o.port << std::endl;
  return serve(service, o.host, o.port);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"support tau-tilting toolkit", "tautilt"};
  app.require_subcommand(1);
  Options o;

  const auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("-a,--algebra", o.algebra, "algebra file")->required()->check(CLI::ExistingFile);
  };
  const auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", o.max_vertices, "vertex cap")->check(CLI::PositiveNumber);
    sub->add_option("--max-depth", o.max_depth, "BFS depth cap");
  };
  const auto add_pair = [&](CLI::App* sub, const char* help) {
    sub->add_option("-m,--module", o.module, help)->required()->check(CLI::ExistingFile);
  };
  const auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "write JSON here"); };

  auto* check = app.add_subcommand("check", "verify a pair and report support tau-tilting / tilting");
  add_algebra(check);
  add_pair(check, "pair or module file");

  auto* classify = app.add_subcommand("classify", "report all pair flags");
  add_algebra(classify);
  add_pair(classify, "pair or module file");

  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a support tau-tilting pair at a position");
  add_algebra(mutate_cmd);
  add_pair(mutate_cmd, "pair file");
  mutate_cmd->add_option("-k,--position", o.position, "position index")->required();
  add_output(mutate_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate the support tau-tilting exchange graph");
  add_algebra(enumerate_cmd);
  add_limits(enumerate_cmd);
  enumerate_cmd->add_flag("--count-only", o.count_only, "print only the vertex count and completeness");
  enumerate_cmd->add_option("--format", o.format, "json, dot or text")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->default_str("json");

  auto* hasse = app.add_subcommand("hasse", "verify and export the Hasse quiver");
  add_algebra(hasse);
  add_limits(hasse);
  hasse->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->default_str("dot");

  auto* gvectors = app.add_subcommand("gvectors", "g- and c-vectors of the indecomposable summands");
  add_algebra(gvectors);
  add_pair(gvectors, "module or pair file");

  auto* einvariant = app.add_subcommand("einvariant", "E-invariant of two pairs");
  add_algebra(einvariant);
  add_pair(einvariant, "first module or pair file");
  einvariant->add_option("-n,--other", o.other, "second module or pair file")->required()->check(CLI::ExistingFile);

  auto* silting = app.add_subcommand("silting", "two-term silting complexes");
  add_algebra(silting);
  auto* from_pair = silting->add_option("--from-pair", o.from_pair, "pair file to convert")->check(CLI::ExistingFile);
  auto* check_c = silting->add_option("--check", o.check, "complex file to test")->check(CLI::ExistingFile);
  auto* mutate_c = silting->add_option("--mutate", o.mutate, "complex file to mutate")->check(CLI::ExistingFile);
  from_pair->excludes(check_c)->excludes(mutate_c);
  check_c->excludes(mutate_c);
  auto* silting_k = silting->add_option("-k,--position", o.position, "position index for --mutate");
  silting_k->needs(mutate_c);
  mutate_c->needs(silting_k);
  add_output(silting);
  silting->require_option(1, 3);

  auto* bongartz = app.add_subcommand("bongartz", "Bongartz completion of a tau-rigid module");
  add_algebra(bongartz);
  add_pair(bongartz, "module file");
  add_limits(bongartz);
  add_output(bongartz);

  auto* dagger_cmd = app.add_subcommand("dagger", "dual pair over the opposite algebra");
  add_algebra(dagger_cmd);
  add_pair(dagger_cmd, "pair file");
  add_output(dagger_cmd);

  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP session service");
  serve_cmd->add_option("--port", o.port, "TCP port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", o.host, "bind address");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (silting->parsed() && o.from_pair.empty() && o.check.empty() && o.mutate.empty()) {
    err << "silting: one of --from-pair, --check, --mutate is required\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (mutate_cmd->parsed()) return cmd_mutate(o, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(o, out);
    if (hasse->parsed()) return cmd_hasse(o, out, err);
    if (gvectors->parsed()) return cmd_gvectors(o, out);
    if (einvariant->parsed()) return cmd_einvariant(o, out);
    if (silting->parsed()) return cmd_silting(o, out);
    if (bongartz->parsed()) return cmd_bongartz(o, out);
    if (dagger_cmd->parsed()) return cmd_dagger(o, out);
    if (serve_cmd->parsed()) return cmd_serve(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace tautilt
