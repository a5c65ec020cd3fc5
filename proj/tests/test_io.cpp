#include <chrono>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "tautilt/cli.hpp"
#include "tautilt/decompose.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/io.hpp"
#include "tautilt/service.hpp"
#include "test_support.hpp"

using namespace tautilt;
using io::json;
using support::P;
using support::S;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

ErrorKind error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidModule;
}

}  // namespace

TEST_CASE("algebra files") {
  auto cyc2 = io::parse_algebra(io::read_json_file(fixture("cyc2.json")));
  CHECK(same_algebra(*cyc2, *fixtures::cyc2()));
  auto lin3 = io::parse_algebra(io::read_json_file(fixture("lin3.json")));
  CHECK(lin3->dimension() == fixtures::lin3()->dimension());

  auto prime = io::parse_algebra(io::parse_json(
      R"({"field": {"kind": "prime", "p": 1000003}, "quiver": {"vertices": ["1"], "arrows": []}, "nilpotency_bound": 1})"));
  CHECK(prime->field().is_prime());
  CHECK(prime->field().characteristic() == 1000003);

  CHECK(error_of([] { io::parse_json("{"); }) == ErrorKind::ParseError);
  CHECK(error_of([] { io::read_json_file("/nonexistent/file.json"); }) == ErrorKind::ParseError);
  CHECK(error_of([] { io::parse_algebra(json::parse(R"({"quiver": {"vertices": ["1"]}})")); }) ==
        ErrorKind::ParseError);
  CHECK(error_of([] {
          io::parse_algebra(json::parse(
              R"({"field": {"kind": "complex"}, "quiver": {"vertices": ["1"]}, "nilpotency_bound": 1})"));
        }) == ErrorKind::ParseError);
  CHECK(error_of([] {
          io::parse_algebra(json::parse(R"({"quiver": {"vertices": ["1"], "arrows": [{"name": "a", "from": "1", "to": "1"}]},
                                            "relations": [], "nilpotency_bound": 3})"));
        }) == ErrorKind::NonAdmissible);
  CHECK(error_of([] {
          io::parse_algebra(json::parse(R"({"quiver": {"vertices": ["1"], "arrows": []},
                                            "relations": [[{"coeff": "x", "path": []}]], "nilpotency_bound": 3})"));
        }) == ErrorKind::ParseError);
}

TEST_CASE("module and pair files") {
  auto lin3 = fixtures::lin3();
  const TauPair t = io::parse_pair(lin3, io::read_json_file(fixture("T.json")));
  CHECK(t.key() == check_pair({S(lin3, 0), P(lin3, 0), P(lin3, 2)}, {}).key());

  const Module p1 = io::parse_module(lin3, json::parse(R"({"dims": {"1": 1, "2": 1}, "maps": {"alpha": [["1"]]}})"));
  CHECK(is_isomorphic(p1, P(lin3, 0)));
  const Module again = io::parse_module(lin3, io::module_to_json(p1));
  CHECK(again.dims() == p1.dims());
  CHECK(again.arrow_maps() == p1.arrow_maps());

  auto a2 = fixtures::a2();
  const TauPair s1 = io::parse_pair(a2, io::read_json_file(fixture("a2_s1_support2.json")));
  CHECK(s1.support() == std::vector<int>{1});
  CHECK(io::parse_pair(a2, io::pair_to_json(s1)).key() == s1.key());
  CHECK(io::parse_pair(a2, json::parse(R"({"summands": [], "support": ["1", "2"]})")).key() == TauPair::zero(a2).key());

  CHECK(error_of([&] { io::parse_module(a2, json::parse(R"({"dims": {"7": 1}})")); }) == ErrorKind::ParseError);
  CHECK(error_of([&] { io::parse_module(a2, json::parse(R"({"dims": {"1": 1, "2": 1}, "maps": {"a": [["1", "0"]]}})")); }) ==
        ErrorKind::ParseError);
  CHECK(error_of([&] { io::parse_module(a2, json::parse(R"({"dims": {"1": 1}, "maps": {"b": []}})")); }) ==
        ErrorKind::ParseError);
  CHECK(error_of([&] { io::parse_pair(a2, json::parse(R"({"summands": [{"dims": {"1": 1}}, {"dims": {"2": 1}}]})")); }) ==
        ErrorKind::NotTauRigid);

  auto loc = fixtures::loc();
  CHECK(error_of([&] { io::parse_module(loc, json::parse(R"({"dims": {"1": 1}, "maps": {"a": [["1"]]}})")); }) ==
        ErrorKind::InvalidModule);
}

TEST_CASE("complex files") {
  auto cyc2 = fixtures::cyc2();
  const TwoTermComplex c = io::parse_complex(cyc2, io::read_json_file(fixture("cyc2_complex.json")));
  CHECK(c.degree_minus1() == std::vector<int>{1});
  CHECK(c.degree0() == std::vector<int>{0, 0});
  CHECK(is_silting(c));
  const TwoTermComplex again = io::parse_complex(cyc2, io::complex_to_json(c));
  CHECK(again.d.entries == c.d.entries);

  // e_2 at a P(1) row to P(2) column position is not in e_2 Λ e_1.
  CHECK(error_of([&] {
          io::parse_complex(cyc2, json::parse(R"({"deg-1": {"2": 1}, "deg0": {"1": 1}, "d": [[["0", "1", "0", "0"]]]})"));
        }) == ErrorKind::InvalidComplex);
  CHECK(error_of([&] {
          io::parse_complex(cyc2, json::parse(R"({"deg-1": {"2": 1}, "deg0": {"1": 1}, "d": [[["0", "1"]]]})"));
        }) == ErrorKind::ParseError);
}

TEST_CASE("graph export") {
  const auto& graphs = support::fixture_graphs();
  const ExchangeGraph& loc = graphs[0].second;
  const std::string dot = io::export_graph(loc, io::GraphFormat::Dot);
  CHECK(dot.find("\"Λ\" -> \"0\"") != std::string::npos);
  CHECK(count_of(dot, " -> ") == 1);
  CHECK(count_of(dot, "[label=") == 3);

  const ExchangeGraph& cyc2 = graphs[2].second;
  const json doc = json::parse(io::export_graph(cyc2, io::GraphFormat::Json));
  CHECK(doc["vertices"].size() == 6);
  CHECK(doc["arrows"].size() == 6);
  CHECK(doc["complete"] == true);
  CHECK(doc["vertices"][0].contains("summands"));
  CHECK(doc["vertices"][0]["summands"][0].contains("gvector"));
  CHECK(doc["vertices"][0]["summands"][0].contains("dims"));

  CHECK(io::export_graph(cyc2, io::GraphFormat::Json) == io::export_graph(enumerate(fixtures::cyc2()), io::GraphFormat::Json));
  CHECK(io::export_graph(cyc2, io::GraphFormat::Dot) == io::export_graph(enumerate(fixtures::cyc2()), io::GraphFormat::Dot));

  const auto partial = enumerate(fixtures::ct3(), Limits{3, 100});
  CHECK(json::parse(io::export_graph(partial, io::GraphFormat::Json))["complete"] == false);
}

TEST_CASE("graph import round trip") {
  for (const auto& [name, graph] : support::fixture_graphs()) {
    CAPTURE(name);
    const io::GraphDocument back = io::import_graph(json::parse(io::export_graph(graph, io::GraphFormat::Json)));
    std::vector<PairKey> keys;
    for (const auto& [key, pair] : graph.vertices) keys.push_back(key);
    CHECK(back.vertices == keys);
    CHECK(back.arrows == graph.arrows);
    CHECK(back.complete == graph.complete);
  }
  CHECK(error_of([] { io::import_graph(json::parse(R"({"vertices": [], "arrows": [{"from": "1", "to": "x", "position": 0}], "complete": true})")); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("pair labels") {
  auto a2 = fixtures::a2();
  CHECK(io::pair_label(TauPair::regular(a2)) == "Λ");
  CHECK(io::pair_label(TauPair::zero(a2)) == "0");
  CHECK(io::pair_label(check_pair({S(a2, 0)}, {1})) == "1 ⊕ P2[1]");
}

TEST_CASE("command line") {
  const auto enumerate_run = run({"enumerate", "-a", fixture("cyc2.json"), "--count-only"});
  CHECK(enumerate_run.code == 0);
  CHECK(enumerate_run.out == "6 complete\n");

  const auto check = run({"check", "-a", fixture("lin3.json"), "-m", fixture("T.json")});
  CHECK(check.code == 0);
  CHECK(check.out.rfind("support-tau-tilting: yes; tilting: no\n", 0) == 0);

  const auto hasse = run({"hasse", "-a", fixture("loc.json"), "--format", "dot"});
  CHECK(hasse.code == 0);
  CHECK(count_of(hasse.out, " -> ") == 1);
  CHECK(count_of(hasse.out, "[label=") == 3);

  const auto partial = run({"enumerate", "-a", fixture("ct3.json"), "--max-vertices", "3", "--count-only"});
  CHECK(partial.out == "3 partial\n");

  const auto classify = run({"classify", "-a", fixture("lin3.json"), "-m", fixture("T.json")});
  CHECK(classify.out.find("tau-tilting: yes; tilting: no") != std::string::npos);
  CHECK(classify.out.find("faithful: no") != std::string::npos);

  const auto mutate = run({"mutate", "-a", fixture("a2.json"), "-m", fixture("a2_s1_support2.json"), "-k", "1"});
  CHECK(mutate.code == 0);
  CHECK(mutate.out.rfind("direction: right\n", 0) == 0);

  const auto gv = run({"gvectors", "-a", fixture("lin3.json"), "-m", fixture("T.json")});
  CHECK(gv.out.find("1  g=(1,-1,0)  c=(1,0,0)") != std::string::npos);

  const auto e = run({"einvariant", "-a", fixture("lin3.json"), "-m", fixture("T.json"), "-n", fixture("T.json")});
  CHECK(e.out.find("E(A,B) = 0") != std::string::npos);

  const auto silting = run({"silting", "-a", fixture("cyc2.json"), "--check", fixture("cyc2_complex.json")});
  CHECK(silting.out.rfind("presilting: yes; silting: yes\n", 0) == 0);
  const auto from_pair = run({"silting", "-a", fixture("cyc2.json"), "--from-pair", fixture("cyc2_p1_s1.json")});
  CHECK(json::parse(from_pair.out) == io::read_json_file(fixture("cyc2_complex.json")));
  const auto smut = run({"silting", "-a", fixture("cyc2.json"), "--mutate", fixture("cyc2_complex.json"), "-k", "1"});
  CHECK(smut.code == 0);
  CHECK(smut.out.rfind("direction: left\n", 0) == 0);

  const auto bongartz = run({"bongartz", "-a", fixture("lin3.json"), "-m", fixture("T.json")});
  CHECK(bongartz.code == 0);
  const auto dagger = run({"dagger", "-a", fixture("a2.json"), "-m", fixture("a2_s1_support2.json")});
  CHECK(dagger.code == 0);
  CHECK(dagger.out.find("kind: support-tau-tilting") != std::string::npos);

  CHECK(run({"enumerate", "-a", fixture("cyc2.json")}).out == run({"enumerate", "-a", fixture("cyc2.json")}).out);
}

TEST_CASE("command line errors") {
  const auto missing = run({"check", "-a", fixture("lin3.json")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--module") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto bad_format = run({"hasse", "-a", fixture("loc.json"), "--format", "svg"});
  CHECK(bad_format.code == 2);
  CHECK(bad_format.err.find("--format") != std::string::npos);
  CHECK(run({"silting", "-a", fixture("cyc2.json")}).code == 2);
  CHECK(run({"silting", "-a", fixture("cyc2.json"), "--mutate", fixture("cyc2_complex.json")}).code == 2);

  const auto domain = run({"mutate", "-a", fixture("lin3.json"), "-m", fixture("T.json"), "-k", "9"});
  CHECK(domain.code == 1);
  CHECK(domain.err.find("InvalidPosition") != std::string::npos);
  CHECK(run({"check", "-a", fixture("a2.json"), "-m", fixture("T.json")}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("session service") {
  SessionService service;
  const std::string algebra = io::read_json_file(fixture("cyc2.json")).dump();
  const auto created = service.create_session(algebra);
  REQUIRE(created.status == 200);
  const std::string id = created.body["sessionId"];
  const std::string root = created.body["rootKey"];
  CHECK(created.body["pair"]["summands"].size() == 2);

  const auto card = service.pair(id, root);
  REQUIRE(card.status == 200);
  CHECK(card.body["positions"].size() == 2);
  for (const auto& p : card.body["positions"]) CHECK(p["direction"] == "left");

  const auto first = service.mutate(id, root, R"({"position": 0})");
  REQUIRE(first.status == 200);
  CHECK(first.body["direction"] == "left");
  const std::string next = first.body["newKey"];
  const std::size_t other = 1 - first.body["exchanged"].get<std::size_t>();
  const auto second = service.mutate(id, next, "{\"position\": " + std::to_string(other) + "}");
  REQUIRE(second.status == 200);

  const auto graph = service.graph(id);
  REQUIRE(graph.status == 200);
  CHECK(graph.body["vertices"].size() == 3);
  CHECK(graph.body["arrows"].size() == 2);
  CHECK(graph.body["complete"] == false);

  const auto order = service.order(id, next, root);
  REQUIRE(order.status == 200);
  CHECK(order.body["leq"] == true);
  CHECK(order.body["geq"] == false);

  CHECK(service.pair("nope", root).status == 404);
  CHECK(service.pair(id, "9_9.9_9").status == 404);
  CHECK(service.pair(id, "x").status == 400);
  CHECK(service.mutate(id, root, R"({"position": 7})").status == 422);
  CHECK(service.mutate(id, root, R"({"pos": 0})").status == 400);
  CHECK(service.create_session("{").status == 400);
  const auto bad = service.create_session(
      R"({"quiver": {"vertices": ["1"], "arrows": [{"name": "a", "from": "1", "to": "1"}]}, "nilpotency_bound": 2})");
  CHECK(bad.status == 422);
  CHECK(bad.body["error"] == "NonAdmissible");
  CHECK(service.session_count() == 1);
}

TEST_CASE("sessions under concurrent requests") {
  SessionService service;
  const std::string algebra = io::read_json_file(fixture("ct3.json")).dump();
  const auto created = service.create_session(algebra);
  const std::string id = created.body["sessionId"];
  const std::string root = created.body["rootKey"];
  std::vector<std::thread> workers;
  for (int w = 0; w < 3; ++w) {
    workers.emplace_back([&, w] { service.mutate(id, root, "{\"position\": " + std::to_string(w) + "}"); });
  }
  for (int w = 0; w < 2; ++w) workers.emplace_back([&] { service.create_session(algebra); });
  for (auto& t : workers) t.join();
  const auto graph = service.graph(id);
  CHECK(graph.body["vertices"].size() == 4);
  CHECK(graph.body["arrows"].size() == 3);
  CHECK(service.session_count() == 3);
}

TEST_CASE("HTTP endpoints") {
  SessionService service;
  httplib::Server server;
  install_routes(server, service);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread listener([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  const auto created = client.Post("/session", io::read_json_file(fixture("loc.json")).dump(), "application/json");
  REQUIRE(created);
  CHECK(created->status == 200);
  const json body = json::parse(created->body);
  const std::string id = body["sessionId"];
  const std::string root = body["rootKey"];

  const auto card = client.Get("/session/" + id + "/pair/" + root);
  REQUIRE(card);
  CHECK(json::parse(card->body)["positions"].size() == 1);

  const auto mutated = client.Post("/session/" + id + "/pair/" + root + "/mutate", R"({"position": 0})", "application/json");
  REQUIRE(mutated);
  const json m = json::parse(mutated->body);
  CHECK(m["direction"] == "left");
  CHECK(m["pair"]["label"] == "0");

  const auto graph = client.Get("/session/" + id + "/graph");
  REQUIRE(graph);
  CHECK(json::parse(graph->body)["arrows"].size() == 1);

  const auto order = client.Get("/session/" + id + "/order?a=" + root + "&b=" + std::string(m["newKey"]));
  REQUIRE(order);
  CHECK(json::parse(order->body) == json{{"leq", false}, {"geq", true}});

  const auto missing = client.Get("/session/" + id + "/order");
  REQUIRE(missing);
  CHECK(missing->status == 400);
  const auto unknown = client.Get("/session/zz/graph");
  REQUIRE(unknown);
  CHECK(unknown->status == 404);

  server.stop();
  listener.join();
}
