#include "doctest.h"
#include "tautilt/decompose.hpp"
#include "tautilt/errors.hpp"
#include "test_support.hpp"

using namespace tautilt;
using support::I;
using support::P;
using support::S;
using support::sum;

namespace {

PairKey key_of(std::vector<Module> modules, std::vector<int> support) { return check_pair(modules, support).key(); }

ErrorKind error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("tau_hom_vanishes") {
  auto a2 = fixtures::a2();
  CHECK(tau_hom_vanishes(P(a2, 0), S(a2, 0)));
  CHECK(!tau_hom_vanishes(P(a2, 1), S(a2, 0)));
  CHECK(tau_hom_vanishes(S(a2, 1), P(a2, 0)));
  auto lin3 = fixtures::lin3();
  for (int v = 0; v < 3; ++v) CHECK(tau_hom_vanishes(sum({S(lin3, 0), S(lin3, 1), S(lin3, 2)}), P(lin3, v)));
}

TEST_CASE("check_pair tags and errors") {
  auto a2 = fixtures::a2();
  auto lin3 = fixtures::lin3();
  CHECK(check_pair({P(a2, 0), P(a2, 1)}, {}).kind() == PairKind::SupportTauTilting);
  CHECK(check_pair({sum({S(lin3, 0), P(lin3, 0), P(lin3, 2)})}, {}).kind() == PairKind::SupportTauTilting);
  CHECK(check_pair({S(a2, 0)}, {1}).kind() == PairKind::SupportTauTilting);
  CHECK(check_pair({S(a2, 0)}, {}).kind() == PairKind::AlmostComplete);
  CHECK(check_pair({S(lin3, 0)}, {}).kind() == PairKind::TauRigid);

  CHECK(error_of([&] { check_pair({sum({S(a2, 0), S(a2, 1)})}, {}); }) == ErrorKind::NotTauRigid);
  CHECK(error_of([&] { check_pair({S(a2, 1)}, {1}); }) == ErrorKind::SupportViolation);
  CHECK(error_of([&] { check_pair({sum({S(a2, 0), S(a2, 0)})}, {}); }) == ErrorKind::NotBasic);
}

TEST_CASE("classify_pair") {
  auto a2 = fixtures::a2();
  auto lin3 = fixtures::lin3();
  auto lam = classify_pair(TauPair::regular(a2));
  CHECK(lam.tilting);
  CHECK(lam.faithful);
  CHECK(lam.sincere);

  auto t = classify_pair(check_pair({S(lin3, 0), P(lin3, 0), P(lin3, 2)}, {}));
  CHECK(t.support_tau_tilting);
  CHECK(t.tau_tilting);
  CHECK(t.sincere);
  CHECK(!t.tilting);
  CHECK(!t.faithful);

  auto s1 = classify_pair(check_pair({S(a2, 0)}, {1}));
  CHECK(s1.support_tau_tilting);
  CHECK(!s1.sincere);
  CHECK(!s1.tau_tilting);
}

TEST_CASE("g- and c-vectors") {
  auto a2 = fixtures::a2();
  auto lin3 = fixtures::lin3();
  CHECK(g_vector(P(a2, 0)) == GVector{1, 0});
  CHECK(g_vector(P(a2, 1)) == GVector{0, 1});
  CHECK(g_vector(P(lin3, 2)) == GVector{0, 0, 1});
  CHECK(g_vector(S(a2, 0)) == GVector{1, -1});
  CHECK(c_vector(S(a2, 0)) == CVector{1, 0});
  CHECK(g_vector(S(lin3, 0)) == GVector{1, -1, 0});
  CHECK(g_vector(sum({S(a2, 0), P(a2, 0)})) == GVector{2, -1});
}

TEST_CASE("key strings") {
  PairKey key{{-1, 0}, {0, 1}};
  CHECK(key_string(key) == "-1_0.0_1");
  CHECK(parse_key("-1_0.0_1") == key);
  CHECK_THROWS_AS(parse_key("1_x"), Error);
  CHECK_THROWS_AS(parse_key("1__2"), Error);
}

TEST_CASE("E-invariant") {
  auto a2 = fixtures::a2();
  auto lin3 = fixtures::lin3();
  CHECK(e_prime({S(lin3, 0), {}}, {S(lin3, 0), {}}) == 0);
  auto e = e_invariant({S(a2, 1), {}}, {S(a2, 0), {}});
  CHECK(e.prime_ab == 1);
  CHECK(e.prime_ba == 0);
  CHECK(e.total == 1);
  // The projective part pairs with dimensions at the support vertices.
  CHECK(e_prime({Module::zero(a2), {1}}, {S(a2, 1), {}}) == 1);
  for (const auto& [name, graph] : support::fixture_graphs()) {
    for (const auto& [key, pair] : graph.vertices) {
      const auto mp = as_module_pair(pair);
      CHECK(e_invariant(mp, mp).total == 0);
    }
  }
}

TEST_CASE("dagger") {
  auto a2 = fixtures::a2();
  auto op = a2->opposite();
  auto top = dagger(TauPair::regular(a2));
  CHECK(top.key() == TauPair::zero(op).key());
  CHECK(dagger(TauPair::zero(a2)).key() == TauPair::regular(op).key());

  auto d = dagger(check_pair({S(a2, 0)}, {1}));
  CHECK(d.support().empty());
  REQUIRE(d.summands().size() == 2);
  const Module expected = direct_sum(transpose(S(a2, 0)), standard_module(op, StandardKind::Projective, 1));
  CHECK(is_isomorphic(d.module(), expected));
  CHECK(dagger(d).key() == check_pair({S(a2, 0)}, {1}).key());
}

TEST_CASE("mutation examples") {
  auto cyc2 = fixtures::cyc2();
  const TauPair lam = TauPair::regular(cyc2);
  const auto at_p2 = lam.position_of({0, 1});
  REQUIRE(at_p2);
  auto m = mutate(lam, *at_p2);
  CHECK(m.direction == Direction::Left);
  CHECK(m.pair.key() == key_of({P(cyc2, 0), S(cyc2, 0)}, {}));

  auto a2 = fixtures::a2();
  const TauPair lam2 = TauPair::regular(a2);
  auto m2 = mutate(lam2, *lam2.position_of({0, 1}));
  CHECK(m2.direction == Direction::Left);
  CHECK(m2.pair.key() == key_of({P(a2, 0), S(a2, 0)}, {}));

  const TauPair s1 = check_pair({S(a2, 0)}, {1});
  const auto at_support = s1.position_of({0, -1});
  REQUIRE(at_support);
  CHECK(mutation_direction(s1, *at_support) == Direction::Right);
  auto m3 = mutate(s1, *at_support);
  CHECK(m3.direction == Direction::Right);
  CHECK(m3.pair.key() == key_of({P(a2, 0), S(a2, 0)}, {}));
  CHECK(mutate(m3.pair, m3.exchanged).pair.key() == s1.key());

  CHECK(error_of([&] { mutate(check_pair({S(a2, 0)}, {}), 0); }) == ErrorKind::NotComplete);
  CHECK(error_of([&] { mutate(lam2, 5); }) == ErrorKind::InvalidPosition);
}

TEST_CASE("order") {
  auto a2 = fixtures::a2();
  const TauPair lam = TauPair::regular(a2);
  const TauPair zero = TauPair::zero(a2);
  const TauPair ps = check_pair({P(a2, 0), S(a2, 0)}, {});
  CHECK(leq(ps, lam));
  CHECK(!leq(lam, ps));
  CHECK(leq(zero, ps));
  CHECK(!leq(ps, zero));
  const TauPair s1 = check_pair({S(a2, 0)}, {1});
  const TauPair p2 = check_pair({P(a2, 1)}, {0});
  CHECK(!leq(s1, p2));
  CHECK(!leq(p2, s1));
  CHECK(leq(s1, s1));
}

TEST_CASE("enumeration and Hasse quiver") {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected{
      {"LOC", {2, 1}}, {"A2", {5, 5}}, {"CYC2", {6, 6}}, {"LIN3", {12, 18}}, {"CT3", {14, 21}}};
  for (const auto& [name, graph] : support::fixture_graphs()) {
    CAPTURE(name);
    CHECK(graph.complete);
    CHECK(graph.vertices.size() == expected.at(name).first);
    CHECK(graph.arrows.size() == expected.at(name).second);
    const HasseReport report = verify_hasse(graph);
    CHECK(report.covers == graph.arrows.size());
    CHECK(report.source == TauPair::regular(graph.algebra).key());
    CHECK(report.sink == TauPair::zero(graph.algebra).key());
    CHECK(std::is_sorted(graph.arrows.begin(), graph.arrows.end()));
  }

  auto partial = enumerate(fixtures::ct3(), Limits{3, 10000});
  CHECK(!partial.complete);
  CHECK(partial.vertices.size() == 3);
  CHECK(error_of([&] { verify_hasse(partial); }) == ErrorKind::Inconclusive);

  auto shallow = enumerate(fixtures::cyc2(), Limits{100, 1});
  CHECK(!shallow.complete);
  CHECK(shallow.vertices.size() == 3);
}

TEST_CASE("verify_hasse rejects a tampered graph") {
  ExchangeGraph g = enumerate(fixtures::a2());
  g.arrows.pop_back();
  CHECK(error_of([&] { verify_hasse(g); }) == ErrorKind::HasseMismatch);
}

TEST_CASE("Bongartz completion") {
  auto a2 = fixtures::a2();
  CHECK(bongartz_completion(sum({P(a2, 0), P(a2, 1)})).key() == TauPair::regular(a2).key());
  CHECK(bongartz_completion(P(a2, 1)).key() == TauPair::regular(a2).key());
  CHECK(bongartz_completion(S(a2, 0)).key() == key_of({P(a2, 0), S(a2, 0)}, {}));
  CHECK(error_of([&] { bongartz_completion(sum({S(a2, 0), S(a2, 1)})); }) == ErrorKind::NotTauRigid);
  CHECK(error_of([&] { bongartz_completion(S(fixtures::ct3(), 0), Limits{2, 10}); }) == ErrorKind::Inconclusive);
}

TEST_CASE("torsion-free companion") {
  auto a2 = fixtures::a2();
  const Module d_lambda = sum({I(a2, 0), I(a2, 1)});
  auto top = torsionfree_companion(TauPair::regular(a2));
  CHECK(top.torsion_free.is_zero());
  CHECK(is_isomorphic(top.injective, d_lambda));

  auto bottom = torsionfree_companion(TauPair::zero(a2));
  CHECK(is_isomorphic(bottom.torsion_free, d_lambda));
  CHECK(bottom.injective.is_zero());

  auto c = torsionfree_companion(check_pair({S(a2, 0)}, {1}));
  CHECK(is_isomorphic(c.torsion_free, sum({S(a2, 1), I(a2, 1)})));
  CHECK(c.injective.is_zero());
}

TEST_CASE("decomposable exchange cokernels are logged") {
  std::vector<std::string> events;
  set_event_log([&](const std::string& e) { events.push_back(e); });
  for (const auto& [name, graph] : support::fixture_graphs()) {
    for (const auto& [key, pair] : graph.vertices) {
      for (std::size_t k = 0; k < pair.size(); ++k) mutate(pair, k);
    }
  }
  set_event_log(nullptr);
  for (const auto& e : events) MESSAGE(e);
  CHECK(events.empty());
}
