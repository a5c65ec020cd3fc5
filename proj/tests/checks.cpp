#include "checks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tautilt/decompose.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/matrix.hpp"
#include "tautilt/silting.hpp"

namespace checks {

namespace {

std::set<std::vector<int>> position_set(const TauPair& p) {
  std::set<std::vector<int>> out;
  for (std::size_t k = 0; k < p.size(); ++k) out.insert(p.position_vector(k));
  return out;
}

std::string name_of(const TauPair& p) { return key_string(p.key()); }

std::vector<const TauPair*> vertex_list(const ExchangeGraph& g) {
  std::vector<const TauPair*> out;
  for (const auto& [key, pair] : g.vertices) out.push_back(&pair);
  return out;
}

Scalar determinant(std::vector<std::vector<int>> rows) {
  const std::size_t n = rows.size();
  std::vector<std::vector<Scalar>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int x : rows[i]) a[i].emplace_back(x);
  }
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

bool presilting_from_parts(const AlgebraPtr& alg, const std::vector<Module>& modules, const std::vector<int>& support) {
  std::vector<ProjMap> blocks;
  for (const auto& m : modules) blocks.push_back(minimal_presentation(m).differential);
  for (int v : support) blocks.push_back(zero_proj_map(alg, {v}, {}));
  if (blocks.empty()) return true;
  return is_presilting(make_complex(block_diagonal(blocks)));
}

bool rigid_by_definition(const std::vector<Module>& modules, const std::vector<int>& support) {
  for (const auto& m : modules) {
    for (int v : support) {
      if (m.dim(v) != 0) return false;
    }
  }
  for (const auto& x : modules) {
    for (const auto& y : modules) {
      if (hom_dimension(x, tau_via_transpose(y)) != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::string Result::summary() const {
  std::string s = std::to_string(cases) + " cases";
  if (!failures.empty()) {
    s += "; first failures:";
    for (const auto& f : failures) s += "\n    " + f;
  }
  return s;
}

Module tau_via_transpose(const Module& m) { return dualize(transpose(m)).retag(m.algebra()); }

std::vector<int> g_via_syzygy(const Module& m) {
  const ProjectiveCover cover = projective_cover(m);
  const Module syzygy = map_kernel_cokernel(cover.map).kernel;
  std::vector<int> g = top_dims(m);
  const std::vector<int> t1 = top_dims(syzygy);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] -= t1[i];
  return g;
}

std::vector<OraclePair> brute_force_pairs(const support::Fixture& fixture) {
  const AlgebraPtr& alg = fixture.algebra;
  const int n = alg->vertex_count();
  const auto& ind = fixture.indecomposables;
  std::vector<OraclePair> out;
  for (unsigned mask = 0; mask < (1u << ind.size()); ++mask) {
    std::vector<Module> chosen;
    for (std::size_t i = 0; i < ind.size(); ++i) {
      if (mask & (1u << i)) chosen.push_back(ind[i]);
    }
    for (unsigned smask = 0; smask < (1u << n); ++smask) {
      std::vector<int> sup;
      for (int v = 0; v < n; ++v) {
        if (smask & (1u << v)) sup.push_back(v);
      }
      if (static_cast<int>(chosen.size() + sup.size()) != n || !rigid_by_definition(chosen, sup)) continue;
      PairKey key;
      for (const auto& m : chosen) key.push_back(g_via_syzygy(m));
      for (int v : sup) {
        std::vector<int> e(n, 0);
        e[v] = -1;
        key.push_back(e);
      }
      std::sort(key.begin(), key.end());
      out.push_back({key, chosen, sup});
    }
  }
  return out;
}

Result oracle_equivalence(const support::Fixture& fixture, const ExchangeGraph& graph) {
  Result r;
  std::set<PairKey> oracle;
  for (const auto& p : brute_force_pairs(fixture)) {
    r.expect(oracle.insert(p.key).second, "oracle produced a repeated key " + key_string(p.key));
    const auto it = graph.vertices.find(p.key);
    r.expect(it != graph.vertices.end(), "oracle pair " + key_string(p.key) + " missing from the enumeration");
    if (it == graph.vertices.end()) continue;
    const Module expected = p.modules.empty() ? Module::zero(fixture.algebra) : direct_sum(p.modules);
    r.expect(is_isomorphic(it->second.module(), expected), "module part differs at " + key_string(p.key));
    r.expect(it->second.support() == p.support, "support differs at " + key_string(p.key));
  }
  for (const auto& [key, pair] : graph.vertices) {
    r.expect(oracle.count(key) == 1, "enumerated pair " + key_string(key) + " not found by the oracle");
  }
  r.expect(oracle.size() == graph.vertices.size(), "vertex counts differ");
  return r;
}

Result mutation_involution(const ExchangeGraph& graph) {
  Result r;
  for (const auto& [key, pair] : graph.vertices) {
    for (std::size_t k = 0; k < pair.size(); ++k) {
      const Mutation m = mutate(pair, k);
      const Mutation back = mutate(m.pair, m.exchanged);
      r.expect(back.pair.key() == key, "involution fails at " + name_of(pair) + " position " + std::to_string(k));
      r.expect(back.direction != m.direction, "direction not reversed at " + name_of(pair));
    }
  }
  return r;
}

Result direction_matches_order(const ExchangeGraph& graph) {
  Result r;
  for (const auto& [key, pair] : graph.vertices) {
    for (std::size_t k = 0; k < pair.size(); ++k) {
      const Mutation m = mutate(pair, k);
      const bool below = leq(m.pair, pair) && !leq(pair, m.pair);
      const bool above = leq(pair, m.pair) && !leq(m.pair, pair);
      r.expect(m.direction == Direction::Left ? below : above,
               "direction disagrees with order at " + name_of(pair) + " position " + std::to_string(k));
      r.expect(mutation_direction(pair, k) == m.direction, "predicted direction differs at " + name_of(pair));
    }
  }
  return r;
}

Result two_completions(const ExchangeGraph& graph) {
  Result r;
  const auto vertices = vertex_list(graph);
  for (const TauPair* p : vertices) {
    for (std::size_t k = 0; k < p->size(); ++k) {
      auto rest = position_set(*p);
      rest.erase(p->position_vector(k));
      const PairKey other = mutate(*p, k).pair.key();
      std::set<PairKey> completions;
      for (const TauPair* q : vertices) {
        const auto qs = position_set(*q);
        if (std::includes(qs.begin(), qs.end(), rest.begin(), rest.end())) completions.insert(q->key());
      }
      r.expect(completions == std::set<PairKey>{p->key(), other},
               "almost complete pair at " + name_of(*p) + " has " + std::to_string(completions.size()) +
                   " completions");
    }
  }
  return r;
}

Result dagger_duality(const ExchangeGraph& graph) {
  Result r;
  const ExchangeGraph dual = enumerate(opposite_algebra(graph.algebra));
  r.expect(dual.complete, "opposite enumeration incomplete");
  r.expect(dual.vertices.size() == graph.vertices.size(), "vertex counts of A and A^op differ");
  r.expect(dual.arrows.size() == graph.arrows.size(), "arrow counts of A and A^op differ");
  std::map<PairKey, PairKey> image;
  std::set<PairKey> hit;
  for (const auto& [key, pair] : graph.vertices) {
    const TauPair d = dagger(pair);
    r.expect(d.is_support_tau_tilting(), "dagger of " + name_of(pair) + " not support tau-tilting");
    r.expect(dual.vertices.count(d.key()) == 1, "dagger of " + name_of(pair) + " not enumerated over A^op");
    r.expect(dagger(d).key() == key, "dagger is not an involution at " + name_of(pair));
    image.emplace(key, d.key());
    hit.insert(d.key());
  }
  r.expect(hit.size() == graph.vertices.size(), "dagger is not injective");
  std::set<std::pair<PairKey, PairKey>> dual_arrows;
  for (const auto& a : dual.arrows) dual_arrows.emplace(a.from, a.to);
  for (const auto& a : graph.arrows) {
    r.expect(dual_arrows.count({image.at(a.to), image.at(a.from)}) == 1,
             "arrow " + key_string(a.from) + " -> " + key_string(a.to) + " not reversed over A^op");
  }
  const auto vertices = vertex_list(graph);
  for (const TauPair* u : vertices) {
    for (const TauPair* v : vertices) {
      r.expect(leq(*u, *v) == leq(dual.vertices.at(image.at(v->key())), dual.vertices.at(image.at(u->key()))),
               "dagger does not reverse " + name_of(*u) + " vs " + name_of(*v));
    }
  }
  return r;
}

Result pair_complex_round_trip(const ExchangeGraph& graph) {
  Result r;
  for (const auto& [key, pair] : graph.vertices) {
    const TwoTermComplex c = pair_to_complex(pair);
    r.expect(is_reduced(c), "complex of " + name_of(pair) + " not reduced");
    r.expect(is_silting(c), "complex of " + name_of(pair) + " not silting");
    const TauPair back = complex_to_pair(c);
    r.expect(back.key() == key, "pair -> complex -> pair changes " + name_of(pair));
    r.expect(is_isomorphic(back.module(), pair.module()), "module part changes at " + name_of(pair));
    const TwoTermComplex again = pair_to_complex(back);
    r.expect(again.degree_minus1() == c.degree_minus1() && again.degree0() == c.degree0(),
             "complex -> pair -> complex changes the terms at " + name_of(pair));
    r.expect(complex_to_pair(again).key() == key, "complex -> pair -> complex changes the class at " + name_of(pair));
  }
  return r;
}

Result silting_order_isomorphism(const ExchangeGraph& graph) {
  Result r;
  std::map<PairKey, TwoTermComplex> complexes;
  for (const auto& [key, pair] : graph.vertices) complexes.emplace(key, pair_to_complex(pair));
  for (const auto& [ku, u] : graph.vertices) {
    for (const auto& [kv, v] : graph.vertices) {
      r.expect(leq(u, v) == silting_leq(complexes.at(kv), complexes.at(ku)),
               "orders disagree on " + key_string(ku) + " vs " + key_string(kv));
    }
  }
  return r;
}

Result g_matrix_unimodular(const ExchangeGraph& graph) {
  Result r;
  for (const auto& [key, pair] : graph.vertices) {
    const Scalar d = determinant(key);
    r.expect(d == 1 || d == -1, "g-matrix of " + name_of(pair) + " has determinant " + d.get_str());
    for (const auto& s : pair.summands()) {
      r.expect(s.g == g_via_syzygy(s.module), "cached g-vector differs from the syzygy route at " + name_of(pair));
    }
  }
  return r;
}

Result keys_injective(const ExchangeGraph& graph) {
  Result r;
  const auto vertices = vertex_list(graph);
  std::set<PairKey> keys;
  for (const TauPair* p : vertices) keys.insert(p->key());
  r.expect(keys.size() == vertices.size(), "repeated keys");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const bool same = vertices[i]->support() == vertices[j]->support() &&
                        is_isomorphic(vertices[i]->module(), vertices[j]->module());
      r.expect(!same, "isomorphic pairs " + name_of(*vertices[i]) + " and " + name_of(*vertices[j]));
    }
  }
  return r;
}

Result rigid_iff_presilting(const support::Fixture& fixture, const ExchangeGraph& graph) {
  Result r;
  for (const auto& [key, pair] : graph.vertices) {
    const std::size_t n = pair.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<Module> mods;
      std::vector<int> sup;
      for (std::size_t k = 0; k < n; ++k) {
        if (!(mask & (1u << k))) continue;
        if (pair.is_module_position(k)) {
          mods.push_back(pair.summands()[k].module);
        } else {
          sup.push_back(pair.support_vertex(k));
        }
      }
      const TauPair sub = TauPair::from_indecomposables(graph.algebra, mods, sup);
      r.expect(is_presilting(pair_to_complex(sub)), "sub-pair of " + name_of(pair) + " not presilting");
    }
  }
  // Both directions on every small configuration of listed indecomposables.
  const auto& ind = fixture.indecomposables;
  const int nv = fixture.algebra->vertex_count();
  for (std::size_t i = 0; i <= ind.size(); ++i) {
    for (std::size_t j = i; j <= ind.size(); ++j) {
      for (int s = -1; s < nv; ++s) {
        std::vector<Module> mods;
        if (i < ind.size()) mods.push_back(ind[i]);
        if (j < ind.size()) mods.push_back(ind[j]);
        std::vector<int> sup;
        if (s >= 0) sup.push_back(s);
        const bool rigid = rigid_by_definition(mods, sup);
        r.expect(rigid == presilting_from_parts(fixture.algebra, mods, sup),
                 "tau-rigidity and presilting disagree in " + fixture.name);
      }
    }
  }
  return r;
}

Module random_module(const AlgebraPtr& algebra, std::mt19937_64& rng) {
  const int n = algebra->vertex_count();
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::uniform_int_distribution<int> count(0, 2);
  std::uniform_int_distribution<int> coefficient(-2, 2);
  for (;;) {
    std::vector<int> source;
    std::vector<int> target;
    const int t = 1 + count(rng);
    for (int k = 0; k < t; ++k) target.push_back(vertex(rng));
    const int s = count(rng);
    for (int k = 0; k < s; ++k) source.push_back(vertex(rng));
    std::sort(source.begin(), source.end());
    std::sort(target.begin(), target.end());
    std::vector<Scalar> coords(proj_hom_size(*algebra, source, target));
    for (auto& c : coords) c = coefficient(rng);
    const ProjMap f = proj_from_coordinates(algebra, source, target, coords);
    Module m = map_kernel_cokernel(realize(f)).cokernel;
    if (!m.is_zero()) return m;
  }
}

Result e_invariant_identity(const std::vector<support::Fixture>& fixtures, std::size_t samples, unsigned seed) {
  Result r;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& f = fixtures[s % fixtures.size()];
    const Module x = random_module(f.algebra, rng);
    const Module y = random_module(f.algebra, rng);
    const long long lhs = static_cast<long long>(hom_dimension(x, tau_via_transpose(y)));
    const long long rhs = static_cast<long long>(hom_dimension(y, x)) - dot(g_via_syzygy(y), c_vector(x));
    r.expect(lhs == rhs, "identity fails on a random pair over " + f.name + ": " + std::to_string(lhs) +
                             " vs " + std::to_string(rhs));
    long long library = -1;
    try {
      library = e_prime({x, {}}, {y, {}});
    } catch (const std::logic_error& e) {
      r.expect(false, std::string("library cross-check raised: ") + e.what());
      continue;
    }
    r.expect(library == lhs, "e_prime disagrees with the D Tr route over " + f.name);
  }
  return r;
}

Result tau_cross_check(const support::Fixture& fixture) {
  Result r;
  for (const auto& m : fixture.indecomposables) {
    const Module nakayama_route = tau(m);
    const Module transpose_route = tau_via_transpose(m);
    r.expect(nakayama_route.dims() == transpose_route.dims(), "tau dimension vectors differ for " + loewy_label(m));
    r.expect(is_isomorphic(nakayama_route, transpose_route), "tau routes disagree for " + loewy_label(m));
  }
  return r;
}

Result convexity(const ExchangeGraph& graph) {
  Result r;
  const auto vertices = vertex_list(graph);
  const std::size_t n = vertices.size();
  std::vector<std::vector<char>> le(n, std::vector<char>(n));
  std::vector<std::set<std::vector<int>>> positions;
  for (std::size_t i = 0; i < n; ++i) {
    positions.push_back(position_set(*vertices[i]));
    for (std::size_t j = 0; j < n; ++j) le[i][j] = leq(*vertices[i], *vertices[j]);
  }
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!le[u][t]) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (!le[v][u]) continue;
        for (const auto& x : positions[t]) {
          if (positions[v].count(x)) {
            r.expect(positions[u].count(x) == 1, "convexity fails between " + name_of(*vertices[t]) + " and " +
                                                      name_of(*vertices[v]));
          }
        }
      }
    }
  }
  return r;
}

Result make_closer(const ExchangeGraph& graph) {
  Result r;
  std::map<PairKey, std::vector<PairKey>> left;
  for (const auto& a : graph.arrows) left[a.from].push_back(a.to);
  for (const auto& [ku, u] : graph.vertices) {
    for (const auto& [kt, t] : graph.vertices) {
      if (ku == kt || !leq(t, u)) continue;
      bool found = false;
      for (const auto& kv : left[ku]) found = found || leq(t, graph.vertices.at(kv));
      r.expect(found, "no left mutation of " + key_string(ku) + " stays above " + key_string(kt));
    }
  }
  return r;
}

Result maximality(const support::Fixture& fixture, const ExchangeGraph& graph) {
  Result r;
  for (const auto& [key, pair] : graph.vertices) {
    if (!pair.support().empty()) continue;
    const Module t = pair.module();
    const Module tau_t = tau_via_transpose(t);
    for (const auto& x : fixture.indecomposables) {
      if (hom_dimension(t, tau_via_transpose(x)) != 0 || hom_dimension(x, tau_t) != 0) continue;
      bool summand = false;
      for (const auto& s : pair.summands()) summand = summand || is_isomorphic(s.module, x);
      r.expect(summand, loewy_label(x) + " is compatible with " + name_of(pair) + " but not a summand");
    }
  }
  return r;
}

Result silting_quiver_matches(const ExchangeGraph& graph, std::vector<TwoTermComplex>* reached) {
  Result r;
  std::map<PairKey, TwoTermComplex> seen;
  std::set<std::pair<PairKey, PairKey>> arrows;
  std::vector<TwoTermComplex> queue{regular_complex(graph.algebra)};
  seen.emplace(TauPair::regular(graph.algebra).key(), queue.front());
  while (!queue.empty()) {
    const TwoTermComplex c = queue.back();
    queue.pop_back();
    const TauPair here = complex_to_pair(c);
    for (std::size_t k = 0; k < here.size(); ++k) {
      const SiltingMutation m = silting_mutate(c, k);
      r.expect(is_silting(m.complex), "mutated complex is not silting at " + name_of(here));
      const PairKey there = complex_to_pair(m.complex).key();
      if (m.direction == Direction::Left) {
        arrows.emplace(here.key(), there);
      } else {
        arrows.emplace(there, here.key());
      }
      if (seen.emplace(there, m.complex).second) queue.push_back(m.complex);
    }
  }
  std::set<PairKey> expected_vertices;
  for (const auto& [key, pair] : graph.vertices) expected_vertices.insert(key);
  std::set<PairKey> found;
  for (const auto& [key, c] : seen) found.insert(key);
  r.expect(found == expected_vertices, "silting vertices differ from the exchange graph");
  std::set<std::pair<PairKey, PairKey>> expected_arrows;
  for (const auto& a : graph.arrows) expected_arrows.emplace(a.from, a.to);
  r.expect(arrows == expected_arrows, "silting arrows differ from the exchange graph");
  if (reached) {
    for (const auto& [key, c] : seen) reached->push_back(c);
  }
  return r;
}

}  // namespace checks
