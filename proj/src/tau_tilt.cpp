#include "tautilt/tau_tilt.hpp"

#include <algorithm>
#include <deque>
#include <iostream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "tautilt/approximation.hpp"
#include "tautilt/errors.hpp"

namespace tautilt {

namespace {

std::mutex log_mutex;
std::function<void(const std::string&)> log_sink = [](const std::string& message) {
  std::clog << "[tautilt] " << message << '\n';
};

std::vector<int> unit(int n, int i, int sign = 1) {
  std::vector<int> v(n, 0);
  v[i] = sign;
  return v;
}

std::string vector_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Module sum_or_zero(const AlgebraPtr& algebra, const std::vector<Module>& parts) {
  return parts.empty() ? Module::zero(algebra) : direct_sum(parts);
}

PairSummand make_summand(Module m) {
  auto pres = minimal_presentation(m);
  auto g = g_vector(pres);
  auto end = std::make_shared<const EndStructure>(end_structure(m));
  return PairSummand{std::move(m), std::move(pres), std::move(g), std::move(end)};
}

bool is_indecomposable_projective(const PairSummand& s) { return s.presentation.p1().empty(); }

[[noreturn]] void exchange_failure(const TauPair& pair, std::size_t position, const std::string& what) {
  throw Error(ErrorKind::ExchangeAssertionFailed,
              what + " (pair " + key_string(pair.key()) + ", position " + std::to_string(position) + ")");
}

/// The position vector present in `after` but not in `before`.
std::optional<std::size_t> new_position(const TauPair& before, const TauPair& after) {
  std::optional<std::size_t> found;
  for (std::size_t k = 0; k < after.size(); ++k) {
    if (before.position_of(after.position_vector(k))) continue;
    if (found) return std::nullopt;
    found = k;
  }
  return found;
}

TauPair retagged(const TauPair& pair, const AlgebraPtr& algebra) {
  std::vector<Module> mods;
  for (const auto& s : pair.summands()) mods.push_back(s.module.retag(algebra));
  return TauPair::from_indecomposables(algebra, std::move(mods), pair.support());
}

Mutation left_mutation(const TauPair& pair, std::size_t position) {
  const AlgebraPtr& alg = pair.algebra();
  const auto& target = pair.summands()[position];
  std::vector<Module> rest;
  std::vector<EndStructure> ends;
  for (std::size_t k = 0; k < pair.summands().size(); ++k) {
    if (k == position) continue;
    rest.push_back(pair.summands()[k].module);
    ends.push_back(*pair.summands()[k].end);
  }
  const auto approx = minimal_left_approximation(target.module, rest, ends);
  const Module y = map_kernel_cokernel(approx.map).cokernel;

  std::vector<int> support = pair.support();
  if (y.is_zero()) {
    std::vector<int> candidates;
    for (int v = 0; v < alg->vertex_count(); ++v) {
      if (std::find(support.begin(), support.end(), v) != support.end()) continue;
      bool vanishes = true;
      for (const auto& m : rest) vanishes = vanishes && m.dim(v) == 0;
      if (vanishes) candidates.push_back(v);
    }
    if (candidates.size() != 1) {
      exchange_failure(pair, position, "expected one new support vertex, found " + std::to_string(candidates.size()));
    }
    support.push_back(candidates.front());
    std::sort(support.begin(), support.end());
  } else {
    const auto d = decompose(y);
    if (d.distinct() != 1) {
      exchange_failure(pair, position,
                       "exchange cokernel has " + std::to_string(d.distinct()) + " non-isomorphic summands");
    }
    if (d.summands.front().multiplicity > 1) {
      log_event("exchange cokernel is a direct sum of " + std::to_string(d.summands.front().multiplicity) +
                " copies of an indecomposable (pair " + key_string(pair.key()) + ", position " +
                std::to_string(position) + ")");
    }
    rest.push_back(d.summands.front().module);
  }
  TauPair result = TauPair::from_indecomposables(alg, std::move(rest), std::move(support));
  const auto exchanged = new_position(pair, result);
  if (!exchanged) exchange_failure(pair, position, "mutation did not exchange exactly one position");
  return Mutation{std::move(result), Direction::Left, *exchanged};
}

Mutation mutate_once(const TauPair& pair, std::size_t position) {
  if (mutation_direction(pair, position) == Direction::Left) return left_mutation(pair, position);

  std::vector<int> transported;
  if (pair.is_module_position(position)) {
    const auto& s = pair.summands()[position];
    if (is_indecomposable_projective(s)) exchange_failure(pair, position, "projective summand lies in Fac of the rest");
    transported = g_vector(transpose(s.presentation));
  } else {
    transported = unit(pair.algebra()->vertex_count(), pair.support_vertex(position));
  }
  const TauPair dual = dagger(pair);
  const auto dual_position = dual.position_of(transported);
  if (!dual_position) exchange_failure(pair, position, "position not found after dagger");
  if (mutation_direction(dual, *dual_position) != Direction::Left) {
    exchange_failure(pair, position, "dagger did not turn a right mutation into a left one");
  }
  const Mutation over_opposite = left_mutation(dual, *dual_position);
  TauPair result = retagged(dagger(over_opposite.pair), pair.algebra());
  const auto exchanged = new_position(pair, result);
  if (!exchanged) exchange_failure(pair, position, "mutation did not exchange exactly one position");
  return Mutation{std::move(result), Direction::Right, *exchanged};
}

}  // namespace

void set_event_log(std::function<void(const std::string&)> sink) {
  std::lock_guard lock(log_mutex);
  log_sink = std::move(sink);
}

void log_event(const std::string& message) {
  std::lock_guard lock(log_mutex);
  if (log_sink) log_sink(message);
}

const char* to_string(PairKind kind) {
  switch (kind) {
    case PairKind::TauRigid: return "tau-rigid";
    case PairKind::AlmostComplete: return "almost-complete";
    case PairKind::SupportTauTilting: return "support-tau-tilting";
  }
  return "?";
}

const char* to_string(Direction d) { return d == Direction::Left ? "left" : "right"; }

GVector g_vector(const ProjectivePresentation& p) {
  auto g = p.m0();
  const auto m1 = p.m1();
  for (std::size_t i = 0; i < g.size(); ++i) g[i] -= m1[i];
  return g;
}

GVector g_vector(const Module& m) { return g_vector(minimal_presentation(m)); }

CVector c_vector(const Module& m) { return m.dims(); }

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

bool tau_hom_vanishes(const Module& n, const ProjectivePresentation& m) {
  require_same_algebra(n, m.cover.target);
  const ProjMap& d = m.differential;
  if (d.source.empty()) return true;
  std::vector<std::size_t> row_offset{0}, col_offset{0};
  for (int i : d.source) row_offset.push_back(row_offset.back() + n.dim(i));
  for (int j : d.target) col_offset.push_back(col_offset.back() + n.dim(j));
  if (row_offset.back() == 0) return true;
  Matrix big(row_offset.back(), col_offset.back());
  for (std::size_t c = 0; c < d.source.size(); ++c)
    for (std::size_t r = 0; r < d.target.size(); ++r) {
      if (d.at(r, c).is_zero()) continue;
      big.set_block(row_offset[c], col_offset[r], n.action(d.at(r, c), d.target[r], d.source[c]));
    }
  return linalg::rank(n.field(), big) == row_offset.back();
}

bool tau_hom_vanishes(const Module& n, const Module& m) { return tau_hom_vanishes(n, minimal_presentation(m)); }

std::vector<int> TauPair::position_vector(std::size_t k) const {
  if (is_module_position(k)) return summands_[k].g;
  return unit(algebra_->vertex_count(), support_vertex(k), -1);
}

std::optional<std::size_t> TauPair::position_of(const std::vector<int>& v) const {
  for (std::size_t k = 0; k < size(); ++k)
    if (position_vector(k) == v) return k;
  return std::nullopt;
}

Module TauPair::module() const { return sum_or_zero(algebra_, modules()); }

std::vector<Module> TauPair::modules() const {
  std::vector<Module> out;
  for (const auto& s : summands_) out.push_back(s.module);
  return out;
}

TauPair TauPair::from_indecomposables(const AlgebraPtr& algebra, std::vector<Module> summands,
                                      std::vector<int> support) {
  const int n = algebra->vertex_count();
  TauPair p;
  p.algebra_ = algebra;
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw Error(ErrorKind::NotBasic, "support vertex listed twice");
  }
  for (int v : support)
    if (v < 0 || v >= n) throw Error(ErrorKind::UnknownVertex, "support vertex out of range");
  for (auto& m : summands) {
    if (!same_algebra(*m.algebra(), *algebra)) throw Error(ErrorKind::AlgebraMismatch, "summand over another algebra");
    if (m.is_zero()) throw Error(ErrorKind::InvalidModule, "zero summand");
    for (int v : support) {
      if (m.dim(v) != 0) {
        throw Error(ErrorKind::SupportViolation,
                    "summand " + loewy_label(m) + " is nonzero at support vertex " + algebra->vertex_name(v));
      }
    }
    p.summands_.push_back(make_summand(std::move(m)));
  }
  for (const auto& x : p.summands_)
    for (const auto& y : p.summands_)
      if (!tau_hom_vanishes(x.module, y.presentation)) {
        throw Error(ErrorKind::NotTauRigid,
                    "Hom(" + loewy_label(x.module) + ", tau " + loewy_label(y.module) + ") is nonzero");
      }
  std::sort(p.summands_.begin(), p.summands_.end(), [](const auto& a, const auto& b) { return a.g < b.g; });
  for (std::size_t k = 1; k < p.summands_.size(); ++k) {
    if (p.summands_[k].g == p.summands_[k - 1].g) {
      throw Error(ErrorKind::NotBasic, "two summands with g-vector " + vector_string(p.summands_[k].g));
    }
  }
  p.support_ = std::move(support);
  const std::size_t count = p.size();
  if (count > static_cast<std::size_t>(n)) throw Error(ErrorKind::NotTauRigid, "more summands than vertices");
  p.kind_ = count == static_cast<std::size_t>(n)       ? PairKind::SupportTauTilting
            : count + 1 == static_cast<std::size_t>(n) ? PairKind::AlmostComplete
                                                        : PairKind::TauRigid;
  for (std::size_t k = 0; k < count; ++k) p.key_.push_back(p.position_vector(k));
  std::sort(p.key_.begin(), p.key_.end());
  return p;
}

TauPair TauPair::regular(const AlgebraPtr& algebra) {
  std::vector<Module> ps;
  for (int v = 0; v < algebra->vertex_count(); ++v) ps.push_back(standard_module(algebra, StandardKind::Projective, v));
  return from_indecomposables(algebra, std::move(ps), {});
}

TauPair TauPair::zero(const AlgebraPtr& algebra) {
  std::vector<int> all(algebra->vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return from_indecomposables(algebra, {}, std::move(all));
}

std::string key_string(const PairKey& key) {
  std::string s;
  for (std::size_t k = 0; k < key.size(); ++k) {
    if (k) s += '.';
    for (std::size_t i = 0; i < key[k].size(); ++i) {
      if (i) s += '_';
      s += std::to_string(key[k][i]);
    }
  }
  return s;
}

PairKey parse_key(const std::string& text) {
  PairKey key;
  std::stringstream entries(text);
  std::string entry;
  while (std::getline(entries, entry, '.')) {
    std::vector<int> v;
    std::stringstream parts(entry);
    std::string part;
    while (std::getline(parts, part, '_')) {
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(part, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != part.size()) throw Error(ErrorKind::ParseError, "malformed pair key '" + text + "'");
      v.push_back(x);
    }
    if (v.empty()) throw Error(ErrorKind::ParseError, "malformed pair key '" + text + "'");
    key.push_back(std::move(v));
  }
  if (key.empty()) throw Error(ErrorKind::ParseError, "empty pair key");
  return key;
}

TauPair check_pair(const std::vector<Module>& modules, const std::vector<int>& support) {
  if (modules.empty()) throw Error(ErrorKind::InvalidModule, "no modules given; pass the zero module explicitly");
  const AlgebraPtr& alg = modules.front().algebra();
  std::vector<Module> leaves;
  for (const auto& m : modules) {
    require_same_algebra(modules.front(), m);
    for (const auto& s : decompose(m).summands) {
      if (s.multiplicity > 1) {
        throw Error(ErrorKind::NotBasic, "summand " + loewy_label(s.module) + " occurs " +
                                             std::to_string(s.multiplicity) + " times");
      }
      leaves.push_back(s.module);
    }
  }
  return TauPair::from_indecomposables(alg, std::move(leaves), support);
}

PairFlags classify_pair(const TauPair& pair) {
  PairFlags f;
  const Module m = pair.module();
  f.tau_rigid = true;
  f.support_tau_tilting = pair.is_support_tau_tilting();
  f.sincere = is_sincere(m);
  f.faithful = is_faithful(m);
  f.tau_tilting = f.support_tau_tilting && f.sincere;
  f.tilting = f.support_tau_tilting && f.faithful;
  return f;
}

ModulePair as_module_pair(const TauPair& pair) { return ModulePair{pair.module(), pair.support()}; }

long long e_prime(const ModulePair& m, const ModulePair& n) {
  require_same_algebra(m.module, n.module);
  long long value = static_cast<long long>(hom_dimension(m.module, tau(n.module)));
  long long projective_part = 0;
  for (int i : m.projective) projective_part += n.module.dim(i);
  value += projective_part;

  const auto gy = g_vector(n.module);
  const long long identity = static_cast<long long>(hom_dimension(n.module, m.module)) -
                             dot(gy, c_vector(m.module)) + projective_part;
  if (identity != value) throw std::logic_error("E' disagrees with the hom-form identity");
  return value;
}

EInvariant e_invariant(const ModulePair& a, const ModulePair& b) {
  EInvariant e;
  e.prime_ab = e_prime(a, b);
  e.prime_ba = e_prime(b, a);
  e.total = e.prime_ab + e.prime_ba;

  auto pair_g = [&](const ModulePair& p) {
    auto g = g_vector(p.module);
    for (int i : p.projective) g[i] -= 1;
    return g;
  };
  const long long formula = static_cast<long long>(hom_dimension(b.module, a.module)) +
                            static_cast<long long>(hom_dimension(a.module, b.module)) -
                            dot(pair_g(a), c_vector(b.module)) - dot(pair_g(b), c_vector(a.module));
  if (formula != e.total) throw std::logic_error("E disagrees with the pair identity");
  return e;
}

TauPair dagger(const TauPair& pair) {
  const AlgebraPtr op = pair.algebra()->opposite();
  std::vector<Module> mods;
  std::vector<int> support;
  for (const auto& s : pair.summands()) {
    if (is_indecomposable_projective(s)) {
      support.push_back(s.presentation.p0().front());
    } else {
      mods.push_back(transpose(s.presentation));
    }
  }
  for (int i : pair.support()) mods.push_back(standard_module(op, StandardKind::Projective, i));
  return TauPair::from_indecomposables(op, std::move(mods), std::move(support));
}

bool leq(const TauPair& a, const TauPair& b) {
  if (!same_algebra(*a.algebra(), *b.algebra())) throw Error(ErrorKind::AlgebraMismatch, "pairs over different algebras");
  for (int v : b.support())
    if (!std::binary_search(a.support().begin(), a.support().end(), v)) return false;
  for (const auto& x : a.summands())
    for (const auto& y : b.summands())
      if (!tau_hom_vanishes(x.module.retag(b.algebra()), y.presentation)) return false;
  return true;
}

Direction mutation_direction(const TauPair& pair, std::size_t position) {
  if (position >= pair.size()) {
    throw Error(ErrorKind::InvalidPosition,
                "position " + std::to_string(position) + " out of range for a pair of size " + std::to_string(pair.size()));
  }
  if (!pair.is_module_position(position)) return Direction::Right;
  std::vector<Module> rest;
  for (std::size_t k = 0; k < pair.summands().size(); ++k)
    if (k != position) rest.push_back(pair.summands()[k].module);
  if (rest.empty()) return Direction::Left;
  return in_fac(pair.summands()[position].module, direct_sum(rest)) ? Direction::Right : Direction::Left;
}

Mutation mutate(const TauPair& pair, std::size_t position) {
  if (!pair.is_support_tau_tilting()) {
    throw Error(ErrorKind::NotComplete, "pair " + key_string(pair.key()) + " is not support tau-tilting");
  }
  Mutation m = mutate_once(pair, position);
  if (!m.pair.is_support_tau_tilting()) exchange_failure(pair, position, "result is not support tau-tilting");
  for (std::size_t k = 0; k < pair.size(); ++k) {
    if (k != position && !m.pair.position_of(pair.position_vector(k))) {
      exchange_failure(pair, position, "result lost an unexchanged position");
    }
  }
  if (m.pair.position_of(pair.position_vector(position))) {
    exchange_failure(pair, position, "result still contains the exchanged position");
  }
  const Mutation back = mutate_once(m.pair, m.exchanged);
  if (back.pair.key() != pair.key()) exchange_failure(pair, position, "mutating back does not return the input");
  const bool down = leq(m.pair, pair);
  const bool up = leq(pair, m.pair);
  const bool consistent = m.direction == Direction::Left ? (down && !up) : (up && !down);
  if (!consistent) exchange_failure(pair, position, std::string("direction ") + to_string(m.direction) + " disagrees with the order");
  if (back.direction == m.direction) exchange_failure(pair, position, "inverse mutation has the same direction");
  return m;
}

ExchangeGraph enumerate(const AlgebraPtr& algebra, Limits limits) {
  ExchangeGraph g;
  g.algebra = algebra;
  g.complete = true;
  TauPair root = TauPair::regular(algebra);
  std::deque<std::pair<PairKey, std::size_t>> frontier{{root.key(), 0}};
  g.vertices.emplace(root.key(), std::move(root));
  while (!frontier.empty()) {
    auto [key, depth] = frontier.front();
    frontier.pop_front();
    const TauPair& pair = g.vertices.at(key);
    if (depth >= limits.max_depth) {
      g.complete = false;
      continue;
    }
    for (std::size_t k = 0; k < pair.summands().size(); ++k) {
      if (mutation_direction(pair, k) != Direction::Left) continue;
      Mutation m = mutate(pair, k);
      const PairKey target = m.pair.key();
      if (!g.vertices.contains(target)) {
        if (g.vertices.size() >= limits.max_vertices) {
          g.complete = false;
          continue;
        }
        g.vertices.emplace(target, std::move(m.pair));
        frontier.emplace_back(target, depth + 1);
      }
      g.arrows.push_back(GraphArrow{key, target, k});
    }
  }
  std::sort(g.arrows.begin(), g.arrows.end());
  return g;
}

HasseReport verify_hasse(const ExchangeGraph& graph) {
  if (!graph.complete) throw Error(ErrorKind::Inconclusive, "graph is incomplete");
  std::vector<const TauPair*> pairs;
  std::vector<PairKey> keys;
  for (const auto& [k, p] : graph.vertices) {
    keys.push_back(k);
    pairs.push_back(&p);
  }
  const std::size_t n = pairs.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) le[a][b] = a == b || leq(*pairs[a], *pairs[b]);

  std::vector<std::string> problems;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (le[a][b] && le[b][a]) problems.push_back("order not antisymmetric on " + key_string(keys[a]) + ", " + key_string(keys[b]));

  std::set<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !le[b][a]) continue;
      bool between = false;
      for (std::size_t c = 0; c < n && !between; ++c) between = c != a && c != b && le[b][c] && le[c][a];
      if (!between) covers.emplace(a, b);
    }
  auto index = [&](const PairKey& k) {
    return static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
  };
  std::set<std::pair<std::size_t, std::size_t>> arrows;
  std::vector<std::size_t> degree(n, 0), in(n, 0), out(n, 0);
  for (const auto& arrow : graph.arrows) {
    const auto a = index(arrow.from);
    const auto b = index(arrow.to);
    if (!arrows.emplace(a, b).second) problems.push_back("duplicate arrow " + key_string(arrow.from) + " -> " + key_string(arrow.to));
    ++degree[a];
    ++degree[b];
    ++out[a];
    ++in[b];
  }
  for (const auto& c : covers)
    if (!arrows.contains(c)) problems.push_back("missing arrow " + key_string(keys[c.first]) + " -> " + key_string(keys[c.second]));
  for (const auto& a : arrows)
    if (!covers.contains(a)) problems.push_back("arrow is not a cover " + key_string(keys[a.first]) + " -> " + key_string(keys[a.second]));

  const std::size_t rank = static_cast<std::size_t>(graph.algebra->vertex_count());
  for (std::size_t a = 0; a < n; ++a)
    if (degree[a] != rank) problems.push_back("vertex " + key_string(keys[a]) + " has degree " + std::to_string(degree[a]));

  HasseReport report;
  report.vertices = n;
  report.covers = covers.size();
  std::vector<std::size_t> sources, sinks;
  for (std::size_t a = 0; a < n; ++a) {
    if (in[a] == 0) sources.push_back(a);
    if (out[a] == 0) sinks.push_back(a);
  }
  const PairKey top = TauPair::regular(graph.algebra).key();
  const PairKey bottom = TauPair::zero(graph.algebra).key();
  if (sources.size() != 1 || keys[sources.front()] != top) problems.push_back("source is not unique or not (Λ, 0)");
  else report.source = top;
  if (sinks.size() != 1 || keys[sinks.front()] != bottom) problems.push_back("sink is not unique or not (0, Λ)");
  else report.sink = bottom;

  if (!problems.empty()) {
    std::string message = std::to_string(problems.size()) + " discrepancies:";
    for (const auto& p : problems) message += "\n  " + p;
    throw Error(ErrorKind::HasseMismatch, message);
  }
  return report;
}

TauPair bongartz_completion(const Module& u, Limits limits) {
  const TauPair given = check_pair({u}, {});
  const ExchangeGraph graph = enumerate(u.algebra(), limits);
  if (!graph.complete) throw Error(ErrorKind::Inconclusive, "enumeration limits reached before certification");
  std::vector<const TauPair*> completions;
  for (const auto& [key, pair] : graph.vertices) {
    if (!pair.support().empty()) continue;
    bool contains = true;
    for (const auto& s : given.summands()) contains = contains && pair.position_of(s.g).has_value();
    if (contains) completions.push_back(&pair);
  }
  for (const TauPair* c : completions) {
    bool maximal = true;
    for (const TauPair* other : completions) maximal = maximal && leq(*other, *c);
    if (!maximal) continue;
    if (!classify_pair(*c).tau_tilting) throw Error(ErrorKind::Inconclusive, "maximal completion is not tau-tilting");
    return *c;
  }
  throw Error(ErrorKind::Inconclusive, "no maximum among the completions");
}

Companion torsionfree_companion(const TauPair& pair) {
  if (!pair.is_support_tau_tilting()) throw Error(ErrorKind::NotComplete, "pair is not support tau-tilting");
  const AlgebraPtr& alg = pair.algebra();
  std::vector<Module> first, second;
  for (const auto& s : pair.summands()) {
    if (is_indecomposable_projective(s)) {
      second.push_back(standard_module(alg, StandardKind::Injective, s.presentation.p0().front()));
    } else {
      first.push_back(tau(s.presentation));
    }
  }
  for (int i : pair.support()) first.push_back(standard_module(alg, StandardKind::Injective, i));
  Companion c{sum_or_zero(alg, first), sum_or_zero(alg, second)};

  const TauPair dual = dagger(pair);
  std::vector<Module> dual_first;
  for (const auto& s : dual.summands()) dual_first.push_back(dualize(s.module).retag(alg));
  std::vector<Module> dual_second;
  for (int i : dual.support())
    dual_second.push_back(dualize(standard_module(dual.algebra(), StandardKind::Projective, i)).retag(alg));
  if (!is_isomorphic(c.torsion_free, sum_or_zero(alg, dual_first)) ||
      !is_isomorphic(c.injective, sum_or_zero(alg, dual_second))) {
    throw Error(ErrorKind::ExchangeAssertionFailed, "companion disagrees with the dual of the dagger");
  }
  return c;
}

}  // namespace tautilt
