#include "tautilt/silting.hpp"

#include <algorithm>
#include <functional>

#include "tautilt/errors.hpp"

namespace tautilt {

namespace {

using Coords = std::vector<Scalar>;
using LinearFn = std::function<Coords(const Coords&)>;

Matrix linear_map(std::size_t in, std::size_t out, const LinearFn& fn) {
  Matrix m(out, in);
  for (std::size_t c = 0; c < in; ++c) {
    Coords e(in);
    e[c] = 1;
    const Coords image = fn(e);
    for (std::size_t r = 0; r < out; ++r) m(r, c) = image[r];
  }
  return m;
}

Coords concat(const Coords& a, const Coords& b) {
  Coords c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

Coords subtract(const Field& f, const Coords& a, const Coords& b) {
  Coords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = f.sub(a[i], b[i]);
  return c;
}

/// Greedily selects candidates that are independent modulo span(base).
std::vector<std::size_t> complement_indices(const Field& field, std::size_t size, const std::vector<Coords>& base,
                                            const std::vector<Coords>& candidates) {
  Matrix span = linalg::column_basis(field, Matrix::from_columns(size, base));
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Matrix extended = Matrix::hstack(span, Matrix::from_columns(size, {candidates[i]}));
    if (linalg::rank(field, extended) > span.cols()) {
      span = std::move(extended);
      picked.push_back(i);
    }
  }
  return picked;
}

struct Side {
  const AlgebraPtr& algebra;
  std::vector<int> from;
  std::vector<int> to;

  std::size_t size() const { return proj_hom_size(*algebra, from, to); }
  ProjMap map(const Coords& c) const { return proj_from_coordinates(algebra, from, to, c); }
};

std::vector<int> counts(const Algebra& a, const std::vector<int>& copies) {
  std::vector<int> m(a.vertex_count(), 0);
  for (int v : copies) ++m[v];
  return m;
}

bool has_unit_part(const Algebra& a, const ProjMap& f, std::size_t r, std::size_t c) {
  if (f.target[r] != f.source[c]) return false;
  return f.at(r, c).coefficients[a.idempotent(f.target[r])] != 0;
}

std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const Algebra& a, const ProjMap& f) {
  for (std::size_t r = 0; r < f.target.size(); ++r)
    for (std::size_t c = 0; c < f.source.size(); ++c)
      if (has_unit_part(a, f, r, c)) return std::make_pair(r, c);
  return std::nullopt;
}

ProjMap drop(const ProjMap& f, std::optional<std::size_t> row, std::optional<std::size_t> col) {
  std::vector<int> source, target;
  for (std::size_t c = 0; c < f.source.size(); ++c)
    if (c != col) source.push_back(f.source[c]);
  for (std::size_t r = 0; r < f.target.size(); ++r)
    if (r != row) target.push_back(f.target[r]);
  ProjMap g = zero_proj_map(f.algebra, source, target);
  std::size_t rr = 0;
  for (std::size_t r = 0; r < f.target.size(); ++r) {
    if (r == row) continue;
    std::size_t cc = 0;
    for (std::size_t c = 0; c < f.source.size(); ++c) {
      if (c == col) continue;
      g.at(rr, cc++) = f.at(r, c);
    }
    ++rr;
  }
  return g;
}

/// One Gaussian elimination step at a unit entry: deletes row r0 and column
/// c0 and corrects the remaining entries.
ProjMap eliminate(const ProjMap& f, std::size_t r0, std::size_t c0) {
  const Algebra& a = *f.algebra;
  const AlgebraElement inv = local_inverse(a, f.at(r0, c0), f.source[c0]);
  ProjMap g = f;
  for (std::size_t r = 0; r < f.target.size(); ++r) {
    if (r == r0 || f.at(r, c0).is_zero()) continue;
    for (std::size_t c = 0; c < f.source.size(); ++c) {
      if (c == c0 || f.at(r0, c).is_zero()) continue;
      const auto correction = a.multiply(a.multiply(f.at(r0, c), inv), f.at(r, c0));
      g.at(r, c) = a.subtract(g.at(r, c), correction);
    }
  }
  return drop(g, r0, c0);
}

/// A --alpha--> B --beta--> C.
struct ThreeTerm {
  ProjMap alpha;
  ProjMap beta;
};

ThreeTerm reduce_three_term(ThreeTerm t) {
  const Algebra& a = *t.alpha.algebra;
  while (true) {
    if (auto p = find_pivot(a, t.alpha)) {
      t.alpha = eliminate(t.alpha, p->first, p->second);
      t.beta = drop(t.beta, std::nullopt, p->first);
      continue;
    }
    if (auto p = find_pivot(a, t.beta)) {
      t.beta = eliminate(t.beta, p->first, p->second);
      t.alpha = drop(t.alpha, p->second, std::nullopt);
      continue;
    }
    return t;
  }
}

ChainMap compose_chain(const ChainMap& g, const ChainMap& f) {
  return ChainMap{{compose(g.components[0], f.components[0]), compose(g.components[1], f.components[1])}};
}

Coords chain_coords(const ChainMap& f) {
  return concat(proj_coordinates(f.components[0]), proj_coordinates(f.components[1]));
}

/// Chain maps P -> Q as representatives of a basis of Hom_K(P, Q), together
/// with a spanning set of the null-homotopic maps.
struct DegreeZero {
  std::vector<ChainMap> reps;
  std::vector<ChainMap> null;
  std::size_t size = 0;
};

DegreeZero degree_zero(const TwoTermComplex& p, const TwoTermComplex& q) {
  const AlgebraPtr& alg = p.algebra();
  const Field& field = alg->field();
  const Side low{alg, p.d.source, q.d.source};
  const Side high{alg, p.d.target, q.d.target};
  const Side cross{alg, p.d.source, q.d.target};
  const Side homotopy{alg, p.d.target, q.d.source};
  const std::size_t n1 = low.size(), n0 = high.size();

  // q f(-1) - f(0) p = 0
  const Matrix constraint = linear_map(n1 + n0, cross.size(), [&](const Coords& v) {
    const Coords v1(v.begin(), v.begin() + n1), v0(v.begin() + n1, v.end());
    return subtract(field, proj_coordinates(compose(q.d, low.map(v1))), proj_coordinates(compose(high.map(v0), p.d)));
  });
  const Matrix cycles = constraint.rows() == 0 ? Matrix::identity(n1 + n0) : linalg::kernel(field, constraint);

  DegreeZero out;
  out.size = n1 + n0;
  std::vector<Coords> null_coords;
  for (std::size_t i = 0; i < homotopy.size(); ++i) {
    Coords e(homotopy.size());
    e[i] = 1;
    const ProjMap h = homotopy.map(e);
    ChainMap z{{compose(h, p.d), compose(q.d, h)}};
    null_coords.push_back(chain_coords(z));
    out.null.push_back(std::move(z));
  }
  std::vector<Coords> cycle_coords;
  for (std::size_t c = 0; c < cycles.cols(); ++c) cycle_coords.push_back(cycles.column(c));
  for (std::size_t i : complement_indices(field, out.size, null_coords, cycle_coords)) {
    const Coords& v = cycle_coords[i];
    out.reps.push_back(ChainMap{{low.map(Coords(v.begin(), v.begin() + n1)), high.map(Coords(v.begin() + n1, v.end()))}});
  }
  return out;
}

Scalar top_trace(const ChainMap& f) {
  const Algebra& a = *f.components[0].algebra;
  Scalar t = 0;
  for (const ProjMap& m : f.components)
    for (std::size_t i = 0; i < std::min(m.source.size(), m.target.size()); ++i)
      if (m.source[i] == m.target[i]) t = a.field().add(t, m.at(i, i).coefficients[a.idempotent(m.source[i])]);
  return t;
}

/// Spanning set of rad End_K(U) for an indecomposable U: the kernel of the
/// trace of the induced map on tops.
std::vector<ChainMap> radical_endomorphisms(const TwoTermComplex& u) {
  const DegreeZero end = degree_zero(u, u);
  const Field& field = u.algebra()->field();
  std::vector<ChainMap> rad = end.null;
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < end.reps.size() && !pivot; ++i)
    if (top_trace(end.reps[i]) != 0) pivot = i;
  if (!pivot) throw Error(ErrorKind::InvalidComplex, "summand complex has no invertible endomorphism");
  const Scalar tp = top_trace(end.reps[*pivot]);
  for (std::size_t i = 0; i < end.reps.size(); ++i) {
    if (i == *pivot) continue;
    const Scalar ratio = field.div(top_trace(end.reps[i]), tp);
    ChainMap r = end.reps[i];
    for (std::size_t c = 0; c < 2; ++c) {
      ProjMap scaled = end.reps[*pivot].components[c];
      for (auto& e : scaled.entries) e = u.algebra()->scale(field.neg(ratio), e);
      r.components[c] = add(r.components[c], scaled);
    }
    rad.push_back(std::move(r));
  }
  return rad;
}

struct KApproximation {
  std::vector<std::size_t> copies;
  std::vector<ChainMap> maps;
};

/// Minimal left (maps X -> U) or right (maps U -> X) add(U)-approximation in
/// the homotopy category.
KApproximation k_approximation(const TwoTermComplex& x, const std::vector<TwoTermComplex>& others, bool left) {
  const Field& field = x.algebra()->field();
  const std::size_t r = others.size();
  std::vector<DegreeZero> homs(r);
  std::vector<std::vector<ChainMap>> rads(r);
  for (std::size_t l = 0; l < r; ++l) {
    homs[l] = left ? degree_zero(x, others[l]) : degree_zero(others[l], x);
    rads[l] = radical_endomorphisms(others[l]);
  }
  KApproximation out;
  for (std::size_t l = 0; l < r; ++l) {
    if (homs[l].reps.empty()) continue;
    std::vector<Coords> base;
    for (const auto& z : homs[l].null) base.push_back(chain_coords(z));
    for (std::size_t j = 0; j < r; ++j) {
      if (homs[j].reps.empty()) continue;
      std::vector<ChainMap> between;
      if (j == l) {
        between = rads[l];
      } else {
        between = left ? degree_zero(others[j], others[l]).reps : degree_zero(others[l], others[j]).reps;
      }
      for (const auto& g : between)
        for (const auto& h : homs[j].reps) base.push_back(chain_coords(left ? compose_chain(g, h) : compose_chain(h, g)));
    }
    std::vector<Coords> candidates;
    for (const auto& h : homs[l].reps) candidates.push_back(chain_coords(h));
    for (std::size_t i : complement_indices(field, homs[l].size, base, candidates)) {
      out.copies.push_back(l);
      out.maps.push_back(homs[l].reps[i]);
    }
  }
  return out;
}

ProjMap stack_rows(const AlgebraPtr& alg, const std::vector<int>& source, const std::vector<ProjMap>& blocks) {
  std::vector<int> target;
  for (const auto& b : blocks) target.insert(target.end(), b.target.begin(), b.target.end());
  ProjMap f = zero_proj_map(alg, source, target);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.target.size(); ++r)
      for (std::size_t c = 0; c < b.source.size(); ++c) f.at(r0 + r, c) = b.at(r, c);
    r0 += b.target.size();
  }
  return f;
}

ProjMap stack_columns(const AlgebraPtr& alg, const std::vector<int>& target, const std::vector<ProjMap>& blocks) {
  std::vector<int> source;
  for (const auto& b : blocks) source.insert(source.end(), b.source.begin(), b.source.end());
  ProjMap f = zero_proj_map(alg, source, target);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.target.size(); ++r)
      for (std::size_t c = 0; c < b.source.size(); ++c) f.at(r, c0 + c) = b.at(r, c);
    c0 += b.source.size();
  }
  return f;
}

ProjMap negate(const ProjMap& f) {
  ProjMap g = f;
  for (auto& e : g.entries) e = f.algebra->scale(Scalar(-1), e);
  return g;
}

/// Block sum keeping the copies in summand order.
ProjMap unsorted_sum(const AlgebraPtr& alg, const std::vector<TwoTermComplex>& parts) {
  if (parts.empty()) return zero_proj_map(alg, {}, {});
  std::vector<ProjMap> blocks;
  for (const auto& p : parts) blocks.push_back(p.d);
  return block_diagonal(blocks);
}

std::vector<TwoTermComplex> summand_complexes(const TauPair& pair) {
  std::vector<TwoTermComplex> parts;
  for (const auto& s : pair.summands()) parts.push_back(make_complex(s.presentation.differential));
  for (int v : pair.support()) parts.push_back(make_complex(zero_proj_map(pair.algebra(), {v}, {})));
  return parts;
}

TwoTermComplex left_cone(const TwoTermComplex& x, const std::vector<TwoTermComplex>& others) {
  const AlgebraPtr& alg = x.algebra();
  const auto approx = k_approximation(x, others, true);
  std::vector<TwoTermComplex> targets;
  std::vector<ProjMap> low_blocks{negate(x.d)}, high_blocks;
  for (std::size_t k = 0; k < approx.copies.size(); ++k) {
    targets.push_back(others[approx.copies[k]]);
    low_blocks.push_back(approx.maps[k].components[0]);
    high_blocks.push_back(approx.maps[k].components[1]);
  }
  const ProjMap q = unsorted_sum(alg, targets);
  // Cone: X(-1) -> X(0) ⊕ Q'(-1) -> Q'(0)
  ThreeTerm cone{stack_rows(alg, x.d.source, low_blocks),
                 stack_columns(alg, q.target, {stack_rows(alg, x.d.target, high_blocks), q})};
  const ThreeTerm reduced = reduce_three_term(cone);
  if (!reduced.alpha.source.empty()) throw Error(ErrorKind::MutationMismatch, "left mutation is not two-term");
  return make_complex(reduced.beta);
}

TwoTermComplex right_cone(const TwoTermComplex& x, const std::vector<TwoTermComplex>& others) {
  const AlgebraPtr& alg = x.algebra();
  const auto approx = k_approximation(x, others, false);
  std::vector<TwoTermComplex> sources;
  std::vector<ProjMap> low_blocks, high_blocks;
  for (std::size_t k = 0; k < approx.copies.size(); ++k) {
    sources.push_back(others[approx.copies[k]]);
    low_blocks.push_back(approx.maps[k].components[0]);
    high_blocks.push_back(approx.maps[k].components[1]);
  }
  const ProjMap q = unsorted_sum(alg, sources);
  // Cone of Q' -> X shifted back: Q'(-1) -> Q'(0) ⊕ X(-1) -> X(0)
  const ProjMap g_low = stack_columns(alg, x.d.source, low_blocks);
  const ProjMap g_high = stack_columns(alg, x.d.target, high_blocks);
  ThreeTerm cone{stack_rows(alg, q.source, {negate(q), g_low}), stack_columns(alg, x.d.target, {g_high, x.d})};
  const ThreeTerm reduced = reduce_three_term(cone);
  if (!reduced.beta.target.empty()) throw Error(ErrorKind::MutationMismatch, "right mutation is not two-term");
  return make_complex(reduced.alpha);
}

}  // namespace

std::vector<int> TwoTermComplex::multiplicities_minus1() const { return counts(*algebra(), d.source); }
std::vector<int> TwoTermComplex::multiplicities0() const { return counts(*algebra(), d.target); }

TwoTermComplex make_complex(ProjMap d) { return TwoTermComplex{sort_copies(d)}; }

TwoTermComplex regular_complex(const AlgebraPtr& algebra) {
  std::vector<int> all(algebra->vertex_count());
  for (int v = 0; v < algebra->vertex_count(); ++v) all[v] = v;
  return make_complex(zero_proj_map(algebra, {}, all));
}

TwoTermComplex shifted_regular_complex(const AlgebraPtr& algebra) {
  std::vector<int> all(algebra->vertex_count());
  for (int v = 0; v < algebra->vertex_count(); ++v) all[v] = v;
  return make_complex(zero_proj_map(algebra, all, {}));
}

TwoTermComplex complex_sum(const std::vector<TwoTermComplex>& parts) {
  if (parts.empty()) throw std::invalid_argument("complex_sum: no parts");
  std::vector<ProjMap> blocks;
  for (const auto& p : parts) blocks.push_back(p.d);
  return make_complex(block_diagonal(blocks));
}

AlgebraElement local_inverse(const Algebra& a, const AlgebraElement& u, int vertex) {
  const Field& field = a.field();
  const std::size_t e = a.idempotent(vertex);
  const Scalar lambda = u.coefficients[e];
  if (lambda == 0) throw Error(ErrorKind::InvalidComplex, "element is not invertible");
  const Scalar lambda_inv = field.inv(lambda);
  // u = lambda (e - n) with n nilpotent, so u^{-1} = lambda^{-1} (e + n + n^2 + ...).
  AlgebraElement n = a.scale(field.neg(lambda_inv), u);
  n.coefficients[e] = 0;
  AlgebraElement sum = a.basis_element(e);
  AlgebraElement power = a.basis_element(e);
  while (true) {
    power = a.multiply(power, n);
    if (power.is_zero()) break;
    sum = a.add(sum, power);
  }
  return a.scale(lambda_inv, sum);
}

TwoTermComplex reduce_complex(const TwoTermComplex& c) {
  ProjMap d = c.d;
  while (auto p = find_pivot(*d.algebra, d)) d = eliminate(d, p->first, p->second);
  return make_complex(std::move(d));
}

bool is_reduced(const TwoTermComplex& c) { return !find_pivot(*c.algebra(), c.d).has_value(); }

HomK hom_k(const TwoTermComplex& p, const TwoTermComplex& q, int shift) {
  if (!same_algebra(*p.algebra(), *q.algebra())) throw Error(ErrorKind::AlgebraMismatch, "complexes over different algebras");
  const AlgebraPtr& alg = p.algebra();
  const Field& field = alg->field();
  HomK out;
  if (shift == 0) {
    DegreeZero z = degree_zero(p, q);
    out.dimension = z.reps.size();
    out.basis = std::move(z.reps);
    return out;
  }
  if (shift == 1) {
    const Side target{alg, p.d.source, q.d.target};
    const Side high{alg, p.d.target, q.d.target};
    const Side low{alg, p.d.source, q.d.source};
    std::vector<Coords> image;
    for (std::size_t i = 0; i < high.size(); ++i) {
      Coords e(high.size());
      e[i] = 1;
      image.push_back(proj_coordinates(compose(high.map(e), p.d)));
    }
    for (std::size_t i = 0; i < low.size(); ++i) {
      Coords e(low.size());
      e[i] = 1;
      image.push_back(proj_coordinates(compose(q.d, low.map(e))));
    }
    std::vector<Coords> units;
    for (std::size_t i = 0; i < target.size(); ++i) {
      Coords e(target.size());
      e[i] = 1;
      units.push_back(std::move(e));
    }
    for (std::size_t i : complement_indices(field, target.size(), image, units)) {
      out.basis.push_back(ChainMap{{target.map(units[i])}});
    }
    out.dimension = out.basis.size();
    return out;
  }
  if (shift == -1) {
    const Side maps{alg, p.d.target, q.d.source};
    const Side after_p{alg, p.d.source, q.d.source};
    const Side after_q{alg, p.d.target, q.d.target};
    const Matrix constraint = linear_map(maps.size(), after_p.size() + after_q.size(), [&](const Coords& v) {
      const ProjMap f = maps.map(v);
      return concat(proj_coordinates(compose(f, p.d)), proj_coordinates(compose(q.d, f)));
    });
    const Matrix k = constraint.rows() == 0 ? Matrix::identity(maps.size()) : linalg::kernel(field, constraint);
    for (std::size_t c = 0; c < k.cols(); ++c) out.basis.push_back(ChainMap{{maps.map(k.column(c))}});
    out.dimension = out.basis.size();
    return out;
  }
  return out;
}

bool is_presilting(const TwoTermComplex& p) { return hom_k(p, p, 1).dimension == 0; }

bool is_silting(const TwoTermComplex& p) {
  if (!is_presilting(p)) return false;
  return complex_to_pair(p).size() == static_cast<std::size_t>(p.algebra()->vertex_count());
}

TwoTermComplex pair_to_complex(const TauPair& pair) {
  const auto parts = summand_complexes(pair);
  if (parts.empty()) return make_complex(zero_proj_map(pair.algebra(), {}, {}));
  return complex_sum(parts);
}

TauPair complex_to_pair(const TwoTermComplex& complex) {
  const TwoTermComplex c = reduce_complex(complex);
  const AlgebraPtr& alg = c.algebra();
  const Algebra& a = *alg;
  const Field& field = a.field();
  const auto& low = c.d.source;
  if (c.d.target.empty() && low.empty()) return TauPair::from_indecomposables(alg, {}, {});

  const ModuleMap realized = realize(c.d);
  const KernelCokernel kc = map_kernel_cokernel(realized);
  const StandardSum sum = standard_sum(alg, StandardKind::Projective, low);

  // Kernel elements whose tops are independent generate summands P(i) of the
  // degree -1 term that map to zero; they become support vertices.
  std::vector<int> support;
  for (int i = 0; i < a.vertex_count(); ++i) {
    std::vector<std::size_t> top_rows;
    for (std::size_t k = 0; k < low.size(); ++k)
      if (low[k] == i) top_rows.push_back(sum.offsets[i][k] + a.path_position(a.idempotent(i)));
    if (top_rows.empty()) continue;
    const Matrix& kernel = kc.inclusion.components[i];
    Matrix tops(top_rows.size(), kernel.cols());
    for (std::size_t r = 0; r < top_rows.size(); ++r)
      for (std::size_t col = 0; col < kernel.cols(); ++col) tops(r, col) = kernel(top_rows[r], col);
    const std::size_t count = linalg::rank(field, tops);
    if (count > 1) throw Error(ErrorKind::NotBasic, "P(" + a.vertex_name(i) + ")[1] occurs more than once");
    if (count == 1) support.push_back(i);
  }

  std::vector<Module> leaves;
  for (const auto& s : decompose(kc.cokernel).summands) {
    if (s.multiplicity > 1) throw Error(ErrorKind::NotBasic, "H0 has a repeated summand " + loewy_label(s.module));
    leaves.push_back(s.module);
  }
  return TauPair::from_indecomposables(alg, std::move(leaves), std::move(support));
}

bool silting_leq(const TwoTermComplex& p, const TwoTermComplex& q) { return hom_k(p, q, 1).dimension == 0; }

SiltingMutation silting_mutate(const TwoTermComplex& p, std::size_t position) {
  if (!is_presilting(p)) throw Error(ErrorKind::NotComplete, "complex is not presilting");
  const TauPair pair = complex_to_pair(p);
  if (!pair.is_support_tau_tilting()) throw Error(ErrorKind::NotComplete, "complex is not silting");
  if (position >= pair.size()) throw Error(ErrorKind::InvalidPosition, "position out of range");
  const Direction direction = mutation_direction(pair, position);

  auto parts = summand_complexes(pair);
  const TwoTermComplex x = parts[position];
  parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(position));
  TwoTermComplex y = direction == Direction::Left ? left_cone(x, parts) : right_cone(x, parts);
  parts.push_back(y);
  TwoTermComplex result = reduce_complex(complex_sum(parts));

  const Mutation expected = mutate(pair, position);
  if (complex_to_pair(result).key() != expected.pair.key()) {
    throw Error(ErrorKind::MutationMismatch, "cone route gives " + key_string(complex_to_pair(result).key()) +
                                                 ", pair route gives " + key_string(expected.pair.key()));
  }
  return SiltingMutation{std::move(result), direction};
}

}  // namespace tautilt
