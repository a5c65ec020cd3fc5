#include "tautilt/decompose.hpp"

#include <random>

#include "tautilt/errors.hpp"
#include "tautilt/polynomial.hpp"

namespace tautilt {

namespace {

constexpr int kRandomAttempts = 32;
constexpr int kCoefficientRange = 9;

Matrix flattened_columns(const std::vector<ModuleMap>& maps, std::size_t size) {
  std::vector<std::vector<Scalar>> cols;
  for (const auto& f : maps) cols.push_back(flatten(f));
  return Matrix::from_columns(size, cols);
}

std::vector<Matrix> evaluate(const Field& field, const poly::Poly& p, const ModuleMap& phi) {
  std::vector<Matrix> out;
  for (const Matrix& m : phi.components) {
    Matrix acc(m.rows(), m.cols());
    for (std::size_t i = p.size(); i-- > 0;) {
      acc = linalg::multiply(field, acc, m);
      for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) = field.add(acc(d, d), p[i]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

poly::Poly minimal_polynomial(const Field& field, const ModuleMap& phi) {
  const ModuleMap id = identity_map(phi.source);
  std::vector<std::vector<Scalar>> powers{flatten(id)};
  const std::size_t size = powers.front().size();
  ModuleMap current = id;
  while (true) {
    current = compose(phi, current);
    const auto v = flatten(current);
    const Matrix basis = Matrix::from_columns(size, powers);
    Matrix rhs(size, 1);
    for (std::size_t r = 0; r < size; ++r) rhs(r, 0) = v[r];
    if (auto x = linalg::solve(field, basis, rhs)) {
      poly::Poly p;
      for (std::size_t i = 0; i < powers.size(); ++i) p.push_back(field.neg((*x)(i, 0)));
      p.push_back(Scalar(1));
      return poly::trim(std::move(p));
    }
    powers.push_back(v);
  }
}

Module kernel_submodule(const Field& field, const Module& m, const std::vector<Matrix>& mats) {
  std::vector<Matrix> bases;
  for (int v = 0; v < m.algebra()->vertex_count(); ++v) bases.push_back(linalg::kernel(field, mats[v]));
  return submodule(m, bases).source;
}

void split(const Module& m, std::vector<Module>& leaves) {
  if (m.is_zero()) return;
  const EndStructure end = end_structure(m);
  if (end.local) {
    leaves.push_back(m);
    return;
  }
  const Field& field = m.field();
  std::mt19937_64 rng(m.hash());
  std::uniform_int_distribution<int> coefficient(-kCoefficientRange, kCoefficientRange);

  auto try_split = [&](const ModuleMap& phi) {
    const auto minpoly = minimal_polynomial(field, phi);
    const auto factors = poly::coprime_split(field, minpoly, rng);
    if (!factors) return false;
    split(kernel_submodule(field, m, evaluate(field, factors->first, phi)), leaves);
    split(kernel_submodule(field, m, evaluate(field, factors->second, phi)), leaves);
    return true;
  };

  for (const auto& phi : end.basis) {
    if (end.in_radical(phi)) continue;
    if (try_split(phi)) return;
  }
  for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
    ModuleMap phi = zero_map(m, m);
    for (const auto& b : end.basis) phi = add_maps(phi, scale_map(Scalar(coefficient(rng)), b));
    if (try_split(phi)) return;
  }
  throw Error(ErrorKind::DecompositionInconclusive,
              "no splitting endomorphism found; dim End/rad = " + std::to_string(end.top_dimension()));
}

}  // namespace

std::vector<Scalar> EndStructure::coordinates(const ModuleMap& f) const { return coords.of(flatten(f)); }

bool EndStructure::in_radical(const ModuleMap& f) const {
  const auto c = coordinates(f);
  if (radical.cols() == 0) {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }
  return linalg::in_span(f.source.field(), radical, c);
}

EndStructure end_structure(const Module& m) {
  const Field& field = m.field();
  EndStructure s;
  s.basis = hom_basis(m, m);
  const std::size_t n = s.basis.size();
  if (!field.characteristic_exceeds(n)) {
    throw Error(ErrorKind::CharacteristicTooSmall,
                "characteristic " + field.characteristic().get_str() + " does not exceed dim End = " + std::to_string(n));
  }
  const std::size_t size = hom_space_size(m, m);
  s.coords = linalg::Coordinates(field, flattened_columns(s.basis, size));

  // table[i][j] = coordinates of basis[i] * basis[j] (basis[i] after basis[j]).
  std::vector<std::vector<std::vector<Scalar>>> table(n, std::vector<std::vector<Scalar>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = s.coordinates(compose(s.basis[i], s.basis[j]));

  // tr(L_{b_i}) = sum_k coefficient of b_k in b_i b_k.
  std::vector<Scalar> trace(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) trace[i] = field.add(trace[i], table[i][k][k]);

  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) gram(i, j) = field.add(gram(i, j), field.mul(table[i][j][k], trace[k]));
  s.radical = linalg::kernel(field, gram);
  s.local = s.top_dimension() == 1;
  return s;
}

std::size_t Decomposition::total() const {
  std::size_t t = 0;
  for (const auto& s : summands) t += static_cast<std::size_t>(s.multiplicity);
  return t;
}

bool isomorphic_indecomposables(const Module& a, const EndStructure& end_a, const Module& b) {
  if (a.dims() != b.dims()) return false;
  const auto there = hom_basis(a, b);
  if (there.empty()) return false;
  const auto back = hom_basis(b, a);
  for (const auto& f : there)
    for (const auto& g : back)
      if (!end_a.in_radical(compose(g, f))) return true;
  return false;
}

Decomposition decompose(const Module& m) {
  std::vector<Module> leaves;
  split(m, leaves);
  Decomposition d;
  std::vector<EndStructure> ends;
  for (const auto& leaf : leaves) {
    bool matched = false;
    for (std::size_t i = 0; i < d.summands.size() && !matched; ++i) {
      if (isomorphic_indecomposables(d.summands[i].module, ends[i], leaf)) {
        ++d.summands[i].multiplicity;
        matched = true;
      }
    }
    if (!matched) {
      d.summands.push_back(Summand{leaf, 1});
      ends.push_back(end_structure(leaf));
    }
  }
  return d;
}

bool is_isomorphic(const Module& a, const Module& b) {
  require_same_algebra(a, b);
  if (a.dims() != b.dims()) return false;
  const auto da = decompose(a);
  const auto db = decompose(b);
  if (da.distinct() != db.distinct()) return false;
  std::vector<bool> used(db.distinct(), false);
  for (const auto& s : da.summands) {
    const auto end = end_structure(s.module);
    bool found = false;
    for (std::size_t j = 0; j < db.summands.size() && !found; ++j) {
      if (used[j] || db.summands[j].multiplicity != s.multiplicity) continue;
      if (isomorphic_indecomposables(s.module, end, db.summands[j].module)) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace tautilt
