#include "tautilt/approximation.hpp"

#include "tautilt/errors.hpp"

namespace tautilt {

namespace {

Matrix span_columns(const std::vector<ModuleMap>& maps, std::size_t size) {
  std::vector<std::vector<Scalar>> cols;
  for (const auto& f : maps) cols.push_back(flatten(f));
  return Matrix::from_columns(size, cols);
}

std::vector<ModuleMap> radical_maps(const EndStructure& end) {
  std::vector<ModuleMap> out;
  const Module& m = end.basis.front().source;
  for (std::size_t c = 0; c < end.radical.cols(); ++c) {
    ModuleMap f = zero_map(m, m);
    for (std::size_t k = 0; k < end.basis.size(); ++k) {
      if (end.radical(k, c) != 0) f = add_maps(f, scale_map(end.radical(k, c), end.basis[k]));
    }
    out.push_back(std::move(f));
  }
  return out;
}

ModuleMap stack(const Module& x, const Module& target, const std::vector<ModuleMap>& rows) {
  ModuleMap f = zero_map(x, target);
  for (int v = 0; v < x.algebra()->vertex_count(); ++v) {
    std::size_t r0 = 0;
    for (const auto& g : rows) {
      f.components[v].set_block(r0, 0, g.components[v]);
      r0 += g.components[v].rows();
    }
  }
  return f;
}

Module sum_of(const Module& x, const std::vector<Module>& parts) {
  return parts.empty() ? Module::zero(x.algebra()) : direct_sum(parts);
}

/// Hom(target, U) composed with f spans Hom(X, U).
bool factors_through(const ModuleMap& f, const Module& u, std::size_t expected) {
  if (expected == 0) return true;
  std::vector<ModuleMap> pulled;
  for (const auto& g : hom_basis(f.target, u)) pulled.push_back(compose(g, f));
  if (pulled.size() < expected) return false;
  return linalg::rank(u.field(), span_columns(pulled, hom_space_size(f.source, u))) == expected;
}

bool is_approximation(const ModuleMap& f, const std::vector<Module>& summands, const std::vector<std::size_t>& dims) {
  for (std::size_t i = 0; i < summands.size(); ++i)
    if (!factors_through(f, summands[i], dims[i])) return false;
  return true;
}

}  // namespace

bool in_fac(const Module& x, const Module& u) {
  require_same_algebra(x, u);
  const auto basis = hom_basis(u, x);
  for (int v = 0; v < x.algebra()->vertex_count(); ++v) {
    if (x.dim(v) == 0) continue;
    Matrix image(x.dim(v), 0);
    for (const auto& f : basis) image = Matrix::hstack(image, f.components[v]);
    if (linalg::rank(x.field(), image) != static_cast<std::size_t>(x.dim(v))) return false;
  }
  return true;
}

Approximation minimal_left_approximation(const Module& x, const std::vector<Module>& summands) {
  std::vector<EndStructure> ends;
  for (const auto& u : summands) ends.push_back(end_structure(u));
  return minimal_left_approximation(x, summands, ends);
}

Approximation minimal_left_approximation(const Module& x, const std::vector<Module>& summands,
                                         const std::vector<EndStructure>& ends) {
  const std::size_t r = summands.size();
  const Field& field = x.field();
  std::vector<std::vector<ModuleMap>> homs(r);
  std::vector<std::size_t> hom_dims(r);
  for (std::size_t i = 0; i < r; ++i) {
    require_same_algebra(x, summands[i]);
    homs[i] = hom_basis(x, summands[i]);
    hom_dims[i] = homs[i].size();
  }

  Approximation result{zero_map(x, Module::zero(x.algebra())), {}, std::vector<int>(r, 0)};
  std::vector<ModuleMap> rows;
  std::vector<Module> parts;
  for (std::size_t i = 0; i < r; ++i) {
    if (homs[i].empty()) continue;
    const std::size_t size = hom_space_size(x, summands[i]);
    std::vector<ModuleMap> composites;
    for (std::size_t j = 0; j < r; ++j) {
      if (homs[j].empty()) continue;
      const auto between = j == i ? radical_maps(ends[i]) : hom_basis(summands[j], summands[i]);
      for (const auto& g : between)
        for (const auto& h : homs[j]) composites.push_back(compose(g, h));
    }
    Matrix radical = linalg::column_basis(field, span_columns(composites, size));
    for (const auto& h : homs[i]) {
      Matrix extended = Matrix::hstack(radical, span_columns({h}, size));
      if (linalg::rank(field, extended) > radical.cols()) {
        radical = std::move(extended);
        rows.push_back(h);
        parts.push_back(summands[i]);
        result.copies.push_back(i);
        ++result.multiplicities[i];
      }
    }
  }

  const Module target = sum_of(x, parts);
  result.map = stack(x, target, rows);
  if (!is_module_map(result.map) || !is_approximation(result.map, summands, hom_dims)) {
    throw Error(ErrorKind::ApproximationVerificationFailed, "assembled map is not a left approximation");
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::vector<ModuleMap> fewer_rows;
    std::vector<Module> fewer_parts;
    for (std::size_t l = 0; l < rows.size(); ++l) {
      if (l == k) continue;
      fewer_rows.push_back(rows[l]);
      fewer_parts.push_back(parts[l]);
    }
    const ModuleMap smaller = stack(x, sum_of(x, fewer_parts), fewer_rows);
    if (is_approximation(smaller, summands, hom_dims)) {
      throw Error(ErrorKind::ApproximationVerificationFailed, "approximation is not minimal");
    }
  }
  return result;
}

}  // namespace tautilt
