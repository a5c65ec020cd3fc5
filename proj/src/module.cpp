#include "tautilt/module.hpp"

#include <algorithm>
#include <numeric>

#include "tautilt/errors.hpp"

namespace tautilt {

namespace {

// X with to_basis * X = map * from_basis (columns of from_basis map into
// the span of to_basis).
Matrix induced(const Field& f, const Matrix& map, const Matrix& from_basis, const Matrix& to_basis) {
  const Matrix image = linalg::multiply(f, map, from_basis);
  if (to_basis.cols() == 0) {
    if (!image.is_zero()) throw Error(ErrorKind::InvalidModule, "subspace is not stable under an arrow");
    return Matrix(0, from_basis.cols());
  }
  auto x = linalg::solve(f, to_basis, image);
  if (!x) throw Error(ErrorKind::InvalidModule, "subspace is not stable under an arrow");
  return *x;
}

std::uint64_t mix(std::uint64_t h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  h ^= 0x1f;
  h *= 1099511628211ULL;
  return h;
}

}  // namespace

Module::Module(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  const Algebra& a = *algebra_;
  if (static_cast<int>(dims_.size()) != a.vertex_count()) {
    throw Error(ErrorKind::InvalidModule, "dimension vector has the wrong length");
  }
  for (int d : dims_) {
    if (d < 0) throw Error(ErrorKind::InvalidModule, "negative dimension");
  }
  if (static_cast<int>(maps_.size()) != a.arrow_count()) {
    throw Error(ErrorKind::InvalidModule, "expected one matrix per arrow");
  }
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    auto& m = maps_[ar];
    const auto rows = static_cast<std::size_t>(dims_[a.arrow_target(ar)]);
    const auto cols = static_cast<std::size_t>(dims_[a.arrow_source(ar)]);
    if (m.rows() != rows || m.cols() != cols) {
      if (m.rows() * m.cols() == 0 && rows * cols == 0) {
        m = Matrix(rows, cols);
      } else {
        throw Error(ErrorKind::InvalidModule, "matrix for arrow '" + a.arrow_name(ar) + "' has the wrong shape");
      }
    }
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = a.field().reduce(m(r, c));
  }
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    const auto& rel = a.relations()[r];
    Matrix sum(dims_[rel.target], dims_[rel.source]);
    for (const auto& [coeff, path] : rel.terms) {
      Matrix m = Matrix::identity(dims_[rel.source]);
      for (int ar : path) m = linalg::multiply(a.field(), maps_[ar], m);
      sum = linalg::add(a.field(), sum, linalg::scale(a.field(), coeff, m));
    }
    if (!sum.is_zero()) throw Error(ErrorKind::InvalidModule, "relation " + std::to_string(r) + " does not vanish");
  }
}

Module Module::zero(AlgebraPtr algebra) {
  std::vector<int> dims(algebra->vertex_count(), 0);
  std::vector<Matrix> maps(algebra->arrow_count());
  return Module(std::move(algebra), std::move(dims), std::move(maps));
}

int Module::total_dimension() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

Matrix Module::path_action(std::size_t basis_index) const {
  const auto& p = algebra_->basis(basis_index);
  Matrix m = Matrix::identity(dims_[p.source]);
  for (int ar : p.arrows) m = linalg::multiply(field(), maps_[ar], m);
  return m;
}

Matrix Module::action(const AlgebraElement& x, int source, int target) const {
  Matrix m(dims_[target], dims_[source]);
  for (std::size_t b : algebra_->paths(target, source)) {
    if (x.coefficients[b] == 0) continue;
    m = linalg::add(field(), m, linalg::scale(field(), x.coefficients[b], path_action(b)));
  }
  return m;
}

Module Module::retag(AlgebraPtr algebra) const {
  if (!same_algebra(*algebra, *algebra_)) throw Error(ErrorKind::AlgebraMismatch, "cannot retag onto a different algebra");
  return Module(std::move(algebra), dims_, maps_);
}

std::uint64_t Module::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int d : dims_) h = mix(h, std::to_string(d));
  for (const auto& m : maps_)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) h = mix(h, m(r, c).get_str());
  return h;
}

bool ModuleMap::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Matrix& m) { return m.is_zero(); });
}

Module standard_module(const AlgebraPtr& algebra, StandardKind kind, int vertex) {
  const Algebra& a = *algebra;
  if (vertex < 0 || vertex >= a.vertex_count()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  const int n = a.vertex_count();
  std::vector<int> dims(n, 0);
  std::vector<Matrix> maps(a.arrow_count());
  switch (kind) {
    case StandardKind::Simple: {
      dims[vertex] = 1;
      for (int ar = 0; ar < a.arrow_count(); ++ar) maps[ar] = Matrix(dims[a.arrow_target(ar)], dims[a.arrow_source(ar)]);
      break;
    }
    case StandardKind::Projective: {
      // Λe_i: basis at u is the paths i -> u; arrows act by left multiplication.
      for (int u = 0; u < n; ++u) dims[u] = static_cast<int>(a.paths(u, vertex).size());
      for (int ar = 0; ar < a.arrow_count(); ++ar) {
        const int s = a.arrow_source(ar);
        const int t = a.arrow_target(ar);
        Matrix m(dims[t], dims[s]);
        const auto& cols = a.paths(s, vertex);
        for (std::size_t c = 0; c < cols.size(); ++c) {
          for (const auto& [b, coeff] : a.product(a.arrow_basis_index(ar), cols[c])) m(a.path_position(b), c) = coeff;
        }
        maps[ar] = std::move(m);
      }
      break;
    }
    case StandardKind::Injective: {
      // D(e_iΛ): at t the dual of the paths t -> i; (a.f)(x) = f(x a).
      for (int t = 0; t < n; ++t) dims[t] = static_cast<int>(a.paths(vertex, t).size());
      for (int ar = 0; ar < a.arrow_count(); ++ar) {
        const int s = a.arrow_source(ar);
        const int t = a.arrow_target(ar);
        Matrix m(dims[t], dims[s]);
        const auto& rows = a.paths(vertex, t);
        for (std::size_t r = 0; r < rows.size(); ++r) {
          for (const auto& [b, coeff] : a.product(rows[r], a.arrow_basis_index(ar))) m(r, a.path_position(b)) = coeff;
        }
        maps[ar] = std::move(m);
      }
      break;
    }
  }
  return Module(algebra, std::move(dims), std::move(maps));
}

Module standard_module(const AlgebraPtr& algebra, StandardKind kind, const std::string& vertex) {
  return standard_module(algebra, kind, algebra->vertex_index(vertex));
}

void require_same_algebra(const Module& a, const Module& b) {
  if (!same_algebra(*a.algebra(), *b.algebra())) {
    throw Error(ErrorKind::AlgebraMismatch, "modules live over different algebras");
  }
}

Module direct_sum(std::span<const Module> parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of an empty list needs an algebra");
  const auto& alg = parts.front().algebra();
  const Algebra& a = *alg;
  std::vector<int> dims(a.vertex_count(), 0);
  for (const auto& p : parts) {
    require_same_algebra(parts.front(), p);
    for (int v = 0; v < a.vertex_count(); ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> maps;
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    Matrix m(dims[a.arrow_target(ar)], dims[a.arrow_source(ar)]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      m.set_block(r0, c0, p.arrow_map(ar));
      r0 += p.dim(a.arrow_target(ar));
      c0 += p.dim(a.arrow_source(ar));
    }
    maps.push_back(std::move(m));
  }
  return Module(alg, std::move(dims), std::move(maps));
}

Module direct_sum(const Module& a, const Module& b) {
  std::vector<Module> parts{a, b};
  return direct_sum(parts);
}

ModuleMap summand_injection(std::span<const Module> parts, std::size_t index) {
  Module sum = direct_sum(parts);
  const Module& part = parts[index];
  ModuleMap f{part, sum, {}};
  for (int v = 0; v < part.algebra()->vertex_count(); ++v) {
    std::size_t offset = 0;
    for (std::size_t k = 0; k < index; ++k) offset += parts[k].dim(v);
    Matrix m(sum.dim(v), part.dim(v));
    for (int i = 0; i < part.dim(v); ++i) m(offset + i, i) = 1;
    f.components.push_back(std::move(m));
  }
  return f;
}

ModuleMap summand_projection(std::span<const Module> parts, std::size_t index) {
  ModuleMap inj = summand_injection(parts, index);
  ModuleMap f{inj.target, inj.source, {}};
  for (const auto& m : inj.components) f.components.push_back(m.transpose());
  return f;
}

ModuleMap identity_map(const Module& m) {
  ModuleMap f{m, m, {}};
  for (int d : m.dims()) f.components.push_back(Matrix::identity(d));
  return f;
}

ModuleMap zero_map(const Module& source, const Module& target) {
  ModuleMap f{source, target, {}};
  for (int v = 0; v < source.algebra()->vertex_count(); ++v) f.components.emplace_back(target.dim(v), source.dim(v));
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    h.components.push_back(linalg::multiply(f.source.field(), g.components[v], f.components[v]));
  }
  return h;
}

ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h{f.source, f.target, {}};
  for (std::size_t v = 0; v < f.components.size(); ++v)
    h.components.push_back(linalg::add(f.source.field(), f.components[v], g.components[v]));
  return h;
}

ModuleMap scale_map(const Scalar& s, const ModuleMap& f) {
  ModuleMap h{f.source, f.target, {}};
  for (const auto& m : f.components) h.components.push_back(linalg::scale(f.source.field(), s, m));
  return h;
}

bool is_module_map(const ModuleMap& f) {
  const Algebra& a = *f.source.algebra();
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    const int s = a.arrow_source(ar);
    const int t = a.arrow_target(ar);
    const Matrix lhs = linalg::multiply(a.field(), f.components[t], f.source.arrow_map(ar));
    const Matrix rhs = linalg::multiply(a.field(), f.target.arrow_map(ar), f.components[s]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::size_t hom_space_size(const Module& source, const Module& target) {
  std::size_t n = 0;
  for (int v = 0; v < source.algebra()->vertex_count(); ++v) n += static_cast<std::size_t>(source.dim(v)) * target.dim(v);
  return n;
}

std::vector<Scalar> flatten(const ModuleMap& f) {
  std::vector<Scalar> v;
  for (const auto& m : f.components)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

ModuleMap unflatten(const Module& source, const Module& target, const std::vector<Scalar>& v) {
  ModuleMap f{source, target, {}};
  std::size_t k = 0;
  for (int vert = 0; vert < source.algebra()->vertex_count(); ++vert) {
    Matrix m(target.dim(vert), source.dim(vert));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = v[k++];
    f.components.push_back(std::move(m));
  }
  return f;
}

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n) {
  require_same_algebra(m, n);
  const Algebra& a = *m.algebra();
  const Field& field = a.field();
  const int nv = a.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(n.dim(v)) * m.dim(v);
  const std::size_t unknowns = offset[nv];
  if (unknowns == 0) return {};
  auto var = [&](int v, std::size_t r, std::size_t c) { return offset[v] + r * m.dim(v) + c; };

  std::size_t equations = 0;
  for (int ar = 0; ar < a.arrow_count(); ++ar)
    equations += static_cast<std::size_t>(n.dim(a.arrow_target(ar))) * m.dim(a.arrow_source(ar));
  Matrix system(equations, unknowns);
  std::size_t row = 0;
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    const int i = a.arrow_source(ar);
    const int j = a.arrow_target(ar);
    const Matrix& ma = m.arrow_map(ar);
    const Matrix& na = n.arrow_map(ar);
    // (phi_j M_a - N_a phi_i)(r, c) = 0
    for (int r = 0; r < n.dim(j); ++r) {
      for (int c = 0; c < m.dim(i); ++c, ++row) {
        for (int k = 0; k < m.dim(j); ++k) {
          if (ma(k, c) != 0) system(row, var(j, r, k)) = field.add(system(row, var(j, r, k)), ma(k, c));
        }
        for (int k = 0; k < n.dim(i); ++k) {
          if (na(r, k) != 0) system(row, var(i, k, c)) = field.sub(system(row, var(i, k, c)), na(r, k));
        }
      }
    }
  }
  const Matrix k = linalg::kernel(field, system);
  std::vector<ModuleMap> basis;
  for (std::size_t c = 0; c < k.cols(); ++c) basis.push_back(unflatten(m, n, k.column(c)));
  return basis;
}

std::size_t hom_dimension(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

ModuleMap submodule(const Module& m, const std::vector<Matrix>& bases) {
  const Algebra& a = *m.algebra();
  std::vector<int> dims;
  for (int v = 0; v < a.vertex_count(); ++v) dims.push_back(static_cast<int>(bases[v].cols()));
  std::vector<Matrix> maps;
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    const int s = a.arrow_source(ar);
    const int t = a.arrow_target(ar);
    maps.push_back(induced(a.field(), m.arrow_map(ar), bases[s], bases[t]));
  }
  Module sub(m.algebra(), std::move(dims), std::move(maps));
  ModuleMap inc{sub, m, {}};
  for (int v = 0; v < a.vertex_count(); ++v) {
    inc.components.push_back(bases[v].cols() == 0 ? Matrix(m.dim(v), 0) : bases[v]);
  }
  return inc;
}

ModuleMap quotient(const Module& m, const std::vector<Matrix>& bases) {
  const Algebra& a = *m.algebra();
  const Field& field = a.field();
  std::vector<Matrix> complements, projections;
  std::vector<int> dims;
  for (int v = 0; v < a.vertex_count(); ++v) {
    const auto n = static_cast<std::size_t>(m.dim(v));
    Matrix sub = bases[v].cols() == 0 ? Matrix(n, 0) : bases[v];
    Matrix comp = linalg::complement(field, sub, n);
    Matrix proj(comp.cols(), n);
    if (n > 0) {
      Matrix inv = linalg::inverse(field, Matrix::hstack(sub, comp));
      proj = inv.block(sub.cols(), 0, comp.cols(), n);
    }
    dims.push_back(static_cast<int>(comp.cols()));
    complements.push_back(std::move(comp));
    projections.push_back(std::move(proj));
  }
  std::vector<Matrix> maps;
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    const int s = a.arrow_source(ar);
    const int t = a.arrow_target(ar);
    maps.push_back(linalg::multiply(field, projections[t], linalg::multiply(field, m.arrow_map(ar), complements[s])));
  }
  Module q(m.algebra(), std::move(dims), std::move(maps));
  return ModuleMap{m, q, std::move(projections)};
}

KernelCokernel map_kernel_cokernel(const ModuleMap& f) {
  const Algebra& a = *f.source.algebra();
  const Field& field = a.field();
  std::vector<Matrix> kernels, images;
  for (int v = 0; v < a.vertex_count(); ++v) {
    const Matrix& c = f.components[v];
    kernels.push_back(c.cols() == 0 ? Matrix(0, 0) : linalg::kernel(field, c));
    if (c.cols() == 0) kernels.back() = Matrix(0, 0);
    images.push_back(c.rows() == 0 ? Matrix(0, 0) : linalg::column_basis(field, c));
  }
  ModuleMap inc = submodule(f.source, kernels);
  ModuleMap img = submodule(f.target, images);
  ModuleMap proj = quotient(f.target, images);
  return KernelCokernel{inc.source, inc, img.source, proj.target, proj};
}

Module dualize(const Module& m) {
  AlgebraPtr op = m.algebra()->opposite();
  std::vector<Matrix> maps;
  for (const auto& mat : m.arrow_maps()) maps.push_back(mat.transpose());
  return Module(op, m.dims(), std::move(maps));
}

Matrix annihilator(const Module& m) {
  const Algebra& a = *m.algebra();
  std::size_t rows = 0;
  // One block of End_k(M) per (target, source) pair of vertices.
  const int n = a.vertex_count();
  std::vector<std::size_t> block(static_cast<std::size_t>(n) * n);
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) {
      block[static_cast<std::size_t>(t) * n + s] = rows;
      rows += static_cast<std::size_t>(m.dim(t)) * m.dim(s);
    }
  Matrix act(rows, a.dimension());
  for (std::size_t b = 0; b < a.dimension(); ++b) {
    const auto& p = a.basis(b);
    const Matrix mb = m.path_action(b);
    std::size_t r0 = block[static_cast<std::size_t>(p.target) * n + p.source];
    for (std::size_t r = 0; r < mb.rows(); ++r)
      for (std::size_t c = 0; c < mb.cols(); ++c) act(r0 + r * mb.cols() + c, b) = mb(r, c);
  }
  return linalg::kernel(a.field(), act);
}

bool is_faithful(const Module& m) { return annihilator(m).cols() == 0; }

bool is_sincere(const Module& m) {
  return std::all_of(m.dims().begin(), m.dims().end(), [](int d) { return d > 0; });
}

std::vector<std::vector<int>> radical_layers(const Module& m) {
  const Algebra& a = *m.algebra();
  const Field& field = a.field();
  const int n = a.vertex_count();
  std::vector<Matrix> current;
  for (int v = 0; v < n; ++v) current.push_back(Matrix::identity(m.dim(v)));
  std::vector<std::vector<int>> layers;
  while (true) {
    bool empty = true;
    for (const auto& c : current) empty = empty && c.cols() == 0;
    if (empty) break;
    std::vector<Matrix> next;
    for (int v = 0; v < n; ++v) {
      Matrix span(m.dim(v), 0);
      for (int ar = 0; ar < a.arrow_count(); ++ar) {
        if (a.arrow_target(ar) != v) continue;
        const Matrix& src = current[a.arrow_source(ar)];
        if (src.cols() == 0) continue;
        span = Matrix::hstack(span, linalg::multiply(field, m.arrow_map(ar), src));
      }
      next.push_back(span.cols() == 0 ? Matrix(m.dim(v), 0) : linalg::column_basis(field, span));
    }
    std::vector<int> layer(n);
    for (int v = 0; v < n; ++v) layer[v] = static_cast<int>(current[v].cols() - next[v].cols());
    layers.push_back(std::move(layer));
    current = std::move(next);
  }
  return layers;
}

std::string loewy_label(const Module& m) {
  const auto layers = radical_layers(m);
  if (layers.empty()) return "0";
  std::string label;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    if (k > 0) label += "/";
    std::string layer;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
      for (int c = 0; c < layers[k][v]; ++c) {
        if (!layer.empty()) layer += " ";
        layer += m.algebra()->vertex_name(v);
      }
    }
    label += layer;
  }
  return label;
}

}  // namespace tautilt
