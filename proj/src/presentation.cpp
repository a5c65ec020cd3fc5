#include "tautilt/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "tautilt/errors.hpp"

namespace tautilt {

StandardSum standard_sum(const AlgebraPtr& algebra, StandardKind kind, const std::vector<int>& copies) {
  const int n = algebra->vertex_count();
  std::vector<std::vector<std::size_t>> offsets(n, std::vector<std::size_t>(copies.size(), 0));
  if (copies.empty()) return StandardSum{copies, Module::zero(algebra), offsets};
  std::vector<Module> parts;
  for (int v : copies) parts.push_back(standard_module(algebra, kind, v));
  for (int u = 0; u < n; ++u) {
    std::size_t off = 0;
    for (std::size_t c = 0; c < copies.size(); ++c) {
      offsets[u][c] = off;
      off += static_cast<std::size_t>(parts[c].dim(u));
    }
  }
  return StandardSum{copies, direct_sum(parts), std::move(offsets)};
}

ProjMap zero_proj_map(const AlgebraPtr& algebra, std::vector<int> source, std::vector<int> target) {
  ProjMap f{algebra, std::move(source), std::move(target), {}};
  f.entries.assign(f.source.size() * f.target.size(), algebra->zero());
  return f;
}

ProjMap identity_proj_map(const AlgebraPtr& algebra, const std::vector<int>& copies) {
  ProjMap f = zero_proj_map(algebra, copies, copies);
  for (std::size_t c = 0; c < copies.size(); ++c) f.at(c, c) = algebra->basis_element(algebra->idempotent(copies[c]));
  return f;
}

ProjMap compose(const ProjMap& g, const ProjMap& f) {
  if (f.target != g.source) throw std::invalid_argument("compose: projective sums do not match");
  const Algebra& a = *f.algebra;
  ProjMap h = zero_proj_map(f.algebra, f.source, g.target);
  for (std::size_t r = 0; r < g.target.size(); ++r) {
    for (std::size_t c = 0; c < f.source.size(); ++c) {
      AlgebraElement sum = a.zero();
      for (std::size_t k = 0; k < f.target.size(); ++k) {
        if (f.at(k, c).is_zero() || g.at(r, k).is_zero()) continue;
        sum = a.add(sum, a.multiply(f.at(k, c), g.at(r, k)));
      }
      h.at(r, c) = std::move(sum);
    }
  }
  return h;
}

ProjMap add(const ProjMap& f, const ProjMap& g) {
  ProjMap h = f;
  for (std::size_t i = 0; i < h.entries.size(); ++i) h.entries[i] = f.algebra->add(f.entries[i], g.entries[i]);
  return h;
}

ProjMap block_diagonal(std::span<const ProjMap> blocks) {
  if (blocks.empty()) throw std::invalid_argument("block_diagonal: no blocks");
  std::vector<int> source, target;
  for (const auto& b : blocks) {
    source.insert(source.end(), b.source.begin(), b.source.end());
    target.insert(target.end(), b.target.begin(), b.target.end());
  }
  ProjMap f = zero_proj_map(blocks.front().algebra, source, target);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.target.size(); ++r)
      for (std::size_t c = 0; c < b.source.size(); ++c) f.at(r0 + r, c0 + c) = b.at(r, c);
    r0 += b.target.size();
    c0 += b.source.size();
  }
  return f;
}

ProjMap sort_copies(const ProjMap& f) {
  auto order = [](const std::vector<int>& copies) {
    std::vector<std::size_t> idx(copies.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return copies[x] < copies[y]; });
    return idx;
  };
  const auto rows = order(f.target);
  const auto cols = order(f.source);
  std::vector<int> source, target;
  for (auto c : cols) source.push_back(f.source[c]);
  for (auto r : rows) target.push_back(f.target[r]);
  ProjMap g = zero_proj_map(f.algebra, source, target);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) g.at(r, c) = f.at(rows[r], cols[c]);
  return g;
}

ProjMap dual_proj_map(const ProjMap& f) {
  ProjMap g = zero_proj_map(f.algebra->opposite(), f.target, f.source);
  for (std::size_t r = 0; r < f.target.size(); ++r)
    for (std::size_t c = 0; c < f.source.size(); ++c) g.at(c, r) = f.at(r, c);
  return g;
}

std::size_t proj_hom_size(const Algebra& algebra, const std::vector<int>& source, const std::vector<int>& target) {
  std::size_t n = 0;
  for (int t : target)
    for (int s : source) n += algebra.paths(s, t).size();
  return n;
}

std::vector<Scalar> proj_coordinates(const ProjMap& f) {
  const Algebra& a = *f.algebra;
  std::vector<Scalar> v;
  for (std::size_t r = 0; r < f.target.size(); ++r)
    for (std::size_t c = 0; c < f.source.size(); ++c)
      for (std::size_t b : a.paths(f.source[c], f.target[r])) v.push_back(f.at(r, c).coefficients[b]);
  return v;
}

ProjMap proj_from_coordinates(const AlgebraPtr& algebra, const std::vector<int>& source,
                              const std::vector<int>& target, const std::vector<Scalar>& coords) {
  ProjMap f = zero_proj_map(algebra, source, target);
  std::size_t k = 0;
  for (std::size_t r = 0; r < target.size(); ++r)
    for (std::size_t c = 0; c < source.size(); ++c)
      for (std::size_t b : algebra->paths(source[c], target[r])) f.at(r, c).coefficients[b] = coords[k++];
  return f;
}

ModuleMap realize(const ProjMap& f) {
  const Algebra& a = *f.algebra;
  const auto src = standard_sum(f.algebra, StandardKind::Projective, f.source);
  const auto tgt = standard_sum(f.algebra, StandardKind::Projective, f.target);
  ModuleMap m = zero_map(src.module, tgt.module);
  for (int u = 0; u < a.vertex_count(); ++u) {
    Matrix& mat = m.components[u];
    for (std::size_t c = 0; c < f.source.size(); ++c) {
      const auto& xs = a.paths(u, f.source[c]);
      for (std::size_t r = 0; r < f.target.size(); ++r) {
        const AlgebraElement& e = f.at(r, c);
        for (std::size_t xi = 0; xi < xs.size(); ++xi) {
          for (std::size_t b = 0; b < a.dimension(); ++b) {
            if (e.coefficients[b] == 0) continue;
            for (const auto& [p, coeff] : a.product(xs[xi], b)) {
              auto& slot = mat(tgt.offsets[u][r] + a.path_position(p), src.offsets[u][c] + xi);
              slot = a.field().add(slot, e.coefficients[b] * coeff);
            }
          }
        }
      }
    }
  }
  return m;
}

ProjMap extract_proj_map(const ModuleMap& f, const std::vector<int>& source, const std::vector<int>& target) {
  const AlgebraPtr& alg = f.source.algebra();
  const Algebra& a = *alg;
  const auto src = standard_sum(alg, StandardKind::Projective, source);
  const auto tgt = standard_sum(alg, StandardKind::Projective, target);
  ProjMap p = zero_proj_map(alg, source, target);
  for (std::size_t c = 0; c < source.size(); ++c) {
    const int i = source[c];
    const std::size_t gen = src.offsets[i][c] + a.path_position(a.idempotent(i));
    for (std::size_t r = 0; r < target.size(); ++r) {
      for (std::size_t b : a.paths(i, target[r])) {
        p.at(r, c).coefficients[b] = f.components[i](tgt.offsets[i][r] + a.path_position(b), gen);
      }
    }
  }
  return p;
}

std::vector<int> top_dims(const Module& m) {
  const Algebra& a = *m.algebra();
  std::vector<int> tops;
  for (int v = 0; v < a.vertex_count(); ++v) {
    Matrix rad(m.dim(v), 0);
    for (int ar = 0; ar < a.arrow_count(); ++ar) {
      if (a.arrow_target(ar) == v) rad = Matrix::hstack(rad, m.arrow_map(ar));
    }
    tops.push_back(m.dim(v) - static_cast<int>(linalg::rank(a.field(), rad)));
  }
  return tops;
}

ProjectiveCover projective_cover(const Module& m) {
  const AlgebraPtr& alg = m.algebra();
  const Algebra& a = *alg;
  std::vector<int> copies;
  std::vector<std::vector<Scalar>> generators;
  for (int v = 0; v < a.vertex_count(); ++v) {
    Matrix rad(m.dim(v), 0);
    for (int ar = 0; ar < a.arrow_count(); ++ar) {
      if (a.arrow_target(ar) == v) rad = Matrix::hstack(rad, m.arrow_map(ar));
    }
    const Matrix top = linalg::complement(a.field(), linalg::column_basis(a.field(), rad), m.dim(v));
    for (std::size_t c = 0; c < top.cols(); ++c) {
      copies.push_back(v);
      generators.push_back(top.column(c));
    }
  }
  const auto sum = standard_sum(alg, StandardKind::Projective, copies);
  ModuleMap cover = zero_map(sum.module, m);
  for (int u = 0; u < a.vertex_count(); ++u) {
    for (std::size_t c = 0; c < copies.size(); ++c) {
      const auto& xs = a.paths(u, copies[c]);
      for (std::size_t xi = 0; xi < xs.size(); ++xi) {
        const auto image = linalg::apply(a.field(), m.path_action(xs[xi]), generators[c]);
        for (std::size_t r = 0; r < image.size(); ++r) cover.components[u](r, sum.offsets[u][c] + xi) = image[r];
      }
    }
  }
  return ProjectiveCover{std::move(copies), std::move(cover)};
}

bool is_projective(const Module& m) {
  const auto tops = top_dims(m);
  int covered = 0;
  for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
    if (tops[v] == 0) continue;
    covered += tops[v] * standard_module(m.algebra(), StandardKind::Projective, v).total_dimension();
  }
  return covered == m.total_dimension();
}

std::vector<int> ProjectivePresentation::m1() const {
  std::vector<int> m(differential.algebra->vertex_count(), 0);
  for (int v : p1()) ++m[v];
  return m;
}

std::vector<int> ProjectivePresentation::m0() const {
  std::vector<int> m(differential.algebra->vertex_count(), 0);
  for (int v : p0()) ++m[v];
  return m;
}

ProjectivePresentation minimal_presentation(const Module& m) {
  ProjectiveCover top = projective_cover(m);
  KernelCokernel kc = map_kernel_cokernel(top.map);
  ProjectiveCover next = projective_cover(kc.kernel);
  ModuleMap d = compose(kc.inclusion, next.map);
  return ProjectivePresentation{extract_proj_map(d, next.copies, top.copies), std::move(top.map)};
}

ModuleMap nakayama(const ProjMap& f) {
  const Algebra& a = *f.algebra;
  const auto src = standard_sum(f.algebra, StandardKind::Injective, f.source);
  const auto tgt = standard_sum(f.algebra, StandardKind::Injective, f.target);
  ModuleMap m = zero_map(src.module, tgt.module);
  // g(y) = f(m y) for y in e_jΛe_t: entry (y, x) is the coefficient of x in m*y.
  for (int t = 0; t < a.vertex_count(); ++t) {
    Matrix& mat = m.components[t];
    for (std::size_t r = 0; r < f.target.size(); ++r) {
      const auto& ys = a.paths(f.target[r], t);
      for (std::size_t c = 0; c < f.source.size(); ++c) {
        const AlgebraElement& e = f.at(r, c);
        for (std::size_t yi = 0; yi < ys.size(); ++yi) {
          for (std::size_t b = 0; b < a.dimension(); ++b) {
            if (e.coefficients[b] == 0) continue;
            for (const auto& [x, coeff] : a.product(b, ys[yi])) {
              auto& slot = mat(tgt.offsets[t][r] + yi, src.offsets[t][c] + a.path_position(x));
              slot = a.field().add(slot, e.coefficients[b] * coeff);
            }
          }
        }
      }
    }
  }
  return m;
}

Module tau(const ProjectivePresentation& presentation) {
  if (presentation.p1().empty()) return Module::zero(presentation.differential.algebra);
  return map_kernel_cokernel(nakayama(presentation.differential)).kernel;
}

Module tau(const Module& m) { return tau(minimal_presentation(m)); }

Module transpose(const ProjectivePresentation& presentation) {
  const ProjMap dual = dual_proj_map(presentation.differential);
  if (dual.target.empty()) return Module::zero(dual.algebra);
  return map_kernel_cokernel(realize(dual)).cokernel;
}

Module transpose(const Module& m) { return transpose(minimal_presentation(m)); }

}  // namespace tautilt
