#pragma once

#include <span>
#include <vector>

#include "tautilt/module.hpp"

namespace tautilt {

/// A direct sum of standard modules P(i) (or I(i)), one vertex per copy,
/// realized as a module together with the block offsets of each copy.
struct StandardSum {
  std::vector<int> copies;
  Module module;
  /// offsets[v][c]: first row of copy c inside module.dim(v).
  std::vector<std::vector<std::size_t>> offsets;
};

StandardSum standard_sum(const AlgebraPtr& algebra, StandardKind kind, const std::vector<int>& copies);

/// Morphism between sums of indecomposable projectives as a block matrix of
/// algebra elements. Entry (r, c) lies in e_{source[c]} Λ e_{target[r]} and
/// sends the generator of source copy c to entry(r, c) in target copy r, so
/// a general element x of the copy maps to x * entry(r, c).
struct ProjMap {
  AlgebraPtr algebra;
  std::vector<int> source;
  std::vector<int> target;
  std::vector<AlgebraElement> entries;  // row-major, target.size() x source.size()

  AlgebraElement& at(std::size_t r, std::size_t c) { return entries[r * source.size() + c]; }
  const AlgebraElement& at(std::size_t r, std::size_t c) const { return entries[r * source.size() + c]; }
};

ProjMap zero_proj_map(const AlgebraPtr& algebra, std::vector<int> source, std::vector<int> target);
ProjMap identity_proj_map(const AlgebraPtr& algebra, const std::vector<int>& copies);
/// g after f.
ProjMap compose(const ProjMap& g, const ProjMap& f);
ProjMap add(const ProjMap& f, const ProjMap& g);
ProjMap block_diagonal(std::span<const ProjMap> blocks);
/// Reorders copies on both sides so that each side is sorted by vertex.
ProjMap sort_copies(const ProjMap& f);
/// Same entries read in the opposite algebra, source and target swapped:
/// Hom_Λ(-, Λ) applied to a map of projectives.
ProjMap dual_proj_map(const ProjMap& f);

/// Coordinates over the union of the path bases of all entries.
std::size_t proj_hom_size(const Algebra& algebra, const std::vector<int>& source, const std::vector<int>& target);
std::vector<Scalar> proj_coordinates(const ProjMap& f);
ProjMap proj_from_coordinates(const AlgebraPtr& algebra, const std::vector<int>& source,
                              const std::vector<int>& target, const std::vector<Scalar>& coords);

ModuleMap realize(const ProjMap& f);
/// Reads the block matrix off a module map between realized projective sums.
ProjMap extract_proj_map(const ModuleMap& f, const std::vector<int>& source, const std::vector<int>& target);

struct ProjectiveCover {
  std::vector<int> copies;
  ModuleMap map;  // standard_sum(projective, copies).module -> M
};

/// Top dimensions t_i = dim (M / rad M) at each vertex.
std::vector<int> top_dims(const Module& m);
ProjectiveCover projective_cover(const Module& m);
bool is_projective(const Module& m);

/// P1 --d--> P0 --> M --> 0 with P0 -> M and P1 -> ker a projective covers.
struct ProjectivePresentation {
  ProjMap differential;  // source = P1 copies, target = P0 copies
  ModuleMap cover;       // P0 -> M

  const std::vector<int>& p1() const { return differential.source; }
  const std::vector<int>& p0() const { return differential.target; }
  std::vector<int> m1() const;
  std::vector<int> m0() const;
};

ProjectivePresentation minimal_presentation(const Module& m);

/// ν(f): ⊕ I(source) -> ⊕ I(target), using Hom(P(i), P(j)) = e_iΛe_j = Hom(I(i), I(j)).
ModuleMap nakayama(const ProjMap& f);

/// Auslander-Reiten translate τM = ker(νP1 -> νP0).
Module tau(const Module& m);
Module tau(const ProjectivePresentation& presentation);
/// Tr M = coker(P0* -> P1*), a module over the opposite algebra.
Module transpose(const Module& m);
Module transpose(const ProjectivePresentation& presentation);

}  // namespace tautilt
