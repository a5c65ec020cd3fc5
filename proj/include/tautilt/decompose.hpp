#pragma once

#include <vector>

#include "tautilt/module.hpp"

namespace tautilt {

/// End(M) with a basis, its Jacobson radical, and coordinates in the basis.
struct EndStructure {
  std::vector<ModuleMap> basis;
  /// Columns are coordinate vectors (over `basis`) spanning rad End(M).
  Matrix radical;
  bool local = false;

  std::size_t dimension() const { return basis.size(); }
  std::size_t top_dimension() const { return basis.size() - radical.cols(); }
  std::vector<Scalar> coordinates(const ModuleMap& f) const;
  bool in_radical(const ModuleMap& f) const;

  linalg::Coordinates coords;
};

/// Radical as the kernel of the trace form (x, y) -> tr(L_{xy}). Requires
/// characteristic 0 or characteristic > dim End(M).
EndStructure end_structure(const Module& m);

struct Summand {
  Module module;
  int multiplicity = 1;
};

struct Decomposition {
  std::vector<Summand> summands;

  /// Number of pairwise non-isomorphic indecomposable summands.
  std::size_t distinct() const { return summands.size(); }
  std::size_t total() const;
};

Decomposition decompose(const Module& m);

/// For indecomposable a and b, with end_a = end_structure(a).
bool isomorphic_indecomposables(const Module& a, const EndStructure& end_a, const Module& b);
bool is_isomorphic(const Module& a, const Module& b);

}  // namespace tautilt
