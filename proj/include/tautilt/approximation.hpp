#pragma once

#include <vector>

#include "tautilt/decompose.hpp"

namespace tautilt {

/// True iff X is a quotient of a finite direct sum of copies of U.
bool in_fac(const Module& x, const Module& u);

struct Approximation {
  ModuleMap map;                     // X -> ⊕ U_{copies[k]}
  std::vector<std::size_t> copies;  // summand index of each copy, grouped
  std::vector<int> multiplicities;   // per summand
};

/// Minimal left add(U)-approximation of X, where U = ⊕ summands with the
/// summands indecomposable and pairwise non-isomorphic.
Approximation minimal_left_approximation(const Module& x, const std::vector<Module>& summands);

/// Same, reusing precomputed endomorphism structures of the summands.
Approximation minimal_left_approximation(const Module& x, const std::vector<Module>& summands,
                                         const std::vector<EndStructure>& ends);

}  // namespace tautilt
