#pragma once

#include <vector>

#include "tautilt/tau_tilt.hpp"

namespace tautilt {

/// Two-term complex of projectives P(-1) --d--> P(0), with the copies on each
/// side sorted by vertex.
struct TwoTermComplex {
  ProjMap d;  // source: degree -1 copies, target: degree 0 copies

  const AlgebraPtr& algebra() const { return d.algebra; }
  const std::vector<int>& degree_minus1() const { return d.source; }
  const std::vector<int>& degree0() const { return d.target; }
  std::vector<int> multiplicities_minus1() const;
  std::vector<int> multiplicities0() const;
  bool is_zero() const { return d.source.empty() && d.target.empty(); }
};

TwoTermComplex make_complex(ProjMap d);
/// [0 -> Λ] and [Λ -> 0].
TwoTermComplex regular_complex(const AlgebraPtr& algebra);
TwoTermComplex shifted_regular_complex(const AlgebraPtr& algebra);
TwoTermComplex complex_sum(const std::vector<TwoTermComplex>& parts);

/// Inverse of an element of e_i Λ e_i with nonzero idempotent coefficient.
AlgebraElement local_inverse(const Algebra& algebra, const AlgebraElement& u, int vertex);

/// Removes contractible summands P(i) = P(i) by Gaussian elimination.
TwoTermComplex reduce_complex(const TwoTermComplex& c);
bool is_reduced(const TwoTermComplex& c);

/// A morphism of two-term complexes in homotopy-category terms. Shift 0 uses
/// components {degree -1, degree 0}; shift 1 a single map P(-1) -> Q(0);
/// shift -1 a single map P(0) -> Q(-1).
struct ChainMap {
  std::vector<ProjMap> components;
};

struct HomK {
  std::size_t dimension = 0;
  std::vector<ChainMap> basis;  // representatives of a basis of the quotient
};

HomK hom_k(const TwoTermComplex& p, const TwoTermComplex& q, int shift);

bool is_presilting(const TwoTermComplex& p);
bool is_silting(const TwoTermComplex& p);

TwoTermComplex pair_to_complex(const TauPair& pair);
TauPair complex_to_pair(const TwoTermComplex& p);

/// True iff Q ≤ P, i.e. Hom(P, Q[1]) = 0. Note the argument order: the first
/// argument is the one being compared from above.
bool silting_leq(const TwoTermComplex& p, const TwoTermComplex& q);

struct SiltingMutation {
  TwoTermComplex complex;
  Direction direction;
};

/// Mutation at a position of complex_to_pair(p) (module summands, then the
/// P(i)[1] summands), computed as a cone of a minimal approximation in the
/// homotopy category and checked against the pair route.
SiltingMutation silting_mutate(const TwoTermComplex& p, std::size_t position);

}  // namespace tautilt
