#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tautilt/decompose.hpp"
#include "tautilt/presentation.hpp"

namespace tautilt {

using GVector = std::vector<int>;
using CVector = std::vector<int>;
/// Sorted g-vectors of the module summands together with -e_i per support vertex.
using PairKey = std::vector<std::vector<int>>;

GVector g_vector(const Module& m);
GVector g_vector(const ProjectivePresentation& p);
CVector c_vector(const Module& m);
int dot(const std::vector<int>& a, const std::vector<int>& b);

/// Hom(N, τM) = 0, decided on the minimal presentation of M without computing τM.
bool tau_hom_vanishes(const Module& n, const Module& m);
bool tau_hom_vanishes(const Module& n, const ProjectivePresentation& m);

struct PairSummand {
  Module module;
  ProjectivePresentation presentation;
  GVector g;
  std::shared_ptr<const EndStructure> end;
};

enum class PairKind { TauRigid, AlmostComplete, SupportTauTilting };
const char* to_string(PairKind kind);

/// Basic τ-rigid pair (M, P): indecomposable, pairwise non-isomorphic module
/// summands sorted by g-vector, and the support vertices of P in ascending
/// order. Positions index the module summands first, then the support vertices.
class TauPair {
 public:
  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<PairSummand>& summands() const { return summands_; }
  const std::vector<int>& support() const { return support_; }
  PairKind kind() const { return kind_; }
  bool is_support_tau_tilting() const { return kind_ == PairKind::SupportTauTilting; }

  std::size_t size() const { return summands_.size() + support_.size(); }
  bool is_module_position(std::size_t k) const { return k < summands_.size(); }
  int support_vertex(std::size_t k) const { return support_[k - summands_.size()]; }
  /// g-vector of the summand at a position; -e_i for a support vertex i.
  std::vector<int> position_vector(std::size_t k) const;
  /// Position whose vector equals v, if any.
  std::optional<std::size_t> position_of(const std::vector<int>& v) const;

  const PairKey& key() const { return key_; }
  /// ⊕ of the module summands (zero module when there are none).
  Module module() const;
  std::vector<Module> modules() const;

  /// Trusted construction from indecomposable summands; verifies the pair
  /// conditions (support, basicness via g-vectors, τ-rigidity).
  static TauPair from_indecomposables(const AlgebraPtr& algebra, std::vector<Module> summands, std::vector<int> support);
  /// (Λ, 0) and (0, Λ).
  static TauPair regular(const AlgebraPtr& algebra);
  static TauPair zero(const AlgebraPtr& algebra);

 private:
  TauPair() = default;
  AlgebraPtr algebra_;
  std::vector<PairSummand> summands_;
  std::vector<int> support_;
  PairKind kind_ = PairKind::TauRigid;
  PairKey key_;
};

std::string key_string(const PairKey& key);
PairKey parse_key(const std::string& text);

/// Decomposes the modules, then checks the pair conditions.
TauPair check_pair(const std::vector<Module>& modules, const std::vector<int>& support);

struct PairFlags {
  bool tau_rigid = false;
  bool support_tau_tilting = false;
  bool tau_tilting = false;
  bool tilting = false;
  bool sincere = false;
  bool faithful = false;
};

PairFlags classify_pair(const TauPair& pair);

/// A module together with a set of vertices standing for a projective.
struct ModulePair {
  Module module;
  std::vector<int> projective;
};

ModulePair as_module_pair(const TauPair& pair);

struct EInvariant {
  long long prime_ab = 0;  // E'(A, B)
  long long prime_ba = 0;  // E'(B, A)
  long long total = 0;
};

/// E'(M, N) = <X, τY> + <P, Y> for M = (X, P), N = (Y, Q).
long long e_prime(const ModulePair& m, const ModulePair& n);
EInvariant e_invariant(const ModulePair& a, const ModulePair& b);

/// (M, P)† = (Tr M_np ⊕ P*, M_pr*) over the opposite algebra.
TauPair dagger(const TauPair& pair);

/// A ≤ B: Hom(A_M, τB_M) = 0 and supp(B) ⊆ supp(A), as support-vertex sets.
bool leq(const TauPair& a, const TauPair& b);

enum class Direction { Left, Right };
const char* to_string(Direction d);

/// Left iff the position is a module summand outside Fac of the other summands.
Direction mutation_direction(const TauPair& pair, std::size_t position);

struct Mutation {
  TauPair pair;
  Direction direction;
  std::size_t exchanged;  // position of the new summand in `pair`
};

/// Mutation at a position, with the exchange postconditions asserted.
Mutation mutate(const TauPair& pair, std::size_t position);

struct Limits {
  std::size_t max_vertices = 100000;
  std::size_t max_depth = 10000;
};

struct GraphArrow {
  PairKey from;
  PairKey to;
  std::size_t position;

  auto operator<=>(const GraphArrow&) const = default;
};

struct ExchangeGraph {
  AlgebraPtr algebra;
  std::map<PairKey, TauPair> vertices;
  std::vector<GraphArrow> arrows;
  bool complete = false;
};

ExchangeGraph enumerate(const AlgebraPtr& algebra, Limits limits = {});

struct HasseReport {
  std::size_t vertices = 0;
  std::size_t covers = 0;
  PairKey source;
  PairKey sink;
};

HasseReport verify_hasse(const ExchangeGraph& graph);

TauPair bongartz_completion(const Module& u, Limits limits = {});

struct Companion {
  Module torsion_free;  // τM ⊕ νP
  Module injective;     // νM_pr
};

Companion torsionfree_companion(const TauPair& pair);

/// Receives notable events such as a decomposable exchange cokernel.
void set_event_log(std::function<void(const std::string&)> sink);
void log_event(const std::string& message);

}  // namespace tautilt
