#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "tautilt/field.hpp"

namespace tautilt {

// Path convention used throughout: an arrow a : i -> j acts as a linear map
// M_i -> M_j. A path is written as the list of arrows in traversal order, so
// the path [a1, a2] traverses a1 first and equals the algebra product a2 * a1.

struct Arrow {
  std::string name;
  std::string from;
  std::string to;
};

struct RelationTerm {
  Scalar coefficient;
  std::vector<std::string> path;  // traversal order
};

/// One relation is a list of parallel terms summing to zero.
using Relation = std::vector<RelationTerm>;

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  int nilpotency_bound = 1;
};

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Coefficient vector over the algebra basis.
struct AlgebraElement {
  std::vector<Scalar> coefficients;

  bool is_zero() const;
  bool operator==(const AlgebraElement&) const = default;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional bound quiver algebra kQ/I with a standard-monomial
/// basis. Immutable once built.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  struct BasisPath {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;  // traversal order; empty for a vertex idempotent
  };

  struct IndexedRelation {
    std::vector<std::pair<Scalar, std::vector<int>>> terms;
    int source = 0;
    int target = 0;
  };

  const Field& field() const { return field_; }
  const QuiverPresentation& presentation() const { return presentation_; }

  int vertex_count() const { return static_cast<int>(presentation_.vertices.size()); }
  int arrow_count() const { return static_cast<int>(presentation_.arrows.size()); }
  const std::string& vertex_name(int v) const { return presentation_.vertices[v]; }
  const std::string& arrow_name(int a) const { return presentation_.arrows[a].name; }
  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;
  int arrow_source(int a) const { return arrow_source_[a]; }
  int arrow_target(int a) const { return arrow_target_[a]; }
  const std::vector<IndexedRelation>& relations() const { return relations_; }

  std::size_t dimension() const { return basis_.size(); }
  const BasisPath& basis(std::size_t b) const { return basis_[b]; }
  std::size_t idempotent(int vertex) const { return idempotent_[vertex]; }
  std::size_t arrow_basis_index(int arrow) const { return arrow_basis_[arrow]; }
  /// Basis indices spanning e_target Λ e_source, i.e. paths source -> target.
  const std::vector<std::size_t>& paths(int target, int source) const {
    return paths_[static_cast<std::size_t>(target) * vertex_count() + source];
  }
  /// Index of basis element b within paths(target(b), source(b)).
  std::size_t path_position(std::size_t b) const { return path_position_[b]; }
  /// Structure constants: basis(b) * basis(c).
  const SparseVector& product(std::size_t b, std::size_t c) const { return products_[b * basis_.size() + c]; }

  AlgebraElement zero() const;
  AlgebraElement basis_element(std::size_t b) const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement subtract(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement scale(const Scalar& s, const AlgebraElement& x) const;

  /// Function-order label such as "b*a" for the path [a, b], or "e1".
  std::string basis_label(std::size_t b) const;

  /// Opposite algebra. Basis index b of the result is the reversed path of
  /// basis index b here, so coefficient vectors carry over unchanged. The
  /// opposite of the opposite is this object while it is alive.
  AlgebraPtr opposite() const;

  /// Structural hash: equal fingerprints mean interchangeable algebras.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  friend AlgebraPtr build_algebra(const QuiverPresentation&, const Field&);

  Algebra() : field_(Field::rational()) {}
  void index_presentation();
  void finish();

  Field field_;
  QuiverPresentation presentation_;
  std::vector<int> arrow_source_;
  std::vector<int> arrow_target_;
  std::vector<IndexedRelation> relations_;
  std::vector<BasisPath> basis_;
  std::vector<std::size_t> idempotent_;
  std::vector<std::size_t> arrow_basis_;
  std::vector<std::vector<std::size_t>> paths_;
  std::vector<std::size_t> path_position_;
  std::vector<SparseVector> products_;
  std::uint64_t fingerprint_ = 0;

  mutable std::once_flag opposite_once_;
  mutable AlgebraPtr opposite_;
  mutable std::weak_ptr<const Algebra> opposite_of_;
};

/// Builds kQ/I. Throws NonAdmissible, EmptyQuiver or InvalidPresentation.
AlgebraPtr build_algebra(const QuiverPresentation& spec, const Field& field);

AlgebraPtr opposite_algebra(const AlgebraPtr& algebra);

/// Relations with every term path reversed, arrows reversed.
QuiverPresentation opposite_presentation(const QuiverPresentation& spec);

bool same_algebra(const Algebra& a, const Algebra& b);

}  // namespace tautilt
