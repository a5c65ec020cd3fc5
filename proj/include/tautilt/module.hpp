#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/matrix.hpp"

namespace tautilt {

/// Finite-dimensional left module given as a quiver representation: a space
/// of dimension dims[v] per vertex and a dims[target] x dims[source] matrix
/// per arrow. Relations are checked on construction.
class Module {
 public:
  Module(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> maps);

  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int vertex) const { return dims_[vertex]; }
  int total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }
  const Matrix& arrow_map(int arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& arrow_maps() const { return maps_; }

  /// Matrix of a basis path of the algebra, M_source -> M_target.
  Matrix path_action(std::size_t basis_index) const;
  /// Matrix of an element of e_target Λ e_source acting M_source -> M_target.
  Matrix action(const AlgebraElement& x, int source, int target) const;

  /// The same representation viewed over an interchangeable algebra.
  Module retag(AlgebraPtr algebra) const;

  std::uint64_t hash() const;

 private:
  AlgebraPtr algebra_;
  std::vector<int> dims_;
  std::vector<Matrix> maps_;
};

/// Vertexwise linear maps intertwining the arrow actions.
struct ModuleMap {
  Module source;
  Module target;
  std::vector<Matrix> components;

  bool is_zero() const;
};

enum class StandardKind { Projective, Injective, Simple };

Module standard_module(const AlgebraPtr& algebra, StandardKind kind, int vertex);
Module standard_module(const AlgebraPtr& algebra, StandardKind kind, const std::string& vertex);

void require_same_algebra(const Module& a, const Module& b);

Module direct_sum(std::span<const Module> parts);
Module direct_sum(const Module& a, const Module& b);
/// Canonical injection of summand `index` into direct_sum(parts).
ModuleMap summand_injection(std::span<const Module> parts, std::size_t index);
ModuleMap summand_projection(std::span<const Module> parts, std::size_t index);

ModuleMap identity_map(const Module& m);
ModuleMap zero_map(const Module& source, const Module& target);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale_map(const Scalar& s, const ModuleMap& f);
bool is_module_map(const ModuleMap& f);

/// Concatenated row-major entries of the vertex components.
std::vector<Scalar> flatten(const ModuleMap& f);
ModuleMap unflatten(const Module& source, const Module& target, const std::vector<Scalar>& v);
std::size_t hom_space_size(const Module& source, const Module& target);

/// Basis of Hom(M, N) as the solution space of the intertwining equations.
std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);
std::size_t hom_dimension(const Module& m, const Module& n);

struct KernelCokernel {
  Module kernel;
  ModuleMap inclusion;
  Module image;
  Module cokernel;
  ModuleMap projection;
};

KernelCokernel map_kernel_cokernel(const ModuleMap& f);

/// Submodule spanned vertexwise by the given columns (which must be stable
/// under the arrows), with its inclusion.
ModuleMap submodule(const Module& m, const std::vector<Matrix>& bases);
/// Quotient M / U for U given vertexwise by column bases, with projection.
ModuleMap quotient(const Module& m, const std::vector<Matrix>& bases);

/// D = Hom_k(-, k): a module over the opposite algebra.
Module dualize(const Module& m);

/// Basis (columns, algebra coordinates) of ann(M) = ker(Λ -> End_k(M)).
Matrix annihilator(const Module& m);
bool is_faithful(const Module& m);
bool is_sincere(const Module& m);

/// Radical layers M/rad M, rad M/rad^2 M, ... as dimension vectors.
std::vector<std::vector<int>> radical_layers(const Module& m);
/// Composition-series style label, e.g. "1/2" for a uniserial module with
/// top 1 and socle 2; layers with several simples read "1 2/3".
std::string loewy_label(const Module& m);

}  // namespace tautilt
