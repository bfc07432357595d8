#pragma once

// Finite graded-commutative F_p-algebras given by structure constants, their
// decreasing multiplicative filtrations (one weight per basis element), and
// symmetric bimodules over them.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thhmay/exactlin.hpp"

namespace thhmay {

struct BasisElement {
  std::string name;
  int degree = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

// products[i][j] = e_i * e_j expanded in the basis.
using ProductTable = std::vector<std::vector<SparseVector>>;

class GradedAlgebra {
 public:
  // Validates degree additivity, unitality, associativity and graded
  // commutativity exhaustively; throws Error on the first violation.
  // Products landing above `truncation` (if set) must already be zero.
  GradedAlgebra(PrimeField field, std::vector<BasisElement> basis, std::size_t unit, ProductTable products,
                std::optional<int> truncation = std::nullopt);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  const std::string& name(std::size_t i) const { return basis_[i].name; }
  int degree(std::size_t i) const { return basis_[i].degree; }
  std::size_t unit() const noexcept { return unit_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i][j]; }
  const ProductTable& products() const noexcept { return products_; }
  // Internal degrees above this value are not faithful (truncated model).
  std::optional<int> truncation() const noexcept { return truncation_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  // Smallest degree among non-unit basis elements (nullopt for the ground field).
  std::optional<int> augmentation_connectivity() const;

  friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

 private:
  PrimeField field_;
  std::vector<BasisElement> basis_;
  std::size_t unit_;
  ProductTable products_;
  std::optional<int> truncation_;
};

class FilteredAlgebra {
 public:
  // Checks weight(unit) == 0 and multiplicativity of the weights.
  FilteredAlgebra(GradedAlgebra algebra, std::vector<int> weights);

  const GradedAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }
  std::size_t size() const noexcept { return algebra_.size(); }
  const PrimeField& field() const noexcept { return algebra_.field(); }

  friend bool operator==(const FilteredAlgebra&, const FilteredAlgebra&) = default;

 private:
  GradedAlgebra algebra_;
  std::vector<int> weights_;
};

// action[i][j] = e_i . m_j for algebra element e_i and module element m_j.
using ActionTable = std::vector<std::vector<SparseVector>>;

// A symmetric bimodule: the right action is the left action twisted by the
// Koszul sign, m . a = (-1)^{|m||a|} a . m.
class FilteredBimodule {
 public:
  FilteredBimodule(FilteredAlgebra base, std::vector<BasisElement> basis, std::vector<int> weights, ActionTable action);

  const FilteredAlgebra& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  const std::string& name(std::size_t j) const { return basis_[j].name; }
  int degree(std::size_t j) const { return basis_[j].degree; }
  int weight(std::size_t j) const { return weights_[j]; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  const SparseVector& left_action(std::size_t a, std::size_t m) const { return action_[a][m]; }
  SparseVector right_action(std::size_t m, std::size_t a) const;
  const ActionTable& actions() const noexcept { return action_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const FilteredBimodule&, const FilteredBimodule&) = default;

 private:
  FilteredAlgebra base_;
  std::vector<BasisElement> basis_;
  std::vector<int> weights_;
  ActionTable action_;
};

FilteredAlgebra trivial_filtration(GradedAlgebra a);
FilteredAlgebra whitehead_filtration(const GradedAlgebra& a);
FilteredAlgebra associated_graded(const FilteredAlgebra& fa);
FilteredBimodule associated_graded_bimodule(const FilteredBimodule& m);

GradedAlgebra ground_field(std::uint32_t p);
GradedAlgebra exterior_algebra(std::uint32_t p, int deg_x);
GradedAlgebra truncated_polynomial(std::uint32_t p, int deg_x, int n);
GradedAlgebra polynomial_truncated_model(std::uint32_t p, int deg_x, int max_internal);
GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);
// A ⋉ M with M·M = 0. The bimodule's base algebra must be `a`.
GradedAlgebra square_zero_extension(const GradedAlgebra& a, const FilteredBimodule& m);

// A as a bimodule over itself, degrees raised by `shift` and weights by
// `weight_shift`.
FilteredBimodule regular_bimodule(const FilteredAlgebra& a, int shift = 0, int weight_shift = 0);
// Sub- and quotient bimodules spanned by a subset of basis elements. The
// subset must be closed under the action.
FilteredBimodule submodule(const FilteredBimodule& m, std::span<const std::size_t> indices);
FilteredBimodule quotient_module(const FilteredBimodule& m, std::span<const std::size_t> indices);

}  // namespace thhmay
