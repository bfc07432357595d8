#pragma once

// The Loday construction X ⊗ A: one tensor factor of A per simplex of X,
// faces multiply the factors that land on the same simplex. The pointed
// variant puts a bimodule M on the basepoint simplex.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thhmay/algebra.hpp"
#include "thhmay/complex.hpp"
#include "thhmay/simplicial.hpp"

namespace thhmay {

// Factor indices, one per simplex of X at the given level (stored order).
// In the coefficients variant the basepoint entry indexes the module basis.
using TensorFactors = std::vector<std::uint16_t>;

struct LodayOptions {
  int max_internal = 0;
  // Quotient by the degenerate subcomplex (true) or the full Moore complex.
  bool normalized = true;
};

class LodayComplex {
 public:
  const BigradedComplex& complex() const noexcept { return complex_; }
  const Validity& validity() const noexcept { return validity_; }
  const std::vector<TensorFactors>& tensors(int h, int t) const;
  std::string label(int h, int t, std::size_t k) const;
  bool has_coefficients() const noexcept { return module_ != nullptr; }
  bool normalized() const noexcept { return normalized_; }
  int max_level() const noexcept { return validity_.max_level; }
  const FilteredAlgebra& algebra() const noexcept { return *algebra_; }
  const FilteredBimodule* module() const noexcept { return module_.get(); }
  const SimplicialFiniteSet& space() const noexcept { return *space_; }
  LodayOptions options() const noexcept { return {validity_.max_internal, normalized_}; }

 private:
  friend class LodayBuilder;
  LodayComplex(PrimeField field) : complex_(field) {}

  BigradedComplex complex_;
  Validity validity_;
  std::map<Bidegree, std::vector<TensorFactors>> tensors_;
  std::shared_ptr<const FilteredAlgebra> algebra_;
  std::shared_ptr<const FilteredBimodule> module_;
  std::shared_ptr<const SimplicialFiniteSet> space_;
  bool normalized_ = true;
};

LodayComplex build(const SimplicialFiniteSet& x, const FilteredAlgebra& a, LodayOptions options);
LodayComplex build_with_coefficients(const SimplicialFiniteSet& y, const FilteredAlgebra& a, const FilteredBimodule& m,
                                     LodayOptions options);

HomologyTable homology(const LodayComplex& c);

}  // namespace thhmay
