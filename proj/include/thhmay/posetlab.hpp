#pragma once

// Finite pieces of the posets N^S (componentwise order) behind the May
// filtration, and the J -| K adjunction between E_n and D_{n;x}.

#include <optional>
#include <string>
#include <vector>

#include "thhmay/error.hpp"

namespace thhmay {

using NVector = std::vector<int>;

int l1_norm(const NVector& x);
bool leq(const NVector& a, const NVector& b);

class FinitePoset {
 public:
  FinitePoset() = default;
  explicit FinitePoset(std::vector<NVector> elements);

  const std::vector<NVector>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const NVector& x) const;
  // Reflexivity, antisymmetry and transitivity checked over all pairs/triples.
  bool is_partial_order() const;

 private:
  std::vector<NVector> elements_;  // lexicographic
};

// {x in {0..n}^S : |x| >= k}. Throws InvalidParams if k < n.
FinitePoset E_poset(int s_size, int n, int k);
// {y >= x : |y| >= n + |x|} with every coordinate capped at `cap`.
FinitePoset D_poset_truncated(int s_size, int n, const NVector& x, int cap);

struct AdjunctionResult {
  bool pass = true;
  std::optional<NVector> z;  // first counterexample
  std::optional<NVector> y;
  std::string detail;
};

// J(z) = x + z, K(y) = min(n, y - x) componentwise. Checks that J lands in
// D_{n;x}, K lands in E_n, and z <= K(y) iff J(z) <= y over all pairs.
AdjunctionResult check_adjunction(int s_size, int n, const NVector& x, int cap);

// (N^f x)(s) = sum over f(t) = s of x(t); checks the L1 norm is preserved.
// f maps T = {0..|x|-1} into {0..target_size-1}.
bool l1_functoriality(const std::vector<int>& f, int target_size, const NVector& x);

}  // namespace thhmay
