#pragma once

// The fixed example corpus and the randomized invariant suite shared by the
// command line `selftest`, the property tests and the acceptance runner.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "thhmay/algebra.hpp"
#include "thhmay/loday.hpp"
#include "thhmay/simplicial.hpp"

namespace thhmay {

// E(x), |x| = 3, p = 3, weight = degree.
FilteredAlgebra corpus_exterior3();
// F_3[x]/x^4, |x| = 2, weight = degree.
FilteredAlgebra corpus_x4_whitehead();
// F_3[x]/x^4, |x| = 2, weights (0, 1, 3, 4): gr is F_3[x]/x^2 ⊗ F_3[y]/y^2.
FilteredAlgebra corpus_x4_weights();

// A = E(x) (|x| = 3, p = 3, weight = degree) with M0 = A, M1 = (x) and
// the quotient M0/M1 = F_3.
struct CoefficientsExample {
  FilteredAlgebra algebra;
  FilteredBimodule m0;
  FilteredBimodule m1;
  FilteredBimodule quotient;
  std::vector<std::size_t> m1_in_m0;        // basis of M1 inside M0
  std::vector<std::size_t> quotient_in_m0;  // lifts of the quotient basis
};
CoefficientsExample corpus_coefficients();

struct NamedAlgebra {
  std::string name;
  FilteredAlgebra algebra;
};
std::vector<NamedAlgebra> corpus_algebras();

// Tensor products of truncated polynomial algebras k[g]/g^e with random
// degrees and superadditive weights; total basis at most `max_basis`.
struct RandomAlgebra {
  FilteredAlgebra algebra;
  std::string description;
};
RandomAlgebra random_monomial_algebra(std::mt19937_64& rng, std::uint32_t p, std::size_t max_basis = 6);

struct RandomSpace {
  SimplicialFiniteSet space;
  std::string description;
  int max_internal = 0;  // a cutoff keeping the complex small
};
RandomSpace random_space(std::mt19937_64& rng, int max_level);

// Degree additivity, unitality, graded commutativity and associativity of a
// raw table, checked directly from the definitions.
bool table_is_valid_algebra(const PrimeField& f, const std::vector<BasisElement>& basis, std::size_t unit,
                            const ProductTable& table);

struct PropertyCount {
  int passed = 0;
  int total = 0;
};

struct PropertyReport {
  std::map<std::string, PropertyCount> counts;
  bool pass = true;
  std::vector<std::string> failures;
  int instances = 0;
};

// Runs every invariant on `trials` random instances with p in {2, 3, 5} and
// max_level <= 4.
PropertyReport run_property_suite(std::uint64_t seed, int trials);

}  // namespace thhmay
