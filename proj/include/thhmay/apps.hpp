#pragma once

// Closed-form Hochschild homology answers, Poincaré-series bounds and the
// Frobenius-number vanishing degrees, plus helpers to compare them with
// computed homology tables.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "thhmay/complex.hpp"
#include "thhmay/specseq.hpp"

namespace thhmay {

// Integer power series truncated at t^N.
class PowerSeries {
 public:
  explicit PowerSeries(int order, std::vector<std::int64_t> coeffs = {1});

  int order() const noexcept { return order_; }
  std::int64_t operator[](int k) const { return k >= 0 && k <= order_ ? c_[k] : 0; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }

  static PowerSeries one(int order) { return PowerSeries(order); }
  // 1 + t^d
  static PowerSeries binomial(int order, int d);
  // 1 / (1 - t^d)
  static PowerSeries geometric(int order, int d);

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  int order_;
  std::vector<std::int64_t> c_;
};

enum class GeneratorKind { Exterior, Polynomial, DividedPower };

struct SymbolicGenerator {
  int degree = 1;
  GeneratorKind kind = GeneratorKind::Polynomial;
};

class SymbolicGradedDims {
 public:
  explicit SymbolicGradedDims(std::vector<SymbolicGenerator> gens);
  const std::vector<SymbolicGenerator>& generators() const noexcept { return gens_; }
  PowerSeries series(int order) const;
  // Number of monomials of degree n, by direct enumeration of exponents.
  std::int64_t count_monomials(int n) const;

 private:
  std::vector<SymbolicGenerator> gens_;
};

// Dims per total degree of E(x) ⊗ Γ(σx), |x| = deg_x, up to N.
// Throws InvalidParams for even deg_x at odd p.
std::vector<std::size_t> hh_exterior_expected(std::uint32_t p, int deg_x, int N);
// Bigraded (h, t) dims of HH(F_p[x]/x^2) for even deg_x and odd p, total degree <= N.
std::map<Bidegree, std::size_t> hh_truncated_square_expected(std::uint32_t p, int deg_x, int N);
// Dims of P(x) ⊗ E(σx), |x| = deg_x even.
std::vector<std::size_t> hh_polynomial_expected(int deg_x, int N);

// (1 + t^{2p-1})(1 + t^{2n+1}) / ((1 - t^{2n})(1 - t^{2p})) to order N.
SymbolicGradedDims poincare_generators(std::uint32_t p, int n);
PowerSeries poincare_bound(std::uint32_t p, int n, int N);

struct VanishingCertificate {
  int degree = 0;
  std::int64_t enumerated = 0;  // monomial count
  std::int64_t series = 0;      // coefficient of poincare_bound
};

struct VanishingReport {
  std::uint32_t p = 0;
  int n = 0;
  int frobenius_degree = 0;  // 2(pn - p - n)
  bool p_divides_n = false;
  std::vector<int> degrees;                  // p ∤ n
  std::vector<VanishingCertificate> certificates;
  std::set<int> allowed_residues;            // p | n, modulo 2p
  int residue_checked_up_to = 0;
  bool consistent = true;
};

// Throws InvalidParams if n <= 0 or p is not prime.
VanishingReport vanishing_degrees(std::uint32_t p, int n);

struct DegreeCheck {
  int n = 0;
  std::size_t computed = 0;
  std::size_t expected = 0;
  bool ok() const { return computed == expected; }
};

struct HHComparison {
  std::vector<DegreeCheck> totals;
  bool pass = true;
};

// Compares within the exact total degrees of the computed table.
HHComparison verify_hh_against_expected(const HomologyTable& computed, const std::vector<std::size_t>& expected);

struct BigradedCheck {
  Bidegree at;
  std::size_t computed = 0;
  std::size_t expected = 0;
};

// Compares every bidegree with h <= h_max, t <= t_max; returns mismatches.
std::vector<BigradedCheck> bigraded_mismatches(const HomologyTable& computed,
                                               const std::map<Bidegree, std::size_t>& expected, int h_max, int t_max);

// E^1 of the May spectral sequence for the square-zero extension, in the
// (total degree, weight) grading: E(λ1) ⊗ P(μ1) ⊗ HH(F_p[x]/x^2) with
// |x| = 2k, up to total degree N.
struct SquareZeroE1 {
  E1Table table;
  std::vector<std::pair<int, int>> generators;  // λ1, μ1, x, x_i, y_j
};
SquareZeroE1 square_zero_e1(std::uint32_t p, int k, int N);

}  // namespace thhmay
