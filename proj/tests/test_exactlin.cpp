#include <random>

#include "doctest.h"
#include "thhmay/exactlin.hpp"

using namespace thhmay;

namespace {

using Triplet = std::tuple<std::size_t, std::size_t, std::int64_t>;

SparseMatrix dense(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<Triplet> t;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t.emplace_back(i, j, rows[i][j]);
  return SparseMatrix::from_triplets(PrimeField(p), rows.size(), cols, t);
}

SparseMatrix random_matrix(std::mt19937_64& rng, std::uint32_t p, std::size_t r, std::size_t c, double density) {
  std::vector<Triplet> t;
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<std::int64_t> val(0, p - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) t.emplace_back(i, j, val(rng));
  return SparseMatrix::from_triplets(PrimeField(p), r, c, t);
}

// Dense Gaussian elimination, written separately from the sparse code.
std::size_t dense_rank(const SparseMatrix& m) {
  const std::int64_t p = m.field().p();
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
  for (auto [i, j, v] : m.triplets()) a[i][j] = v;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    std::int64_t inv = 1;
    for (std::int64_t k = 1; k < p; ++k)
      if (a[r][c] * k % p == 1) inv = k;
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && a[i][c]) {
        std::int64_t f = a[i][c];
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
      }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.sign(3) == 6);
  CHECK(f.sign(2) == 1);
  CHECK(PrimeField(2).sign(1) == 1);
  CHECK_THROWS_AS(PrimeField(6), Error);
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("rank examples") {
  CHECK(rank(SparseMatrix(PrimeField(5), 0, 0)) == 0);
  CHECK(rank(SparseMatrix::identity(PrimeField(5), 3)) == 3);
  CHECK(rank(dense(5, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(SparseMatrix::identity(PrimeField(3), 4)).dim() == 0);
  auto k = kernel(SparseMatrix(PrimeField(3), 2, 3));
  CHECK(k.dim() == 3);
  auto k2 = kernel(dense(5, {{1, 2}}));
  REQUIRE(k2.dim() == 1);
  // span{(3,1)}
  CHECK(k2.contains({{0, 3}, {1, 1}}));
  CHECK_FALSE(k2.contains({{0, 1}, {1, 1}}));
}

TEST_CASE("quotient dim examples") {
  PrimeField f(3);
  std::vector<SparseVector> sup_gens{{{0, 1}}, {{1, 1}}};
  Subspace sup(f, 3, sup_gens);
  CHECK(quotient_dim(sup, sup) == 0);
  CHECK(quotient_dim(Subspace(f, 3), sup) == 2);
  std::vector<SparseVector> sub_gens{{{0, 1}, {1, 1}}};
  Subspace sub(f, 3, sub_gens);
  CHECK(quotient_dim(sub, sup) == 1);
  std::vector<SparseVector> outside{{{2, 1}}};
  CHECK_THROWS_AS(quotient_dim(Subspace(f, 3, outside), sup), Error);
}

TEST_CASE("quotient basis coordinates") {
  PrimeField f(5);
  std::vector<SparseVector> den_g{{{0, 1}}};
  std::vector<SparseVector> num_g{{{0, 1}}, {{1, 1}, {2, 2}}, {{2, 1}}};
  QuotientBasis q(Subspace(f, 3, den_g), Subspace(f, 3, num_g));
  CHECK(q.dim() == 2);
  CHECK(q.coordinates({{0, 4}}).empty());
  for (const auto& r : q.representatives()) CHECK(q.coordinates(r).size() == 1);
}

TEST_CASE("rank-nullity, canonical kernels, rank of products on random matrices") {
  std::mt19937_64 rng(7);
  const std::uint32_t primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 300; ++trial) {
    std::uint32_t p = primes[trial % 4];
    std::size_t r = std::uniform_int_distribution<std::size_t>(0, 20)(rng);
    std::size_t c = std::uniform_int_distribution<std::size_t>(0, 20)(rng);
    double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    auto m = random_matrix(rng, p, r, c, density);
    auto k = kernel(m);
    CHECK(rank(m) == dense_rank(m));
    CHECK(rank(m) + k.dim() == c);
    for (const auto& v : k.basis()) CHECK(m.apply(v).empty());
    // re-echelonizing the kernel basis is a fixed point
    CHECK(Subspace(m.field(), c, k.basis()) == k);
    std::size_t s = std::uniform_int_distribution<std::size_t>(0, 20)(rng);
    auto n = random_matrix(rng, p, c, s, density);
    auto mn = multiply(m, n);
    CHECK(rank(mn) == dense_rank(mn));
    CHECK(rank(mn) <= std::min(rank(m), rank(n)));
    CHECK(image(m).dim() == rank(m));
  }
}

TEST_CASE("subspace sums and containment") {
  PrimeField f(3);
  std::vector<SparseVector> a{{{0, 1}, {1, 1}}}, b{{{1, 1}}};
  auto s = sum(Subspace(f, 3, a), Subspace(f, 3, b));
  CHECK(s.dim() == 2);
  CHECK(is_subspace_of(Subspace(f, 3, a), s));
  CHECK(s.contains({{0, 2}}));
  CHECK_FALSE(s.contains({{2, 1}}));
}
