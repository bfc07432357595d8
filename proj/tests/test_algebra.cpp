#include <map>

#include "doctest.h"
#include "thhmay/algebra.hpp"

using namespace thhmay;

namespace {

SparseVector e(std::size_t i, Residue v = 1) { return {{i, v}}; }

// Dimension per degree by brute force over the basis.
std::map<int, int> degree_counts(const GradedAlgebra& a) {
  std::map<int, int> c;
  for (const auto& b : a.basis()) ++c[b.degree];
  return c;
}

}  // namespace

TEST_CASE("constructor validation") {
  PrimeField f(3);
  std::vector<BasisElement> basis{{"1", 0}, {"x", 2}};
  ProductTable ok{{e(0), e(1)}, {e(1), {}}};
  CHECK_NOTHROW(GradedAlgebra(f, basis, 0, ok));

  ProductTable bad_degree{{e(0), e(1)}, {e(1), e(1)}};  // x*x = x
  CHECK_THROWS_AS(GradedAlgebra(f, basis, 0, bad_degree), Error);

  ProductTable bad_unit{{e(0), e(1, 2)}, {e(1, 2), {}}};
  CHECK_THROWS_AS(GradedAlgebra(f, basis, 0, bad_unit), Error);

  // x odd: x*y must be -y*x
  std::vector<BasisElement> b3{{"1", 0}, {"x", 1}, {"y", 1}, {"xy", 2}};
  ProductTable anti(4, std::vector<SparseVector>(4));
  for (std::size_t i = 0; i < 4; ++i) anti[0][i] = anti[i][0] = e(i);
  anti[1][2] = e(3);
  anti[2][1] = e(3, 2);
  CHECK_NOTHROW(GradedAlgebra(f, b3, 0, anti));
  auto sym = anti;
  sym[2][1] = e(3);
  CHECK_THROWS_AS(GradedAlgebra(f, b3, 0, sym), Error);

  // (x x) y = z y = u but x (x y) = 0
  std::vector<BasisElement> b5{{"1", 0}, {"x", 2}, {"y", 2}, {"z", 4}, {"u", 6}};
  ProductTable t5(5, std::vector<SparseVector>(5));
  for (std::size_t i = 0; i < 5; ++i) t5[0][i] = t5[i][0] = e(i);
  t5[1][1] = e(3);
  CHECK_NOTHROW(GradedAlgebra(f, b5, 0, t5));
  t5[3][2] = t5[2][3] = e(4);
  CHECK_THROWS_AS(GradedAlgebra(f, b5, 0, t5), Error);
}

TEST_CASE("filtered algebra weight checks") {
  auto a = truncated_polynomial(3, 2, 4);
  CHECK_NOTHROW(FilteredAlgebra(a, {0, 1, 3, 4}));
  CHECK_THROWS_AS(FilteredAlgebra(a, {1, 1, 3, 4}), Error);  // unit weight
  CHECK_THROWS_AS(FilteredAlgebra(a, {0, 2, 3, 4}), Error);  // x*x has weight 3 < 4
  CHECK_THROWS_AS(FilteredAlgebra(a, {0, 1, 3}), Error);
}

TEST_CASE("associated graded examples") {
  auto all0 = trivial_filtration(truncated_polynomial(3, 2, 4));
  CHECK(associated_graded(all0) == all0);

  // Structure constants computed by hand under the weight-selection rule.
  FilteredAlgebra x4(truncated_polynomial(3, 0 + 2, 4), {0, 1, 3, 4});
  auto gr = associated_graded(x4);
  const auto& g = gr.algebra();
  CHECK(g.product(1, 1).empty());
  CHECK(g.product(1, 2) == e(3));
  CHECK(g.product(2, 2).empty());
  CHECK(g.product(1, 3).empty());
  CHECK(gr.weights() == x4.weights());
  CHECK(associated_graded(gr) == gr);

  auto ex = whitehead_filtration(exterior_algebra(3, 3));
  CHECK(associated_graded(ex) == ex);
  auto w4 = whitehead_filtration(truncated_polynomial(3, 2, 4));
  CHECK(associated_graded(w4).algebra().products() == w4.algebra().products());
}

TEST_CASE("associated graded bimodule") {
  FilteredAlgebra a(exterior_algebra(3, 2), {0, 1});
  // x.1 = x lands in weight 2 > 1 + 0
  FilteredBimodule m(a, {{"1", 0}, {"x", 2}}, {0, 2}, a.algebra().products());
  auto gm = associated_graded_bimodule(m);
  CHECK(gm.left_action(1, 0).empty());
  CHECK(gm.left_action(0, 1) == e(1));
  auto trivial = regular_bimodule(trivial_filtration(exterior_algebra(3, 2)));
  CHECK(associated_graded_bimodule(trivial) == trivial);
  FilteredBimodule zero(a, {}, {}, ActionTable(a.size()));
  CHECK(associated_graded_bimodule(zero).size() == 0);
}

TEST_CASE("constructors") {
  auto ex = exterior_algebra(3, 3);
  CHECK(ex.size() == 2);
  CHECK(ex.product(1, 1).empty());
  auto f2 = exterior_algebra(2, 1);
  CHECK(f2 == truncated_polynomial(2, 1, 2));
  auto e5 = exterior_algebra(5, 2);
  CHECK(e5.product(1, 1).empty());

  CHECK(truncated_polynomial(3, 2, 4).size() == 4);
  CHECK(truncated_polynomial(3, 2, 2) == exterior_algebra(3, 2));
  CHECK_THROWS_AS(truncated_polynomial(3, 3, 3), Error);

  CHECK(polynomial_truncated_model(3, 4, 10).size() == 3);
  CHECK(polynomial_truncated_model(2, 2, 0).size() == 1);
  auto m = polynomial_truncated_model(5, 2, 7);
  CHECK(m.size() == 4);
  CHECK(m.truncation() == 7);
  CHECK(m.product(2, 2).empty());  // x^4 above the cutoff
}

TEST_CASE("tensor products") {
  auto ex = exterior_algebra(3, 3);
  CHECK(tensor_product(ex, ground_field(3)).products() == ex.products());
  auto ey = exterior_algebra(3, 5);
  auto t = tensor_product(ex, ey);
  REQUIRE(t.size() == 4);
  // both factors are named x, so find them by degree
  std::size_t x = 0, y = 0, xy = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (t.degree(i) == 3) x = i;
    if (t.degree(i) == 5) y = i;
    if (t.degree(i) == 8) xy = i;
  }
  CHECK(t.product(x, y) == e(xy, 1));
  CHECK(t.product(y, x) == e(xy, 2));
  CHECK_THROWS_AS(tensor_product(ex, exterior_algebra(5, 3)), Error);

  // E(x) ⊗ E(x), |x| = 2: Poincaré series (1+t^2)^2
  auto sq = tensor_product(exterior_algebra(3, 2), exterior_algebra(3, 2));
  CHECK(degree_counts(sq) == std::map<int, int>{{0, 1}, {2, 2}, {4, 1}});
}

TEST_CASE("square-zero extensions") {
  auto k = trivial_filtration(ground_field(3));
  auto ext = square_zero_extension(k.algebra(), regular_bimodule(k, 4));
  auto ex = exterior_algebra(3, 4);
  CHECK(ext.size() == 2);
  CHECK(ext.degree(1) == 4);
  CHECK(ext.products() == ex.products());

  FilteredBimodule zero(k, {}, {}, ActionTable(1));
  CHECK(square_zero_extension(k.algebra(), zero) == k.algebra());

  // A = E(y), |y| = 1 at p = 3, M = Σ^2 A: basis 1, y, m, ym with
  // y.m = ym, m.y = (-1)^{2*1} ym = ym and y.y = m.m = 0.
  auto ey = trivial_filtration(exterior_algebra(3, 1));
  auto big = square_zero_extension(ey.algebra(), regular_bimodule(ey, 2));
  REQUIRE(big.size() == 4);
  CHECK(big.product(1, 2) == e(3));
  CHECK(big.product(2, 1) == e(3));
  CHECK(big.product(2, 2).empty());
  CHECK(big.product(2, 3).empty());
  // odd shift: m.y = -y.m
  auto odd = square_zero_extension(ey.algebra(), regular_bimodule(ey, 3));
  CHECK(odd.product(1, 2) == e(3));
  CHECK(odd.product(2, 1) == e(3, 2));
}

TEST_CASE("whitehead filtration") {
  CHECK(whitehead_filtration(exterior_algebra(3, 3)).weights() == std::vector<int>{0, 3});
  CHECK(whitehead_filtration(ground_field(5)).weights() == std::vector<int>{0});
  CHECK(whitehead_filtration(truncated_polynomial(3, 2, 4)).weights() == std::vector<int>{0, 2, 4, 6});
}

TEST_CASE("submodules and quotients") {
  auto a = whitehead_filtration(exterior_algebra(3, 3));
  auto m0 = regular_bimodule(a);
  std::vector<std::size_t> ideal{1}, not_closed{0};
  auto m1 = submodule(m0, ideal);
  CHECK(m1.size() == 1);
  CHECK(m1.left_action(1, 0).empty());
  CHECK_THROWS_AS(submodule(m0, not_closed), Error);
  auto q = quotient_module(m0, ideal);
  CHECK(q.size() == 1);
  CHECK(q.degree(0) == 0);
  CHECK(q.left_action(1, 0).empty());
  CHECK(q.left_action(0, 0) == e(0));
}
