#include <functional>

#include "doctest.h"
#include "thhmay/mayfilt.hpp"
#include "thhmay/selftest.hpp"

using namespace thhmay;

namespace {

std::size_t find_label(const LodayComplex& c, int h, int t, const std::string& label) {
  for (std::size_t k = 0; k < c.tensors(h, t).size(); ++k)
    if (c.label(h, t, k) == label) return k;
  FAIL("label not found: " << label);
  return 0;
}

std::uint64_t enumerate_components(int s, int n) {
  std::uint64_t count = 0;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == s - 1) {
      ++count;
      return;
    }
    for (int v = 0; v <= left; ++v) rec(i + 1, left - v);
  };
  if (s == 0) return n == 0;
  rec(0, n);
  return count;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("trivial filtration") {
  auto fc = filter(build(circle(4), trivial_filtration(exterior_algebra(3, 3)), {6, true}));
  for (const auto& [k, b] : fc.complex().blocks()) {
    CHECK(fc.graded_dim(k.first, k.second, 0) == b.weights.size());
    CHECK(fc.graded_dim(k.first, k.second, 1) == 0);
  }
  CHECK(check_fundamental(fc).pass);
}

TEST_CASE("filtration is preserved and graded pieces add up") {
  for (const auto& na : corpus_algebras()) {
    auto fc = filter(build(circle(5), na.algebra, {10, true}));
    const auto& cx = fc.complex();
    for (const auto& [k, b] : cx.blocks()) {
      const auto* tgt = cx.block(k.first - 1, k.second);
      for (std::size_t j = 0; j < b.weights.size(); ++j)
        for (const auto& e : b.differential.col(j)) CHECK(tgt->weights[e.index] >= b.weights[j]);
      std::size_t sum = 0;
      for (int w = fc.min_weight(); w <= fc.max_weight(); ++w) sum += fc.graded_dim(k.first, k.second, w);
      CHECK(sum == b.weights.size());
    }
  }
}

TEST_CASE("fundamental theorem on the corpus") {
  for (const auto& na : corpus_algebras()) {
    CAPTURE(na.name);
    auto rep = check_fundamental(filter(build(circle(5), na.algebra, {10, true})));
    CHECK(rep.pass);
    CHECK_FALSE(rep.entries.empty());
  }
  auto ce = corpus_coefficients();
  for (const auto& m : {ce.m0, ce.m1, ce.quotient})
    CHECK(check_fundamental(filter(build_with_coefficients(circle(5), ce.algebra, m, {10, true}))).pass);
}

TEST_CASE("x4 weights: the graded differential drops the weight-3 component") {
  // In A, b(1|x|x) = 2 x|x - 1|x^2; 1|x^2 has weight 3 > 2, so the graded
  // complex keeps only 2 x|x.
  auto a = corpus_x4_weights();
  auto c = build(circle(4), a, {4, true});
  auto g = build(circle(4), associated_graded(a), {4, true});
  const auto& d = c.complex().block(2, 4)->differential;
  const auto& dg = g.complex().block(2, 4)->differential;
  auto col = find_label(c, 2, 4, "1|x|x");
  CHECK(d.at(find_label(c, 1, 4, "x|x"), col) == 2);
  CHECK(d.at(find_label(c, 1, 4, "1|x^2"), col) == 2);
  CHECK(dg.at(find_label(g, 1, 4, "x|x"), col) == 2);
  CHECK(dg.at(find_label(g, 1, 4, "1|x^2"), col) == 0);
  CHECK(check_fundamental(filter(std::move(c))).pass);
}

TEST_CASE("weight component count") {
  CHECK(weight_component_count(1, 5) == 1);
  CHECK(weight_component_count(2, 2) == 3);
  CHECK(weight_component_count(3, 2) == 6);
  for (int s = 1; s <= 6; ++s)
    for (int n = 0; n <= 8; ++n) {
      CHECK(weight_component_count(s, n) == enumerate_components(s, n));
      CHECK(weight_component_count(s, n) == choose(n + s - 1, s - 1));
    }
  CHECK(weight_component_count(2000, 2) == 2001000);
  CHECK(weight_component_count(2, 5000000) == 5000001);
  CHECK_THROWS_AS(weight_component_count(3000, 3000), Error);
}
