#include <functional>

#include "doctest.h"
#include "thhmay/io.hpp"
#include "thhmay/simplicial.hpp"

using namespace thhmay;

namespace {

std::vector<std::size_t> level_counts(const SimplicialFiniteSet& x) {
  std::vector<std::size_t> c;
  for (int n = 0; n <= x.max_level(); ++n) c.push_back(x.size(n));
  return c;
}

// n-simplices of the minimal circle are step functions [n] -> [1] with the
// step at k in {1..n}, plus the basepoint. A d-tuple is nondegenerate iff
// the steps of its components cover 1..n.
std::size_t torus_nondegenerate_oracle(int d, int n) {
  std::size_t count = 0;
  std::vector<int> steps(d, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      std::vector<bool> hit(n + 1, false);
      for (int s : steps) hit[s] = true;
      bool all = true;
      for (int k = 1; k <= n; ++k) all = all && hit[k];
      if (all) ++count;
      return;
    }
    for (int s = 0; s <= n; ++s) {
      steps[i] = s;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("circle") {
  auto c = circle(3);
  CHECK(level_counts(c) == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(c.pointed());
  auto nd = nondegenerate(c, 1);
  REQUIRE(nd.size() == 1);
  CHECK(c.face(1, 0, nd[0]) == c.basepoint(0));
  CHECK(c.face(1, 1, nd[0]) == c.basepoint(0));
  CHECK(nondegenerate(c, 2).empty());
  CHECK(nondegenerate(c, 0).size() == 1);
  CHECK(c.nondegenerate_dim() == 1);
}

TEST_CASE("spheres and points") {
  auto s = sphere(2, 4);
  for (int n = 0; n <= 4; ++n) CHECK(s.size(n) == 1 + binom(n, 2));
  CHECK(nondegenerate(s, 2).size() == 1);
  CHECK(nondegenerate(s, 3).empty());
  auto pt = point(4);
  CHECK(level_counts(pt) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(nondegenerate(pt, 1).empty());
}

TEST_CASE("products") {
  auto c = circle(3);
  auto cc = product(c, c);
  CHECK(level_counts(cc) == std::vector<std::size_t>{1, 4, 9, 16});
  auto cp = product(c, point(3));
  CHECK(level_counts(cp) == level_counts(c));
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      for (std::size_t k = 0; k < c.size(n); ++k) CHECK(cp.face(n, i, k) == c.face(n, i, k));
  CHECK(nondegenerate(cc, 2).size() == 2);
}

TEST_CASE("torus nondegenerate simplices against enumeration") {
  for (int d = 1; d <= 3; ++d) {
    auto t = torus(d, 4);
    for (int n = 0; n <= 4; ++n) CHECK(nondegenerate(t, n).size() == torus_nondegenerate_oracle(d, n));
  }
  CHECK_THROWS_AS(torus(0, 3), Error);
}

TEST_CASE("identity violations are rejected") {
  auto c = circle(3);
  auto faces = c.faces();
  auto degs = c.degeneracies();
  // swap two faces of a level-2 simplex so d_0 d_2 != d_1 d_0 somewhere
  bool changed = false;
  for (std::size_t s = 0; s < c.size(2) && !changed; ++s)
    if (faces[2][0][s] != faces[2][2][s]) {
      std::swap(faces[2][0][s], faces[2][2][s]);
      changed = true;
    }
  REQUIRE(changed);
  CHECK_THROWS_AS(SimplicialFiniteSet(c.levels(), faces, degs, c.basepoint_name()), Error);
  CHECK_NOTHROW(SimplicialFiniteSet(c.levels(), c.faces(), degs, c.basepoint_name()));
}

TEST_CASE("json round trip") {
  for (const auto& x : {circle(4), torus(2, 3), sphere(2, 3), point(2)}) CHECK(simplicial_from_json(to_json(x)) == x);
  auto doc = to_json(circle(2));
  doc["faces"][2][0][1] = 5;
  CHECK_THROWS_AS(simplicial_from_json(doc), Error);
}
