#include <functional>
#include <random>

#include "doctest.h"
#include "thhmay/posetlab.hpp"

using namespace thhmay;

namespace {

std::vector<NVector> all_vectors(int s, int max_norm) {
  std::vector<NVector> out;
  NVector x(s, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == s) {
      out.push_back(x);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, max_norm);
  return out;
}

}  // namespace

TEST_CASE("E posets") {
  CHECK(E_poset(2, 1, 1).elements() == std::vector<NVector>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(E_poset(1, 3, 3).elements() == std::vector<NVector>{{3}});
  CHECK(E_poset(2, 2, 4).elements() == std::vector<NVector>{{2, 2}});
  CHECK_THROWS_AS(E_poset(2, 3, 2), Error);
  for (int s = 1; s <= 3; ++s)
    for (int n = 0; n <= 3; ++n) CHECK(E_poset(s, n, n).is_partial_order());
}

TEST_CASE("truncated D posets") {
  auto full = D_poset_truncated(2, 0, {0, 0}, 2);
  CHECK(full.size() == 9);
  CHECK(D_poset_truncated(1, 2, {1}, 5).elements() == std::vector<NVector>{{3}, {4}, {5}});
  CHECK(D_poset_truncated(2, 5, {0, 0}, 2).size() == 0);
  CHECK(D_poset_truncated(2, 1, {1, 0}, 3).is_partial_order());
}

TEST_CASE("E_n sits inside D_n") {
  for (int s = 1; s <= 3; ++s)
    for (int n = 0; n <= 3; ++n) {
      auto d = D_poset_truncated(s, n, NVector(s, 0), n);
      auto e = E_poset(s, n, n);
      for (const auto& z : e.elements()) CHECK(d.contains(z));
    }
}

TEST_CASE("adjunction examples") {
  CHECK(check_adjunction(2, 1, {0, 0}, 4).pass);
  CHECK(check_adjunction(1, 2, {1}, 6).pass);
  CHECK(check_adjunction(2, 0, {0, 1}, 3).pass);
}

TEST_CASE("adjunction holds exhaustively for small parameters") {
  for (int s = 1; s <= 3; ++s)
    for (int n = 0; n <= 3; ++n)
      for (const auto& x : all_vectors(s, 2)) {
        auto r = check_adjunction(s, n, x, n + l1_norm(x) + 3);
        CHECK_MESSAGE(r.pass, r.detail);
      }
}

TEST_CASE("L1 functoriality") {
  CHECK(l1_functoriality({0, 1, 2}, 3, {4, 0, 2}));
  CHECK(l1_functoriality({0, 0, 0, 0}, 1, {1, 2, 3, 4}));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    int t = std::uniform_int_distribution<int>(1, 5)(rng);
    int s = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<int> f(t);
    NVector x(t);
    for (int i = 0; i < t; ++i) {
      f[i] = std::uniform_int_distribution<int>(0, s - 1)(rng);
      x[i] = std::uniform_int_distribution<int>(0, 9)(rng);
    }
    CHECK(l1_functoriality(f, s, x));
  }
  CHECK_THROWS_AS(l1_functoriality({3}, 2, {1}), Error);
}

TEST_CASE("helpers") {
  CHECK(l1_norm({1, 2, 3}) == 6);
  CHECK(leq({0, 1}, {1, 1}));
  CHECK_FALSE(leq({2, 0}, {1, 1}));
}
