#include "thhmay/posetlab.hpp"

#include <algorithm>
#include <numeric>

#include "thhmay/error.hpp"

namespace thhmay {

int l1_norm(const NVector& x) { return std::accumulate(x.begin(), x.end(), 0); }

bool leq(const NVector& a, const NVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

FinitePoset::FinitePoset(std::vector<NVector> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FinitePoset::contains(const NVector& x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool FinitePoset::is_partial_order() const {
  const auto& e = elements_;
  for (const auto& a : e)
    if (!leq(a, a)) return false;
  for (const auto& a : e)
    for (const auto& b : e)
      if (leq(a, b) && leq(b, a) && a != b) return false;
  if (e.size() <= 200) {
    for (const auto& a : e)
      for (const auto& b : e) {
        if (!leq(a, b)) continue;
        for (const auto& c : e)
          if (leq(b, c) && !leq(a, c)) return false;
      }
  }
  return true;
}

namespace {

// All vectors in [lo_i, hi] per coordinate, lexicographic.
template <class Keep>
std::vector<NVector> box(const NVector& lo, int hi, Keep keep) {
  std::vector<NVector> out;
  NVector cur(lo);
  if (std::any_of(lo.begin(), lo.end(), [&](int v) { return v > hi; })) return out;
  while (true) {
    if (keep(cur)) out.push_back(cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < hi) {
        ++cur[i];
        for (std::size_t j = i + 1; j < cur.size(); ++j) cur[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

}  // namespace

FinitePoset E_poset(int s_size, int n, int k) {
  if (s_size < 0 || n < 0) throw Error(ErrorKind::InvalidParams, "poset sizes must be nonnegative");
  if (k < n) throw Error(ErrorKind::InvalidParams, "E poset needs k >= n");
  return FinitePoset(box(NVector(s_size, 0), n, [&](const NVector& v) { return l1_norm(v) >= k; }));
}

FinitePoset D_poset_truncated(int s_size, int n, const NVector& x, int cap) {
  if (static_cast<int>(x.size()) != s_size) throw Error(ErrorKind::InvalidParams, "base vector has wrong length");
  if (n < 0 || cap < 0) throw Error(ErrorKind::InvalidParams, "poset sizes must be nonnegative");
  const int need = n + l1_norm(x);
  return FinitePoset(box(x, cap, [&](const NVector& v) { return l1_norm(v) >= need; }));
}

AdjunctionResult check_adjunction(int s_size, int n, const NVector& x, int cap) {
  AdjunctionResult res;
  auto e = E_poset(s_size, n, n);
  auto d = D_poset_truncated(s_size, n, x, cap);
  auto J = [&](const NVector& z) {
    NVector r(z);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += x[i];
    return r;
  };
  auto K = [&](const NVector& y) {
    NVector r(y.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(n, y[i] - x[i]);
    return r;
  };
  auto fail = [&](const NVector* z, const NVector* y, std::string why) {
    res.pass = false;
    if (z) res.z = *z;
    if (y) res.y = *y;
    res.detail = std::move(why);
    return res;
  };
  for (const auto& z : e.elements()) {
    auto j = J(z);
    // Beyond the cap J(z) is outside the truncation but still a valid element.
    if (l1_norm(j) < n + l1_norm(x) || !leq(x, j)) return fail(&z, nullptr, "J(z) not in D");
  }
  for (const auto& y : d.elements())
    if (!e.contains(K(y))) return fail(nullptr, &y, "K(y) not in E");
  for (const auto& z : e.elements())
    for (const auto& y : d.elements())
      if (leq(z, K(y)) != leq(J(z), y)) return fail(&z, &y, "z <= K(y) and J(z) <= y disagree");
  return res;
}

bool l1_functoriality(const std::vector<int>& f, int target_size, const NVector& x) {
  if (f.size() != x.size()) throw Error(ErrorKind::InvalidParams, "map and vector sizes differ");
  NVector pushed(target_size, 0);
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (f[t] < 0 || f[t] >= target_size) throw Error(ErrorKind::InvalidParams, "map leaves its target");
    pushed[f[t]] += x[t];
  }
  return l1_norm(pushed) == l1_norm(x);
}

}  // namespace thhmay
