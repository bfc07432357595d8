#include "thhmay/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace thhmay {

namespace {

[[noreturn]] void violation(const std::string& identity, int level, const std::string& simplex) {
  throw Error(ErrorKind::IdentityViolation,
              identity + " fails at level " + std::to_string(level) + " on simplex '" + simplex + "'");
}

std::string op(const char* kind, int i) { return std::string(kind) + "_" + std::to_string(i); }

}  // namespace

SimplicialFiniteSet::SimplicialFiniteSet(std::vector<std::vector<std::string>> levels, MapTables faces,
                                         MapTables degeneracies, std::optional<std::string> basepoint,
                                         std::optional<int> nondegenerate_dim)
    : levels_(std::move(levels)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)),
      basepoint_(std::move(basepoint)),
      nondegenerate_dim_(nondegenerate_dim) {
  if (levels_.empty()) throw Error(ErrorKind::Validation, "simplicial set needs at least level 0");
  const int top = max_level();
  if (faces_.empty()) faces_.emplace_back();
  if (static_cast<int>(faces_.size()) != top + 1 || !faces_[0].empty())
    throw Error(ErrorKind::Validation, "face table must list levels 1..max_level (level 0 empty)");
  if (static_cast<int>(degeneracies_.size()) == top + 1) {
    if (!degeneracies_.back().empty()) throw Error(ErrorKind::Validation, "no degeneracies out of the top level");
    degeneracies_.pop_back();
  }
  if (static_cast<int>(degeneracies_.size()) != top)
    throw Error(ErrorKind::Validation, "degeneracy table must list levels 0..max_level-1");
  for (int n = 0; n <= top; ++n) {
    if (levels_[n].empty()) throw Error(ErrorKind::Validation, "level " + std::to_string(n) + " is empty");
    std::set<std::string> names(levels_[n].begin(), levels_[n].end());
    if (names.size() != levels_[n].size())
      throw Error(ErrorKind::Validation, "repeated simplex name at level " + std::to_string(n));
  }
  auto check_table = [&](const std::vector<std::vector<std::size_t>>& t, int count, std::size_t src, std::size_t dst,
                         const char* what, int n) {
    if (static_cast<int>(t.size()) != count)
      throw Error(ErrorKind::Validation, std::string(what) + " table at level " + std::to_string(n) + " has wrong arity");
    for (const auto& row : t) {
      if (row.size() != src)
        throw Error(ErrorKind::Validation, std::string(what) + " table at level " + std::to_string(n) + " has wrong length");
      for (auto v : row)
        if (v >= dst)
          throw Error(ErrorKind::Validation, std::string(what) + " table at level " + std::to_string(n) + " out of range");
    }
  };
  for (int n = 1; n <= top; ++n) check_table(faces_[n], n + 1, size(n), size(n - 1), "face", n);
  for (int n = 0; n < top; ++n) check_table(degeneracies_[n], n + 1, size(n), size(n + 1), "degeneracy", n);

  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (std::size_t s = 0; s < size(n); ++s)
          if (face(n - 1, i, face(n, j, s)) != face(n - 1, j - 1, face(n, i, s)))
            violation(op("d", i) + op(" d", j) + " = " + op("d", j - 1) + op(" d", i), n, name(n, s));
  for (int n = 0; n < top; ++n)
    for (int j = 0; j <= n; ++j)
      for (std::size_t s = 0; s < size(n); ++s) {
        std::size_t t = degeneracy(n, j, s);
        for (int i = 0; i <= n + 1; ++i) {
          std::size_t lhs = face(n + 1, i, t);
          if (i == j || i == j + 1) {
            if (lhs != s) violation(op("d", i) + op(" s", j) + " = id", n, name(n, s));
          } else if (i < j) {
            if (n >= 1 && lhs != degeneracy(n - 1, j - 1, face(n, i, s)))
              violation(op("d", i) + op(" s", j) + " = " + op("s", j - 1) + op(" d", i), n, name(n, s));
          } else if (n >= 1 && lhs != degeneracy(n - 1, j, face(n, i - 1, s))) {
            violation(op("d", i) + op(" s", j) + " = " + op("s", j) + op(" d", i - 1), n, name(n, s));
          }
        }
      }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int n = 0; n + 2 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (std::size_t s = 0; s < size(n); ++s)
          if (degeneracy(n + 1, i, degeneracy(n, j, s)) != degeneracy(n + 1, j + 1, degeneracy(n, i, s)))
            violation(op("s", i) + op(" s", j) + " = " + op("s", j + 1) + op(" s", i), n, name(n, s));

  if (basepoint_) {
    auto it = std::find(levels_[0].begin(), levels_[0].end(), *basepoint_);
    if (it == levels_[0].end()) throw Error(ErrorKind::Validation, "basepoint '" + *basepoint_ + "' is not a 0-simplex");
    basepoint_index_.push_back(static_cast<std::size_t>(it - levels_[0].begin()));
    for (int n = 0; n < top; ++n) basepoint_index_.push_back(degeneracy(n, 0, basepoint_index_[n]));
    for (int n = 0; n <= top; ++n) {
      for (int i = 0; n < top && i <= n; ++i)
        if (degeneracy(n, i, basepoint_index_[n]) != basepoint_index_[n + 1])
          violation(op("s", i) + " preserves the basepoint", n, name(n, basepoint_index_[n]));
      for (int i = 0; n > 0 && i <= n; ++i)
        if (face(n, i, basepoint_index_[n]) != basepoint_index_[n - 1])
          violation(op("d", i) + " preserves the basepoint", n, name(n, basepoint_index_[n]));
    }
  }
}

// ---------------------------------------------------------------------------

SimplicialFiniteSet point(int max_level) {
  if (max_level < 0) throw Error(ErrorKind::InvalidParams, "negative level cutoff");
  std::vector<std::vector<std::string>> levels(max_level + 1, {"*"});
  MapTables faces(max_level + 1), degs(max_level);
  for (int n = 1; n <= max_level; ++n) faces[n].assign(n + 1, {0});
  for (int n = 0; n < max_level; ++n) degs[n].assign(n + 1, {0});
  return SimplicialFiniteSet(std::move(levels), std::move(faces), std::move(degs), "*", 0);
}

SimplicialFiniteSet sphere(int d, int max_level) {
  if (d < 1) throw Error(ErrorKind::InvalidParams, "sphere dimension must be positive");
  if (max_level < 0) throw Error(ErrorKind::InvalidParams, "negative level cutoff");
  // A surjection [n] -> [d] is stored by its jump positions 1 <= k_1 < ... < k_d <= n,
  // where k_m is the first vertex sent to m. Index 0 at every level is the basepoint.
  std::vector<std::vector<std::vector<int>>> jumps(max_level + 1);
  for (int n = 0; n <= max_level; ++n) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
      if (static_cast<int>(cur.size()) == d) {
        jumps[n].push_back(cur);
        return;
      }
      for (int k = next; k <= n; ++k) {
        cur.push_back(k);
        self(self, k + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
  }
  auto index_of = [&](int n, const std::vector<int>& j) -> std::size_t {
    auto& v = jumps[n];
    auto it = std::lower_bound(v.begin(), v.end(), j);
    return static_cast<std::size_t>(it - v.begin()) + 1;
  };
  std::vector<std::vector<std::string>> levels(max_level + 1);
  for (int n = 0; n <= max_level; ++n) {
    levels[n].push_back("*");
    for (const auto& j : jumps[n]) {
      std::string s;
      int value = 0;
      for (int v = 0; v <= n; ++v) {
        while (value < d && j[value] <= v) ++value;
        if (d > 9 && v > 0) s += ',';
        s += std::to_string(value);
      }
      levels[n].push_back(std::move(s));
    }
  }
  MapTables faces(max_level + 1), degs(max_level);
  for (int n = 1; n <= max_level; ++n) {
    faces[n].assign(n + 1, std::vector<std::size_t>(levels[n].size(), 0));
    for (int i = 0; i <= n; ++i)
      for (std::size_t s = 0; s < jumps[n].size(); ++s) {
        // Deleting vertex i shifts later jumps down by one; the map stays
        // surjective unless two jumps collide or a jump falls off an end.
        std::vector<int> out;
        bool surjective = true;
        for (int k : jumps[n][s]) {
          int kk = k > i ? k - 1 : k;
          if (kk < 1 || kk > n - 1 || (!out.empty() && out.back() == kk)) surjective = false;
          out.push_back(kk);
        }
        faces[n][i][s + 1] = surjective ? index_of(n - 1, out) : 0;
      }
  }
  for (int n = 0; n < max_level; ++n) {
    degs[n].assign(n + 1, std::vector<std::size_t>(levels[n].size(), 0));
    for (int i = 0; i <= n; ++i)
      for (std::size_t s = 0; s < jumps[n].size(); ++s) {
        std::vector<int> out;
        for (int k : jumps[n][s]) out.push_back(k > i ? k + 1 : k);
        degs[n][i][s + 1] = index_of(n + 1, out);
      }
  }
  return SimplicialFiniteSet(std::move(levels), std::move(faces), std::move(degs), "*", d);
}

SimplicialFiniteSet circle(int max_level) { return sphere(1, max_level); }

SimplicialFiniteSet product(const SimplicialFiniteSet& x, const SimplicialFiniteSet& y) {
  if (x.max_level() != y.max_level())
    throw Error(ErrorKind::CutoffMismatch, "product of simplicial sets with different cutoffs");
  const int top = x.max_level();
  std::vector<std::vector<std::string>> levels(top + 1);
  for (int n = 0; n <= top; ++n)
    for (std::size_t a = 0; a < x.size(n); ++a)
      for (std::size_t b = 0; b < y.size(n); ++b) levels[n].push_back("(" + x.name(n, a) + "," + y.name(n, b) + ")");
  auto idx = [&](int n, std::size_t a, std::size_t b) { return a * y.size(n) + b; };
  MapTables faces(top + 1), degs(top);
  for (int n = 1; n <= top; ++n) {
    faces[n].assign(n + 1, std::vector<std::size_t>(levels[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t a = 0; a < x.size(n); ++a)
        for (std::size_t b = 0; b < y.size(n); ++b)
          faces[n][i][idx(n, a, b)] = idx(n - 1, x.face(n, i, a), y.face(n, i, b));
  }
  for (int n = 0; n < top; ++n) {
    degs[n].assign(n + 1, std::vector<std::size_t>(levels[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t a = 0; a < x.size(n); ++a)
        for (std::size_t b = 0; b < y.size(n); ++b)
          degs[n][i][idx(n, a, b)] = idx(n + 1, x.degeneracy(n, i, a), y.degeneracy(n, i, b));
  }
  std::optional<std::string> bp;
  if (x.pointed() && y.pointed()) bp = levels[0][idx(0, x.basepoint(0), y.basepoint(0))];
  std::optional<int> nd;
  if (x.nondegenerate_dim() && y.nondegenerate_dim()) nd = *x.nondegenerate_dim() + *y.nondegenerate_dim();
  return SimplicialFiniteSet(std::move(levels), std::move(faces), std::move(degs), bp, nd);
}

SimplicialFiniteSet torus(int d, int max_level) {
  if (d < 1) throw Error(ErrorKind::InvalidParams, "torus dimension must be positive");
  SimplicialFiniteSet out = circle(max_level);
  for (int k = 1; k < d; ++k) out = product(out, circle(max_level));
  return out;
}

std::vector<std::size_t> nondegenerate(const SimplicialFiniteSet& x, int n) {
  std::vector<bool> hit(x.size(n), false);
  if (n > 0)
    for (int i = 0; i < n; ++i)
      for (std::size_t s = 0; s < x.size(n - 1); ++s) hit[x.degeneracy(n - 1, i, s)] = true;
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < hit.size(); ++s)
    if (!hit[s]) out.push_back(s);
  return out;
}

}  // namespace thhmay
