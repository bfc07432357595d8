#include "thhmay/mayfilt.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace thhmay {

std::size_t FilteredChainComplex::graded_dim(int h, int t, int n) const {
  const auto* b = complex().block(h, t);
  if (!b) return 0;
  return static_cast<std::size_t>(std::count(b->weights.begin(), b->weights.end(), n));
}

FilteredChainComplex filter(LodayComplex c) {
  FilteredChainComplex fc(std::move(c));
  const auto& cx = fc.complex();
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& [key, b] : cx.blocks()) {
    for (int w : b.weights) {
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
    const auto* target = cx.block(key.first - 1, key.second);
    for (std::size_t j = 0; j < b.weights.size(); ++j)
      for (const auto& e : b.differential.col(j))
        if (target->weights[e.index] < b.weights[j])
          throw Error(ErrorKind::Validation, "differential lowers May weight");
  }
  if (lo > hi) lo = hi = 0;
  fc.min_weight_ = lo;
  fc.max_weight_ = hi;
  return fc;
}

namespace {

std::vector<std::size_t> with_weight(const std::vector<int>& weights, int w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == w) out.push_back(i);
  return out;
}

// Block of d between the given source columns and target rows, as triplets in
// local coordinates. Entries outside the rows are returned in `outside`.
std::vector<std::tuple<std::size_t, std::size_t, Residue>> sub_block(const SparseMatrix& d,
                                                                      const std::vector<std::size_t>& rows,
                                                                      const std::vector<std::size_t>& cols,
                                                                      bool& outside) {
  std::vector<std::ptrdiff_t> pos(d.rows(), -1);
  for (std::size_t k = 0; k < rows.size(); ++k) pos[rows[k]] = static_cast<std::ptrdiff_t>(k);
  std::vector<std::tuple<std::size_t, std::size_t, Residue>> out;
  outside = false;
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (const auto& e : d.col(cols[k])) {
      if (pos[e.index] < 0)
        outside = true;
      else
        out.emplace_back(static_cast<std::size_t>(pos[e.index]), k, e.value);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FundamentalReport check_fundamental(const FilteredChainComplex& fc) {
  const auto& lc = fc.loday();
  auto gr_alg = associated_graded(lc.algebra());
  LodayComplex gr = lc.module() ? build_with_coefficients(lc.space(), gr_alg, associated_graded_bimodule(*lc.module()),
                                                          lc.options())
                                : build(lc.space(), gr_alg, lc.options());
  FundamentalReport rep;
  auto fail = [&](const FundamentalEntry& e, const std::string& why) {
    if (rep.pass)
      rep.first_failure = "(h,t,n)=(" + std::to_string(e.h) + "," + std::to_string(e.t) + "," + std::to_string(e.n) +
                          "): " + why;
    rep.pass = false;
  };

  std::set<Bidegree> keys;
  for (const auto& [k, b] : lc.complex().blocks()) keys.insert(k);
  for (const auto& [k, b] : gr.complex().blocks()) keys.insert(k);
  for (auto [h, t] : keys) {
    const auto* a = lc.complex().block(h, t);
    const auto* g = gr.complex().block(h, t);
    std::set<int> ws;
    if (a) ws.insert(a->weights.begin(), a->weights.end());
    if (g) ws.insert(g->weights.begin(), g->weights.end());
    // Same tensors in the same order is what identifies the two bases.
    bool same_basis = a && g && lc.tensors(h, t) == gr.tensors(h, t) && a->weights == g->weights;
    for (int n : ws) {
      FundamentalEntry e{h, t, n, false, false};
      std::size_t da = a ? with_weight(a->weights, n).size() : 0;
      std::size_t dg = g ? with_weight(g->weights, n).size() : 0;
      e.dims_equal = da == dg;
      if (!same_basis) {
        rep.entries.push_back(e);
        fail(e, "basis tensors differ");
        continue;
      }
      const auto* ta = lc.complex().block(h - 1, t);
      const auto* tg = gr.complex().block(h - 1, t);
      auto cols = with_weight(a->weights, n);
      std::vector<std::size_t> rows_a = ta ? with_weight(ta->weights, n) : std::vector<std::size_t>{};
      std::vector<std::size_t> rows_g = tg ? with_weight(tg->weights, n) : std::vector<std::size_t>{};
      bool out_a = false, out_g = false;
      auto ma = sub_block(a->differential, rows_a, cols, out_a);
      auto mg = sub_block(g->differential, rows_g, cols, out_g);
      // Entries of d_A leaving weight n land in F_{n+1} and die in the
      // quotient; the graded side must have none.
      e.differential_equal = rows_a == rows_g && ma == mg && !out_g;
      rep.entries.push_back(e);
      if (!e.dims_equal)
        fail(e, "graded piece dimensions differ");
      else if (!e.differential_equal)
        fail(e, out_g ? "graded differential mixes weights" : "induced differentials differ");
    }
  }
  return rep;
}

std::uint64_t weight_component_count(std::uint64_t s_size, std::uint64_t n) {
  auto overflow = [] { throw Error(ErrorKind::InvalidParams, "summand count does not fit in 64 bits"); };
  if (s_size == 0) return n == 0 ? 1 : 0;
  if (s_size * n <= 1000000) {
    // Count vectors in N^s with |x| = n: ways[j] = number of prefixes summing to j.
    std::vector<std::uint64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (std::uint64_t s = 1; s < s_size; ++s)
      for (std::uint64_t j = 1; j <= n; ++j)
        if (__builtin_add_overflow(ways[j], ways[j - 1], &ways[j])) overflow();
    std::uint64_t total = 0;
    for (auto w : ways)  // last coordinate absorbs the rest
      if (__builtin_add_overflow(total, w, &total)) overflow();
    return total;
  }
  // C(n + s - 1, s - 1), multiplicative form.
  std::uint64_t k = std::min(s_size - 1, n);
  unsigned __int128 r = 1;
  // partial products C(n+s-1-k+i, i) increase with i, so one bound check suffices per step
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n + s_size - 1 - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) overflow();
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace thhmay
