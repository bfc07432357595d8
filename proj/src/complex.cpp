#include "thhmay/complex.hpp"

#include <algorithm>
#include <set>

namespace thhmay {

bool Validity::known_zero(int h, int t) const {
  if (h == 0 || t < 0) return t < 0;
  if (zero_above_level_zero) return true;
  if (!connectivity || !nondegenerate_dim || *connectivity <= 0) return false;
  if (*nondegenerate_dim == 0) return true;
  int cover = (h + *nondegenerate_dim - 1) / *nondegenerate_dim;
  return *connectivity * cover > t;
}

bool Validity::total_exact(int n) const {
  if (n < 0 || n > internal_limit()) return false;
  for (int h = 0; h <= n; ++h) {
    if (h <= level_limit()) continue;
    if (!known_zero(h, n - h)) return false;
  }
  return true;
}

void BigradedComplex::set_block(int h, int t, ComplexBlock block) {
  if (block.differential.cols() != block.weights.size())
    throw Error(ErrorKind::InvalidParams, "differential width does not match block size");
  blocks_.insert_or_assign({h, t}, std::move(block));
}

const ComplexBlock* BigradedComplex::block(int h, int t) const {
  auto it = blocks_.find({h, t});
  return it == blocks_.end() ? nullptr : &it->second;
}

std::size_t BigradedComplex::dim(int h, int t) const {
  const auto* b = block(h, t);
  return b ? b->weights.size() : 0;
}

int BigradedComplex::max_level() const {
  int m = -1;
  for (const auto& [k, v] : blocks_) m = std::max(m, k.first);
  return m;
}

std::size_t HomologyTable::at(int h, int t) const {
  auto it = dims_.find({h, t});
  return it == dims_.end() ? 0 : it->second;
}

std::size_t HomologyTable::total(int n) const {
  std::size_t s = 0;
  for (int h = 0; h <= n; ++h) s += at(h, n - h);
  return s;
}

std::vector<int> HomologyTable::valid_totals(int n_max) const {
  std::vector<int> out;
  for (int n = 0; n <= n_max; ++n)
    if (validity_.total_exact(n)) out.push_back(n);
  return out;
}

HomologyTable homology(const BigradedComplex& c, const Validity& validity) {
  std::map<Bidegree, std::size_t> ranks;
  for (const auto& [key, b] : c.blocks()) ranks[key] = rank(b.differential);
  std::map<Bidegree, std::size_t> dims;
  for (const auto& [key, b] : c.blocks()) {
    auto [h, t] = key;
    std::size_t out_rank = ranks[key];
    auto in = ranks.find({h + 1, t});
    std::size_t in_rank = in == ranks.end() ? 0 : in->second;
    dims[key] = b.weights.size() - out_rank - in_rank;
  }
  return HomologyTable(std::move(dims), validity);
}

namespace {

// Restriction of a block differential to source/target basis subsets.
SparseMatrix restrict(const SparseMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<std::ptrdiff_t> row_pos(m.rows(), -1);
  for (std::size_t k = 0; k < rows.size(); ++k) row_pos[rows[k]] = static_cast<std::ptrdiff_t>(k);
  SparseMatrix out(m.field(), rows.size(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    SparseVector v;
    for (const auto& e : m.col(cols[k]))
      if (row_pos[e.index] >= 0) v.push_back({static_cast<std::size_t>(row_pos[e.index]), e.value});
    out.set_col(k, std::move(v));
  }
  return out;
}

}  // namespace

std::map<std::tuple<int, int, int>, std::size_t> homology_by_weight(const BigradedComplex& c) {
  std::map<std::tuple<int, int, int>, std::size_t> ranks, out;
  auto indices_of = [](const std::vector<int>& weights, int w) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i] == w) idx.push_back(i);
    return idx;
  };
  for (const auto& [key, b] : c.blocks()) {
    auto [h, t] = key;
    const auto* target = c.block(h - 1, t);
    for (std::size_t j = 0; j < b.weights.size(); ++j)
      for (const auto& e : b.differential.col(j))
        if (!target || target->weights[e.index] != b.weights[j])
          throw Error(ErrorKind::Validation, "differential does not preserve weight");
    std::set<int> ws(b.weights.begin(), b.weights.end());
    for (int w : ws) {
      auto cols = indices_of(b.weights, w);
      std::size_t r = 0;
      if (target) r = rank(restrict(b.differential, indices_of(target->weights, w), cols));
      ranks[{h, t, w}] = r;
    }
  }
  for (const auto& [key, b] : c.blocks()) {
    auto [h, t] = key;
    std::set<int> ws(b.weights.begin(), b.weights.end());
    for (int w : ws) {
      std::size_t d = static_cast<std::size_t>(std::count(b.weights.begin(), b.weights.end(), w));
      auto in = ranks.find({h + 1, t, w});
      out[{h, t, w}] = d - ranks[{h, t, w}] - (in == ranks.end() ? 0 : in->second);
    }
  }
  return out;
}

bool d_squared_zero(const BigradedComplex& c) {
  for (const auto& [key, b] : c.blocks()) {
    auto [h, t] = key;
    const auto* below = c.block(h - 1, t);
    if (!below || below->differential.rows() == 0) continue;
    if (!multiply(below->differential, b.differential).is_zero()) return false;
  }
  return true;
}

}  // namespace thhmay
