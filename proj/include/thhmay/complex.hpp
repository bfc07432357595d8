#pragma once

// Bigraded chain complexes over F_p: blocks indexed by homological level h
// and internal degree t, with a differential C_{h,t} -> C_{h-1,t} and one
// integer weight per basis element. Total degree is n = h + t.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "thhmay/exactlin.hpp"

namespace thhmay {

using Bidegree = std::pair<int, int>;  // (h, t)

struct ComplexBlock {
  std::vector<int> weights;
  // Columns indexed by this block, rows by block (h-1, t). Empty 0-row
  // matrix at h = 0 or when the target block is absent.
  SparseMatrix differential;
};

// Which part of a (truncated) computed complex is known to agree with the
// untruncated object.
struct Validity {
  int max_level = 0;
  int max_internal = 0;
  std::optional<int> truncation;
  // Lower bound on internal degree at level h beyond the cutoff:
  // t >= connectivity * ceil(h / nondegenerate_dim). Unset means unknown.
  std::optional<int> connectivity;
  std::optional<int> nondegenerate_dim;
  bool zero_above_level_zero = false;

  int internal_limit() const { return truncation ? std::min(max_internal, *truncation) : max_internal; }
  int level_limit() const { return max_level - 2; }
  bool exact(int h, int t) const { return h >= 0 && t >= 0 && h <= level_limit() && t <= internal_limit(); }
  // True when the chain group at (h, t) is provably zero beyond the cutoff.
  bool known_zero(int h, int t) const;
  bool total_exact(int n) const;
};

class BigradedComplex {
 public:
  explicit BigradedComplex(PrimeField field) : field_(field) {}

  const PrimeField& field() const noexcept { return field_; }
  void set_block(int h, int t, ComplexBlock block);
  const ComplexBlock* block(int h, int t) const;
  std::size_t dim(int h, int t) const;
  const std::map<Bidegree, ComplexBlock>& blocks() const noexcept { return blocks_; }
  int max_level() const;

 private:
  PrimeField field_;
  std::map<Bidegree, ComplexBlock> blocks_;
};

class HomologyTable {
 public:
  HomologyTable() = default;
  HomologyTable(std::map<Bidegree, std::size_t> dims, Validity validity)
      : dims_(std::move(dims)), validity_(validity) {}

  std::size_t at(int h, int t) const;
  std::size_t total(int n) const;
  const std::map<Bidegree, std::size_t>& dims() const noexcept { return dims_; }
  const Validity& validity() const noexcept { return validity_; }
  // Total degrees 0..n_max that are exact.
  std::vector<int> valid_totals(int n_max) const;

 private:
  std::map<Bidegree, std::size_t> dims_;
  Validity validity_;
};

// dim ker d_{h,t} - rank d_{h+1,t} for every block present (validity is
// attached, not applied).
HomologyTable homology(const BigradedComplex& c, const Validity& validity);
// Per-weight homology of a complex whose differential preserves weight
// exactly. Keys are (h, t, w). Throws if the differential mixes weights.
std::map<std::tuple<int, int, int>, std::size_t> homology_by_weight(const BigradedComplex& c);
// d∘d == 0 on every composable pair of blocks.
bool d_squared_zero(const BigradedComplex& c);

}  // namespace thhmay
