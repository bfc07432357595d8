#pragma once

// The May filtration of a Loday complex: F_n is spanned by the basis tensors
// whose factor weights sum to at least n.

#include <cstdint>
#include <string>
#include <vector>

#include "thhmay/loday.hpp"

namespace thhmay {

class FilteredChainComplex {
 public:
  const LodayComplex& loday() const noexcept { return loday_; }
  const BigradedComplex& complex() const noexcept { return loday_.complex(); }
  int min_weight() const noexcept { return min_weight_; }
  int max_weight() const noexcept { return max_weight_; }
  // dim (F_n / F_{n+1}) at (h, t).
  std::size_t graded_dim(int h, int t, int n) const;

 private:
  friend FilteredChainComplex filter(LodayComplex c);
  explicit FilteredChainComplex(LodayComplex c) : loday_(std::move(c)) {}

  LodayComplex loday_;
  int min_weight_ = 0;
  int max_weight_ = 0;
};

// Throws Error(Validation) if some differential lowers weight; this cannot
// happen for complexes produced by build().
FilteredChainComplex filter(LodayComplex c);

struct FundamentalEntry {
  int h = 0;
  int t = 0;
  int n = 0;
  bool dims_equal = false;
  bool differential_equal = false;
  bool ok() const { return dims_equal && differential_equal; }
};

struct FundamentalReport {
  std::vector<FundamentalEntry> entries;
  bool pass = true;
  std::string first_failure;
};

// Compares each F_n/F_{n+1} with the weight-n part of the Loday complex of
// the associated graded algebra (and module), matrix for matrix.
FundamentalReport check_fundamental(const FilteredChainComplex& fc);

// Number of x in N^S with |x| = n. Throws InvalidParams past 2^64.
std::uint64_t weight_component_count(std::uint64_t s_size, std::uint64_t n);

}  // namespace thhmay
