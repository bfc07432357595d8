#pragma once

// Spectral sequence of a chain complex filtered by a decreasing weight
// filtration F_w = span{basis with weight >= w}. Indices: n = total degree,
// w = weight, d^r : E^r_{n,w} -> E^r_{n-1,w+r}.

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "thhmay/exactlin.hpp"
#include "thhmay/loday.hpp"
#include "thhmay/mayfilt.hpp"

namespace thhmay {

// A chain complex by total degree, one weight per basis vector.
// d.at(n) maps C_n to C_{n-1}; missing entries are zero maps.
struct TotalComplex {
  PrimeField field;
  std::map<int, std::vector<int>> weights;
  std::map<int, SparseMatrix> d;

  std::size_t dim(int n) const;
};

// Sums the bigraded blocks of equal total degree h + t, ordered by h.
TotalComplex total_complex(const BigradedComplex& c);

using PageIndex = std::tuple<int, int, int>;  // (r, n, w)

struct SpectralSequencePages {
  int min_weight = 0;
  int max_weight = 0;
  // Pages 1..last_page are stored; E^infinity = E^last_page.
  int last_page = 1;
  std::map<PageIndex, std::size_t> dims;
  // rank of d^r leaving (n, w)
  std::map<PageIndex, std::size_t> ranks;
  std::map<PageIndex, SparseMatrix> differentials;
  std::map<std::pair<int, int>, std::size_t> e_infinity;
  std::map<std::pair<int, int>, int> r_stab;
  std::map<int, std::size_t> abutment;  // dim H_n
  bool page_turn_ok = true;
  bool d_squared_ok = true;

  std::size_t dim(int r, int n, int w) const;
  std::size_t rank(int r, int n, int w) const;
  std::size_t e_inf(int n, int w) const;
  std::size_t e_inf_total(int n) const;
  std::size_t page_total(int r, int n) const;
  // Some d^r with r >= 1 is nonzero.
  bool any_differential() const;
  std::vector<int> degrees() const;
};

struct PageOptions {
  // Weight spans above this raise UnboundedFiltration.
  int span_bound = 4096;
  // Only total degrees <= max_degree are computed and reported.
  std::optional<int> max_degree;
};

// r_max >= 1. Pages are always computed up to E^infinity; r_max is kept
// for callers that print a prefix.
SpectralSequencePages pages(const TotalComplex& c, int r_max, PageOptions options = {});
SpectralSequencePages pages(const FilteredChainComplex& fc, int r_max, PageOptions options = {});

struct UpperBoundEntry {
  int n = 0;
  std::size_t filtered = 0;  // dim H_n(X ⊗ A)
  std::size_t graded = 0;    // dim H_n(X ⊗ gr A)
  bool ok() const { return filtered <= graded; }
  std::size_t slack() const { return graded - filtered; }
};

struct UpperBoundReport {
  std::vector<UpperBoundEntry> entries;  // exact total degrees only
  bool pass = true;
  bool strict_somewhere = false;
};

UpperBoundReport upper_bound_check(const SimplicialFiniteSet& x, const FilteredAlgebra& a, LodayOptions options);

using E1Table = std::map<std::pair<int, int>, std::size_t>;  // (n, w) -> dim

// True iff no nonzero entry (n, w) has a nonzero entry at (n-1, w+r) for
// some r >= 1. With `sources`, only those entries are considered as sources
// of differentials (e.g. multiplicative generators when d^r is a derivation).
bool collapse_by_bidegree(const E1Table& e1, const std::optional<std::vector<std::pair<int, int>>>& sources = std::nullopt);

}  // namespace thhmay
