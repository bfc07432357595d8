#pragma once

// Exact sparse linear algebra over a prime field F_p.
//
// Vectors are sorted lists of (index, residue) pairs with residues in
// [1, p-1]. Matrices are stored column-major: column j is the image of the
// j-th source basis vector, which is how every differential in this library
// is produced. Elimination pivots on the lowest index first, so all echelon
// bases are reproducible.

#include <cstddef>
#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "thhmay/error.hpp"

namespace thhmay {

using Residue = std::uint32_t;

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }
  Residue inv(Residue a) const;
  // (-1)^e as a residue.
  Residue sign(int e) const noexcept { return (e & 1) ? p_ - 1 : 1 % p_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

struct Entry {
  std::size_t index;
  Residue value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

using SparseVector = std::vector<Entry>;

// y += c * x, both sorted; entries that cancel are dropped.
void axpy(const PrimeField& f, Residue c, const SparseVector& x, SparseVector& y);
SparseVector scaled(const PrimeField& f, Residue c, const SparseVector& x);
// Sorts and merges an unsorted list of (index, value) contributions.
SparseVector canonicalize(const PrimeField& f, std::vector<Entry> raw);

class SparseMatrix {
 public:
  SparseMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  // Entries may repeat; duplicates are summed and zeros dropped.
  static SparseMatrix from_triplets(PrimeField field, std::size_t rows, std::size_t cols,
                                    std::span<const std::tuple<std::size_t, std::size_t, std::int64_t>> entries);
  static SparseMatrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_.size(); }
  const SparseVector& col(std::size_t j) const { return cols_[j]; }
  void set_col(std::size_t j, SparseVector v);
  Residue at(std::size_t i, std::size_t j) const;
  std::size_t nonzeros() const;
  bool is_zero() const;

  std::vector<std::tuple<std::size_t, std::size_t, Residue>> triplets() const;

  SparseVector apply(const SparseVector& v) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::vector<SparseVector> cols_;
};

// this * rhs
SparseMatrix multiply(const SparseMatrix& lhs, const SparseMatrix& rhs);

// A subspace of F_p^ambient stored by its reduced row-echelon basis, which
// is a canonical representative: equal subspaces have identical bases.
class Subspace {
 public:
  Subspace(PrimeField field, std::size_t ambient);
  Subspace(PrimeField field, std::size_t ambient, std::span<const SparseVector> generators);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<SparseVector>& basis() const noexcept { return basis_; }
  std::vector<std::size_t> pivots() const;

  bool contains(const SparseVector& v) const;
  // Residue of v after eliminating every pivot coordinate.
  SparseVector reduce(SparseVector v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<SparseVector> basis_;         // sorted by pivot
  std::vector<std::ptrdiff_t> pivot_slot_;  // pivot column -> basis position, -1 if none
};

// Incremental echelon form: vectors with distinct leading indices, leading
// coefficient 1. Used as the workhorse behind rank, kernel and subspace sums.
class EchelonBuilder {
 public:
  EchelonBuilder(PrimeField field, std::size_t ambient);

  // Returns true if v was independent of what was inserted before.
  bool insert(SparseVector v);
  SparseVector reduce_leading(SparseVector v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  std::vector<SparseVector> take_rows() && { return std::move(rows_); }

 private:
  PrimeField field_;
  std::vector<SparseVector> rows_;
  std::vector<std::ptrdiff_t> slot_;
};

std::size_t rank(const SparseMatrix& m);
Subspace kernel(const SparseMatrix& m);
Subspace image(const SparseMatrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
bool is_subspace_of(const Subspace& sub, const Subspace& sup);
// dim(sup) - dim(sub); throws NotASubspace if sub is not contained in sup.
std::size_t quotient_dim(const Subspace& sub, const Subspace& sup);

// Coordinates of vectors modulo a subspace, relative to a fixed complement
// basis. Built from (denominator, numerator) with denominator inside
// numerator; the complement basis spans numerator / denominator.
class QuotientBasis {
 public:
  QuotientBasis(const Subspace& denominator, const Subspace& numerator);

  std::size_t dim() const noexcept { return complement_.size(); }
  const std::vector<SparseVector>& representatives() const noexcept { return complement_; }
  // Coordinates of v (which must lie in the numerator) in the complement basis.
  SparseVector coordinates(const SparseVector& v) const;

 private:
  PrimeField field_;
  std::vector<SparseVector> rows_;         // echelon rows of denominator + complement
  std::vector<std::ptrdiff_t> tag_;        // -1 for denominator rows, else complement slot
  std::vector<std::ptrdiff_t> slot_;       // pivot column -> row
  std::vector<SparseVector> complement_;
};

}  // namespace thhmay
