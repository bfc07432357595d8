#pragma once

// Simplicial finite sets stored extensionally: every level up to a cutoff is
// an ordered list of simplices, with face and degeneracy maps as index
// tables.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "thhmay/error.hpp"

namespace thhmay {

// faces[n][i][s]       : index at level n-1 of d_i(s), s at level n >= 1.
// degeneracies[n][i][s]: index at level n+1 of s_i(s), s at level n < max_level.
using MapTables = std::vector<std::vector<std::vector<std::size_t>>>;

class SimplicialFiniteSet {
 public:
  // Checks every simplicial identity that is defined below the cutoff, and
  // basepoint preservation when pointed. Throws IdentityViolation.
  // `nondegenerate_dim` is an optional promise that no nondegenerate simplex
  // exists above that dimension, including above the cutoff.
  SimplicialFiniteSet(std::vector<std::vector<std::string>> levels, MapTables faces, MapTables degeneracies,
                      std::optional<std::string> basepoint = std::nullopt,
                      std::optional<int> nondegenerate_dim = std::nullopt);

  int max_level() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  std::size_t size(int level) const { return levels_.at(level).size(); }
  const std::string& name(int level, std::size_t s) const { return levels_.at(level).at(s); }
  const std::vector<std::vector<std::string>>& levels() const noexcept { return levels_; }
  std::size_t face(int level, int i, std::size_t s) const { return faces_[level][i][s]; }
  std::size_t degeneracy(int level, int i, std::size_t s) const { return degeneracies_[level][i][s]; }
  const MapTables& faces() const noexcept { return faces_; }
  const MapTables& degeneracies() const noexcept { return degeneracies_; }

  bool pointed() const noexcept { return basepoint_.has_value(); }
  const std::optional<std::string>& basepoint_name() const noexcept { return basepoint_; }
  // Index of the (iterated degenerate) basepoint at the given level.
  std::size_t basepoint(int level) const { return basepoint_index_.at(level); }
  std::optional<int> nondegenerate_dim() const noexcept { return nondegenerate_dim_; }

  friend bool operator==(const SimplicialFiniteSet&, const SimplicialFiniteSet&) = default;

 private:
  std::vector<std::vector<std::string>> levels_;
  MapTables faces_;
  MapTables degeneracies_;
  std::optional<std::string> basepoint_;
  std::vector<std::size_t> basepoint_index_;
  std::optional<int> nondegenerate_dim_;
};

SimplicialFiniteSet point(int max_level);
// Δ[d]/∂Δ[d]; level n holds the basepoint followed by the surjections
// [n] -> [d], ordered lexicographically by their jump positions.
SimplicialFiniteSet sphere(int d, int max_level);
SimplicialFiniteSet circle(int max_level);
SimplicialFiniteSet product(const SimplicialFiniteSet& x, const SimplicialFiniteSet& y);
SimplicialFiniteSet torus(int d, int max_level);

// Simplices at level n outside the image of every degeneracy.
std::vector<std::size_t> nondegenerate(const SimplicialFiniteSet& x, int n);

}  // namespace thhmay
