#include "thhmay/algebra.hpp"

#include <algorithm>
#include <set>

namespace thhmay {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

void check_names(const std::vector<BasisElement>& basis, const char* what) {
  std::set<std::string> seen;
  for (const auto& b : basis) {
    if (b.name.empty()) fail(ErrorKind::Validation, std::string(what) + " basis element with empty name");
    if (!seen.insert(b.name).second) fail(ErrorKind::Validation, std::string(what) + " basis name repeated: " + b.name);
    if (b.degree < 0) fail(ErrorKind::Validation, std::string(what) + " basis element " + b.name + " has negative degree");
  }
}

void check_vector(const SparseVector& v, std::size_t n, const PrimeField& f) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].index >= n) fail(ErrorKind::Validation, "structure constant refers to missing basis element");
    if (v[k].value == 0 || v[k].value >= f.p()) fail(ErrorKind::Validation, "structure constant not reduced mod p");
    if (k > 0 && v[k - 1].index >= v[k].index) fail(ErrorKind::Validation, "structure constants not sorted");
  }
}

SparseVector unit_vector(std::size_t i) { return {{i, 1}}; }

}  // namespace

// ---------------------------------------------------------------------------

GradedAlgebra::GradedAlgebra(PrimeField field, std::vector<BasisElement> basis, std::size_t unit,
                             ProductTable products, std::optional<int> truncation)
    : field_(field), basis_(std::move(basis)), unit_(unit), products_(std::move(products)), truncation_(truncation) {
  const std::size_t n = basis_.size();
  check_names(basis_, "algebra");
  if (unit_ >= n) fail(ErrorKind::Validation, "unitality: unit index out of range");
  if (basis_[unit_].degree != 0) fail(ErrorKind::Validation, "unitality: unit must have degree 0");
  if (products_.size() != n) fail(ErrorKind::Validation, "product table has wrong size");
  for (const auto& row : products_)
    if (row.size() != n) fail(ErrorKind::Validation, "product table has wrong size");
  if (truncation_)
    for (const auto& b : basis_)
      if (b.degree > *truncation_) fail(ErrorKind::Validation, "basis element " + b.name + " above truncation degree");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = products_[i][j];
      check_vector(v, n, field_);
      for (const auto& e : v)
        if (basis_[e.index].degree != basis_[i].degree + basis_[j].degree)
          fail(ErrorKind::DegreeMismatch, "degree additivity fails for " + basis_[i].name + "*" + basis_[j].name);
    }
  for (std::size_t i = 0; i < n; ++i)
    if (products_[unit_][i] != unit_vector(i) || products_[i][unit_] != unit_vector(i))
      fail(ErrorKind::Validation, "unitality fails for " + basis_[i].name);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector twisted = scaled(field_, field_.sign(basis_[i].degree * basis_[j].degree), products_[j][i]);
      if (products_[i][j] != twisted)
        fail(ErrorKind::Validation, "graded commutativity fails for " + basis_[i].name + "," + basis_[j].name);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = multiply(products_[i][j], unit_vector(k));
        auto rhs = multiply(unit_vector(i), products_[j][k]);
        if (lhs != rhs)
          fail(ErrorKind::Validation,
               "associativity fails for (" + basis_[i].name + "," + basis_[j].name + "," + basis_[k].name + ")");
      }
}

std::optional<std::size_t> GradedAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

SparseVector GradedAlgebra::multiply(const SparseVector& a, const SparseVector& b) const {
  std::vector<Entry> raw;
  for (const auto& x : a)
    for (const auto& y : b) {
      Residue c = field_.mul(x.value, y.value);
      for (const auto& z : products_[x.index][y.index]) raw.push_back({z.index, field_.mul(c, z.value)});
    }
  return canonicalize(field_, std::move(raw));
}

std::optional<int> GradedAlgebra::augmentation_connectivity() const {
  std::optional<int> best;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (i != unit_ && (!best || basis_[i].degree < *best)) best = basis_[i].degree;
  return best;
}

// ---------------------------------------------------------------------------

FilteredAlgebra::FilteredAlgebra(GradedAlgebra algebra, std::vector<int> weights)
    : algebra_(std::move(algebra)), weights_(std::move(weights)) {
  const std::size_t n = algebra_.size();
  if (weights_.size() != n) fail(ErrorKind::Validation, "one weight per basis element required");
  for (std::size_t i = 0; i < n; ++i)
    if (weights_[i] < 0) fail(ErrorKind::Validation, "weights must be nonnegative");
  if (weights_[algebra_.unit()] != 0) fail(ErrorKind::Validation, "weight of the unit must be 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& e : algebra_.product(i, j))
        if (weights_[e.index] < weights_[i] + weights_[j])
          fail(ErrorKind::Validation, "weight multiplicativity fails for " + algebra_.name(i) + "*" + algebra_.name(j));
}

// ---------------------------------------------------------------------------

FilteredBimodule::FilteredBimodule(FilteredAlgebra base, std::vector<BasisElement> basis, std::vector<int> weights,
                                   ActionTable action)
    : base_(std::move(base)), basis_(std::move(basis)), weights_(std::move(weights)), action_(std::move(action)) {
  const auto& a = base_.algebra();
  const auto& f = a.field();
  const std::size_t na = a.size(), nm = basis_.size();
  check_names(basis_, "module");
  if (weights_.size() != nm) fail(ErrorKind::Validation, "one weight per module basis element required");
  if (std::any_of(weights_.begin(), weights_.end(), [](int w) { return w < 0; }))
    fail(ErrorKind::Validation, "module weights must be nonnegative");
  if (action_.size() != na) fail(ErrorKind::Validation, "action table has wrong size");
  for (const auto& row : action_)
    if (row.size() != nm) fail(ErrorKind::Validation, "action table has wrong size");
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nm; ++j) {
      const auto& v = action_[i][j];
      check_vector(v, nm, f);
      for (const auto& e : v) {
        if (basis_[e.index].degree != a.degree(i) + basis_[j].degree)
          fail(ErrorKind::DegreeMismatch, "action degree additivity fails for " + a.name(i) + "." + basis_[j].name);
        if (weights_[e.index] < base_.weight(i) + weights_[j])
          fail(ErrorKind::Validation, "action weight compatibility fails for " + a.name(i) + "." + basis_[j].name);
      }
    }
  for (std::size_t j = 0; j < nm; ++j)
    if (action_[a.unit()][j] != unit_vector(j)) fail(ErrorKind::Validation, "module unitality fails for " + basis_[j].name);
  auto act = [&](std::size_t i, const SparseVector& m) {
    std::vector<Entry> raw;
    for (const auto& e : m)
      for (const auto& r : action_[i][e.index]) raw.push_back({r.index, f.mul(e.value, r.value)});
    return canonicalize(f, std::move(raw));
  };
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t j = 0; j < nm; ++j) {
        std::vector<Entry> raw;
        for (const auto& e : a.product(i, k))
          for (const auto& r : action_[e.index][j]) raw.push_back({r.index, f.mul(e.value, r.value)});
        auto lhs = canonicalize(f, std::move(raw));
        auto rhs = act(i, action_[k][j]);
        if (lhs != rhs)
          fail(ErrorKind::Validation,
               "action associativity fails for (" + a.name(i) + "," + a.name(k) + "," + basis_[j].name + ")");
      }
}

SparseVector FilteredBimodule::right_action(std::size_t m, std::size_t a) const {
  const auto& f = base_.field();
  return scaled(f, f.sign(basis_[m].degree * base_.algebra().degree(a)), action_[a][m]);
}

std::optional<std::size_t> FilteredBimodule::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

FilteredAlgebra trivial_filtration(GradedAlgebra a) {
  std::vector<int> w(a.size(), 0);
  return FilteredAlgebra(std::move(a), std::move(w));
}

FilteredAlgebra whitehead_filtration(const GradedAlgebra& a) {
  std::vector<int> w;
  for (const auto& b : a.basis()) w.push_back(b.degree);
  return FilteredAlgebra(a, std::move(w));
}

FilteredAlgebra associated_graded(const FilteredAlgebra& fa) {
  const auto& a = fa.algebra();
  ProductTable prod = a.products();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      auto& v = prod[i][j];
      std::erase_if(v, [&](const Entry& e) { return fa.weight(e.index) != fa.weight(i) + fa.weight(j); });
    }
  GradedAlgebra gr(a.field(), a.basis(), a.unit(), std::move(prod), a.truncation());
  return FilteredAlgebra(std::move(gr), fa.weights());
}

FilteredBimodule associated_graded_bimodule(const FilteredBimodule& m) {
  const auto& base = m.base();
  ActionTable act = m.actions();
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      std::erase_if(act[i][j], [&](const Entry& e) { return m.weight(e.index) != base.weight(i) + m.weight(j); });
  return FilteredBimodule(associated_graded(base), m.basis(), m.weights(), std::move(act));
}

// ---------------------------------------------------------------------------

GradedAlgebra ground_field(std::uint32_t p) {
  return GradedAlgebra(PrimeField(p), {{"1", 0}}, 0, {{{{0, 1}}}});
}

GradedAlgebra truncated_polynomial(std::uint32_t p, int deg_x, int n) {
  PrimeField f(p);
  if (deg_x <= 0) fail(ErrorKind::InvalidParams, "generator degree must be positive");
  if (n < 2) fail(ErrorKind::InvalidParams, "truncation height must be at least 2");
  if (deg_x % 2 == 1 && p != 2 && n > 2)
    fail(ErrorKind::OddDegreeTruncation, "odd generator at odd p squares to zero; x^" + std::to_string(n) + " impossible");
  std::vector<BasisElement> basis;
  for (int k = 0; k < n; ++k)
    basis.push_back({k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)), k * deg_x});
  ProductTable prod(n, std::vector<SparseVector>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) prod[i][j] = {{static_cast<std::size_t>(i + j), 1}};
  return GradedAlgebra(f, std::move(basis), 0, std::move(prod));
}

GradedAlgebra exterior_algebra(std::uint32_t p, int deg_x) { return truncated_polynomial(p, deg_x, 2); }

GradedAlgebra polynomial_truncated_model(std::uint32_t p, int deg_x, int max_internal) {
  PrimeField f(p);
  if (deg_x <= 0 || deg_x % 2 != 0) fail(ErrorKind::InvalidParams, "polynomial generator degree must be positive and even");
  if (max_internal < 0) fail(ErrorKind::InvalidParams, "cutoff must be nonnegative");
  const int n = max_internal / deg_x + 1;
  std::vector<BasisElement> basis;
  for (int k = 0; k < n; ++k)
    basis.push_back({k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)), k * deg_x});
  ProductTable prod(n, std::vector<SparseVector>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) prod[i][j] = {{static_cast<std::size_t>(i + j), 1}};
  return GradedAlgebra(f, std::move(basis), 0, std::move(prod), max_internal);
}

namespace {

std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b) {
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}

}  // namespace

GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "tensor product of algebras over different fields");
  const auto& f = a.field();
  const std::size_t na = a.size(), nb = b.size();
  auto idx = [nb](std::size_t i, std::size_t j) { return i * nb + j; };
  std::vector<BasisElement> basis;
  std::set<std::string> names;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      std::string name;
      if (j == b.unit())
        name = a.name(i);
      else if (i == a.unit())
        name = b.name(j);
      else
        name = a.name(i) + "*" + b.name(j);
      if (!names.insert(name).second) name = "(" + a.name(i) + ")(x)(" + b.name(j) + ")";
      names.insert(name);
      basis.push_back({std::move(name), a.degree(i) + b.degree(j)});
    }
  ProductTable prod(na * nb, std::vector<SparseVector>(na * nb));
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          Residue s = f.sign(b.degree(j1) * a.degree(i2));
          std::vector<Entry> raw;
          for (const auto& x : a.product(i1, i2))
            for (const auto& y : b.product(j1, j2))
              raw.push_back({idx(x.index, y.index), f.mul(s, f.mul(x.value, y.value))});
          prod[idx(i1, j1)][idx(i2, j2)] = canonicalize(f, std::move(raw));
        }
  return GradedAlgebra(f, std::move(basis), idx(a.unit(), b.unit()), std::move(prod),
                       min_truncation(a.truncation(), b.truncation()));
}

GradedAlgebra square_zero_extension(const GradedAlgebra& a, const FilteredBimodule& m) {
  const auto& base = m.base().algebra();
  if (!(base.field() == a.field())) fail(ErrorKind::FieldMismatch, "module over a different field");
  if (base.basis() != a.basis() || base.products() != a.products())
    fail(ErrorKind::Validation, "module is not over the given algebra");
  const std::size_t na = a.size(), nm = m.size(), n = na + nm;
  std::vector<BasisElement> basis = a.basis();
  basis.insert(basis.end(), m.basis().begin(), m.basis().end());
  ProductTable prod(n, std::vector<SparseVector>(n));
  auto shift = [na](SparseVector v) {
    for (auto& e : v) e.index += na;
    return v;
  };
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) prod[i][j] = a.product(i, j);
    for (std::size_t j = 0; j < nm; ++j) {
      prod[i][na + j] = shift(m.left_action(i, j));
      prod[na + j][i] = shift(m.right_action(j, i));
    }
  }
  return GradedAlgebra(a.field(), std::move(basis), a.unit(), std::move(prod), a.truncation());
}

// ---------------------------------------------------------------------------

FilteredBimodule regular_bimodule(const FilteredAlgebra& a, int shift, int weight_shift) {
  const auto& alg = a.algebra();
  std::vector<BasisElement> basis;
  std::vector<int> weights;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    std::string name = shift == 0 ? alg.name(i) : "s" + std::to_string(shift) + "(" + alg.name(i) + ")";
    basis.push_back({std::move(name), alg.degree(i) + shift});
    weights.push_back(a.weight(i) + weight_shift);
  }
  return FilteredBimodule(a, std::move(basis), std::move(weights), alg.products());
}

FilteredBimodule submodule(const FilteredBimodule& m, std::span<const std::size_t> indices) {
  std::vector<std::ptrdiff_t> pos(m.size(), -1);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= m.size()) fail(ErrorKind::InvalidParams, "submodule index out of range");
    pos[indices[k]] = static_cast<std::ptrdiff_t>(k);
  }
  std::vector<BasisElement> basis;
  std::vector<int> weights;
  for (auto j : indices) {
    basis.push_back(m.basis()[j]);
    weights.push_back(m.weight(j));
  }
  const std::size_t na = m.base().size();
  ActionTable act(na, std::vector<SparseVector>(indices.size()));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < indices.size(); ++k)
      for (const auto& e : m.left_action(i, indices[k])) {
        if (pos[e.index] < 0) fail(ErrorKind::Validation, "submodule not closed under the action");
        act[i][k].push_back({static_cast<std::size_t>(pos[e.index]), e.value});
      }
  return FilteredBimodule(m.base(), std::move(basis), std::move(weights), std::move(act));
}

FilteredBimodule quotient_module(const FilteredBimodule& m, std::span<const std::size_t> indices) {
  // Closure check doubles as validation that the span is a submodule.
  (void)submodule(m, indices);
  std::vector<bool> dropped(m.size(), false);
  for (auto j : indices) dropped[j] = true;
  std::vector<std::ptrdiff_t> pos(m.size(), -1);
  std::vector<BasisElement> basis;
  std::vector<int> weights;
  for (std::size_t j = 0; j < m.size(); ++j)
    if (!dropped[j]) {
      pos[j] = static_cast<std::ptrdiff_t>(basis.size());
      basis.push_back(m.basis()[j]);
      weights.push_back(m.weight(j));
    }
  const std::size_t na = m.base().size();
  ActionTable act(na, std::vector<SparseVector>(basis.size()));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (dropped[j]) continue;
      for (const auto& e : m.left_action(i, j))
        if (!dropped[e.index]) act[i][static_cast<std::size_t>(pos[j])].push_back({static_cast<std::size_t>(pos[e.index]), e.value});
    }
  return FilteredBimodule(m.base(), std::move(basis), std::move(weights), std::move(act));
}

}  // namespace thhmay
