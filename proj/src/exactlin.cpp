#include "thhmay/exactlin.hpp"

#include <algorithm>
#include <string>

namespace thhmay {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::NotASubspace: return "NotASubspace";
    case ErrorKind::OddDegreeTruncation: return "OddDegreeTruncation";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::CutoffMismatch: return "CutoffMismatch";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::UnboundedFiltration: return "UnboundedFiltration";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidParams, "modulus " + std::to_string(p) + " is not prime");
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorKind::InvalidParams, "inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

void axpy(const PrimeField& f, Residue c, const SparseVector& x, SparseVector& y) {
  if (c == 0 || x.empty()) return;
  SparseVector out;
  out.reserve(x.size() + y.size());
  auto xi = x.begin();
  auto yi = y.begin();
  while (xi != x.end() || yi != y.end()) {
    if (yi == y.end() || (xi != x.end() && xi->index < yi->index)) {
      out.push_back({xi->index, f.mul(c, xi->value)});
      ++xi;
    } else if (xi == x.end() || yi->index < xi->index) {
      out.push_back(*yi);
      ++yi;
    } else {
      Residue v = f.add(yi->value, f.mul(c, xi->value));
      if (v != 0) out.push_back({yi->index, v});
      ++xi;
      ++yi;
    }
  }
  y = std::move(out);
}

SparseVector scaled(const PrimeField& f, Residue c, const SparseVector& x) {
  SparseVector out;
  if (c == 0) return out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back({e.index, f.mul(c, e.value)});
  return out;
}

SparseVector canonicalize(const PrimeField& f, std::vector<Entry> raw) {
  std::sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector out;
  out.reserve(raw.size());
  for (const auto& e : raw) {
    Residue v = e.value % f.p();
    if (!out.empty() && out.back().index == e.index) {
      out.back().value = f.add(out.back().value, v);
      if (out.back().value == 0) out.pop_back();
    } else if (v != 0) {
      out.push_back({e.index, v});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SparseMatrix::SparseMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::from_triplets(
    PrimeField field, std::size_t rows, std::size_t cols,
    std::span<const std::tuple<std::size_t, std::size_t, std::int64_t>> entries) {
  SparseMatrix m(field, rows, cols);
  std::vector<std::vector<Entry>> raw(cols);
  for (const auto& [i, j, v] : entries) {
    if (i >= rows || j >= cols) throw Error(ErrorKind::InvalidParams, "matrix entry out of range");
    raw[j].push_back({i, field.reduce(v)});
  }
  for (std::size_t j = 0; j < cols; ++j) m.cols_[j] = canonicalize(field, std::move(raw[j]));
  return m;
}

SparseMatrix SparseMatrix::identity(PrimeField field, std::size_t n) {
  SparseMatrix m(field, n, n);
  for (std::size_t j = 0; j < n; ++j) m.cols_[j] = {{j, 1}};
  return m;
}

void SparseMatrix::set_col(std::size_t j, SparseVector v) {
  if (!v.empty() && v.back().index >= rows_) throw Error(ErrorKind::InvalidParams, "column entry out of range");
  cols_[j] = std::move(v);
}

Residue SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& c = cols_[j];
  auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, std::size_t k) { return e.index < k; });
  return (it != c.end() && it->index == i) ? it->value : 0;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const SparseVector& c) { return c.empty(); });
}

std::vector<std::tuple<std::size_t, std::size_t, Residue>> SparseMatrix::triplets() const {
  std::vector<std::tuple<std::size_t, std::size_t, Residue>> out;
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& e : cols_[j]) out.emplace_back(e.index, j, e.value);
  std::sort(out.begin(), out.end());
  return out;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  std::vector<Entry> raw;
  for (const auto& e : v)
    for (const auto& x : cols_.at(e.index)) raw.push_back({x.index, field_.mul(e.value, x.value)});
  return canonicalize(field_, std::move(raw));
}

SparseMatrix multiply(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (!(lhs.field() == rhs.field())) throw Error(ErrorKind::FieldMismatch, "matrix product over different fields");
  if (lhs.cols() != rhs.rows()) throw Error(ErrorKind::InvalidParams, "matrix shapes do not compose");
  SparseMatrix out(lhs.field(), lhs.rows(), rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) out.set_col(j, lhs.apply(rhs.col(j)));
  return out;
}

// ---------------------------------------------------------------------------

EchelonBuilder::EchelonBuilder(PrimeField field, std::size_t ambient) : field_(field), slot_(ambient, -1) {}

SparseVector EchelonBuilder::reduce_leading(SparseVector v) const {
  while (!v.empty()) {
    auto s = slot_[v.front().index];
    if (s < 0) break;
    axpy(field_, field_.neg(v.front().value), rows_[static_cast<std::size_t>(s)], v);
  }
  return v;
}

bool EchelonBuilder::insert(SparseVector v) {
  v = reduce_leading(std::move(v));
  if (v.empty()) return false;
  Residue lead = v.front().value;
  if (lead != 1) v = scaled(field_, field_.inv(lead), v);
  slot_[v.front().index] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(PrimeField field, std::size_t ambient) : field_(field), ambient_(ambient), pivot_slot_(ambient, -1) {}

Subspace::Subspace(PrimeField field, std::size_t ambient, std::span<const SparseVector> generators)
    : Subspace(field, ambient) {
  EchelonBuilder eb(field, ambient);
  for (const auto& g : generators) {
    if (!g.empty() && g.back().index >= ambient) throw Error(ErrorKind::InvalidParams, "generator outside ambient space");
    eb.insert(g);
  }
  basis_ = std::move(eb).take_rows();
  std::sort(basis_.begin(), basis_.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.front().index < b.front().index; });
  // Back-substitution to reduced form.
  for (std::size_t i = basis_.size(); i-- > 0;) {
    std::size_t piv = basis_[i].front().index;
    for (std::size_t k = 0; k < i; ++k) {
      auto& row = basis_[k];
      auto it = std::lower_bound(row.begin(), row.end(), piv, [](const Entry& e, std::size_t c) { return e.index < c; });
      if (it != row.end() && it->index == piv) axpy(field_, field_.neg(it->value), basis_[i], row);
    }
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) pivot_slot_[basis_[i].front().index] = static_cast<std::ptrdiff_t>(i);
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.front().index);
  return out;
}

SparseVector Subspace::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto s = pivot_slot_[v[pos].index];
    if (s < 0) {
      ++pos;
      continue;
    }
    axpy(field_, field_.neg(v[pos].value), basis_[static_cast<std::size_t>(s)], v);
  }
  return v;
}

bool Subspace::contains(const SparseVector& v) const {
  if (!v.empty() && v.back().index >= ambient_) return false;
  return reduce(v).empty();
}

std::size_t rank(const SparseMatrix& m) {
  EchelonBuilder eb(m.field(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) eb.insert(m.col(j));
  return eb.rank();
}

Subspace kernel(const SparseMatrix& m) {
  const auto& f = m.field();
  std::vector<SparseVector> stored, trackers;
  std::vector<std::ptrdiff_t> slot(m.rows(), -1);
  std::vector<SparseVector> kernel_gens;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVector v = m.col(j);
    SparseVector tr{{j, 1}};
    while (!v.empty()) {
      auto s = slot[v.front().index];
      if (s < 0) break;
      Residue c = f.neg(v.front().value);
      axpy(f, c, stored[static_cast<std::size_t>(s)], v);
      axpy(f, c, trackers[static_cast<std::size_t>(s)], tr);
    }
    if (v.empty()) {
      kernel_gens.push_back(std::move(tr));
      continue;
    }
    Residue inv = f.inv(v.front().value);
    slot[v.front().index] = static_cast<std::ptrdiff_t>(stored.size());
    stored.push_back(scaled(f, inv, v));
    trackers.push_back(scaled(f, inv, tr));
  }
  return Subspace(f, m.cols(), kernel_gens);
}

Subspace image(const SparseMatrix& m) {
  std::vector<SparseVector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace(m.field(), m.rows(), cols);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "subspace sum over different fields");
  if (a.ambient() != b.ambient()) throw Error(ErrorKind::InvalidParams, "subspace sum with different ambient spaces");
  std::vector<SparseVector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.field(), a.ambient(), gens);
}

bool is_subspace_of(const Subspace& sub, const Subspace& sup) {
  if (sub.ambient() != sup.ambient()) return false;
  return std::all_of(sub.basis().begin(), sub.basis().end(), [&](const SparseVector& v) { return sup.contains(v); });
}

std::size_t quotient_dim(const Subspace& sub, const Subspace& sup) {
  if (!is_subspace_of(sub, sup))
    throw Error(ErrorKind::NotASubspace, "quotient of a space by something it does not contain");
  return sup.dim() - sub.dim();
}

// ---------------------------------------------------------------------------

QuotientBasis::QuotientBasis(const Subspace& denominator, const Subspace& numerator)
    : field_(denominator.field()), slot_(denominator.ambient(), -1) {
  auto push = [&](SparseVector v, std::ptrdiff_t tag) {
    slot_[v.front().index] = static_cast<std::ptrdiff_t>(rows_.size());
    rows_.push_back(std::move(v));
    tag_.push_back(tag);
  };
  for (const auto& b : denominator.basis()) push(b, -1);
  for (const auto& b : numerator.basis()) {
    SparseVector v = b;
    while (!v.empty()) {
      auto s = slot_[v.front().index];
      if (s < 0) break;
      axpy(field_, field_.neg(v.front().value), rows_[static_cast<std::size_t>(s)], v);
    }
    if (v.empty()) continue;
    v = scaled(field_, field_.inv(v.front().value), v);
    complement_.push_back(v);
    push(std::move(v), static_cast<std::ptrdiff_t>(complement_.size() - 1));
  }
  if (denominator.dim() + complement_.size() != numerator.dim())
    throw Error(ErrorKind::NotASubspace, "quotient denominator not contained in numerator");
}

SparseVector QuotientBasis::coordinates(const SparseVector& vin) const {
  SparseVector v = vin;
  std::vector<Entry> coords;
  while (!v.empty()) {
    auto s = slot_[v.front().index];
    if (s < 0) throw Error(ErrorKind::NotASubspace, "vector outside the quotient numerator");
    Residue c = v.front().value;
    auto row = static_cast<std::size_t>(s);
    if (tag_[row] >= 0) coords.push_back({static_cast<std::size_t>(tag_[row]), c});
    axpy(field_, field_.neg(c), rows_[row], v);
  }
  return canonicalize(field_, std::move(coords));
}

}  // namespace thhmay
