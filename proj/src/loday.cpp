#include "thhmay/loday.hpp"

#include <algorithm>
#include <unordered_map>

namespace thhmay {

namespace {

struct FactorsHash {
  std::size_t operator()(const TensorFactors& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : f) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Face map d_i from level h to level h-1, in the form the differential
// needs: which factors multiply together, and which pairs cross when they
// are regrouped.
struct FaceData {
  std::vector<std::vector<std::size_t>> groups;  // per target simplex, source positions in order
  std::vector<std::pair<std::size_t, std::size_t>> crossings;
};

}  // namespace

class LodayBuilder {
 public:
  LodayBuilder(const SimplicialFiniteSet& x, const FilteredAlgebra& a, const FilteredBimodule* m, LodayOptions opt)
      : x_(x), a_(a), m_(m), opt_(opt) {}

  LodayComplex run();

 private:
  bool at_module(int h, std::size_t pos) const { return m_ && pos == x_.basepoint(h); }
  int degree(int h, std::size_t pos, std::size_t f) const {
    return at_module(h, pos) ? m_->degree(f) : a_.algebra().degree(f);
  }
  int weight(int h, std::size_t pos, std::size_t f) const { return at_module(h, pos) ? m_->weight(f) : a_.weight(f); }
  std::size_t factor_count(int h, std::size_t pos) const { return at_module(h, pos) ? m_->size() : a_.size(); }
  bool degenerate(int h, const TensorFactors& f) const;
  void enumerate(int h);
  FaceData face_data(int h, int i) const;
  SparseVector group_product(int h, const std::vector<std::size_t>& group, const TensorFactors& f, bool& module_valued) const;
  void differentials(int h);

  const SimplicialFiniteSet& x_;
  const FilteredAlgebra& a_;
  const FilteredBimodule* m_;
  LodayOptions opt_;
  // image_[h][i][pos]: pos at level h lies in the image of s_i from level h-1.
  std::vector<std::vector<std::vector<bool>>> image_;
  std::vector<std::map<int, std::vector<TensorFactors>>> levels_;
  std::vector<std::map<int, std::unordered_map<TensorFactors, std::size_t, FactorsHash>>> lookup_;
  std::vector<std::map<int, SparseMatrix>> diffs_;
};

bool LodayBuilder::degenerate(int h, const TensorFactors& f) const {
  if (!opt_.normalized || h == 0) return false;
  const auto unit = a_.algebra().unit();
  for (int i = 0; i < h; ++i) {
    bool inside = true;
    for (std::size_t pos = 0; pos < f.size() && inside; ++pos)
      if (!at_module(h, pos) && f[pos] != unit && !image_[h][i][pos]) inside = false;
    if (inside) return true;
  }
  return false;
}

void LodayBuilder::enumerate(int h) {
  const std::size_t n = x_.size(h);
  TensorFactors cur(n, 0);
  auto& out = levels_[h];
  auto rec = [&](auto&& self, std::size_t pos, int deg) -> void {
    if (pos == n) {
      if (!degenerate(h, cur)) out[deg].push_back(cur);
      return;
    }
    for (std::size_t f = 0; f < factor_count(h, pos); ++f) {
      int d = deg + degree(h, pos, f);
      if (d > opt_.max_internal) continue;
      cur[pos] = static_cast<std::uint16_t>(f);
      self(self, pos + 1, d);
    }
  };
  rec(rec, 0, 0);
  for (auto& [t, list] : out) {
    auto& lk = lookup_[h][t];
    for (std::size_t k = 0; k < list.size(); ++k) lk.emplace(list[k], k);
  }
}

FaceData LodayBuilder::face_data(int h, int i) const {
  FaceData fd;
  const std::size_t n = x_.size(h);
  fd.groups.resize(x_.size(h - 1));
  for (std::size_t pos = 0; pos < n; ++pos) fd.groups[x_.face(h, i, pos)].push_back(pos);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (x_.face(h, i, p) > x_.face(h, i, q)) fd.crossings.emplace_back(p, q);
  return fd;
}

SparseVector LodayBuilder::group_product(int h, const std::vector<std::size_t>& group, const TensorFactors& f,
                                         bool& module_valued) const {
  const auto& alg = a_.algebra();
  const auto& field = alg.field();
  module_valued = false;
  if (group.empty()) return {{alg.unit(), 1}};
  SparseVector cur{{f[group[0]], 1}};
  module_valued = at_module(h, group[0]);
  for (std::size_t k = 1; k < group.size() && !cur.empty(); ++k) {
    std::size_t pos = group[k];
    std::size_t g = f[pos];
    std::vector<Entry> raw;
    if (at_module(h, pos)) {
      for (const auto& e : cur)
        for (const auto& r : m_->left_action(e.index, g)) raw.push_back({r.index, field.mul(e.value, r.value)});
      module_valued = true;
    } else if (module_valued) {
      for (const auto& e : cur)
        for (const auto& r : m_->right_action(e.index, g)) raw.push_back({r.index, field.mul(e.value, r.value)});
    } else {
      for (const auto& e : cur)
        for (const auto& r : alg.product(e.index, g)) raw.push_back({r.index, field.mul(e.value, r.value)});
    }
    cur = canonicalize(field, std::move(raw));
  }
  return cur;
}

void LodayBuilder::differentials(int h) {
  const auto& field = a_.field();
  std::vector<FaceData> faces;
  for (int i = 0; i <= h; ++i) faces.push_back(face_data(h, i));
  const std::size_t targets = x_.size(h - 1);
  for (const auto& [t, list] : levels_[h]) {
    auto lk_it = lookup_[h - 1].find(t);
    const std::size_t rows = lk_it == lookup_[h - 1].end() ? 0 : levels_[h - 1].at(t).size();
    SparseMatrix d(field, rows, list.size());
    std::vector<SparseVector> products(targets);
    for (std::size_t col = 0; col < list.size(); ++col) {
      const auto& f = list[col];
      std::vector<Entry> raw;
      for (int i = 0; i <= h; ++i) {
        const auto& fd = faces[i];
        int parity = i;
        for (auto [p, q] : fd.crossings) parity += degree(h, p, f[p]) * degree(h, q, f[q]);
        bool zero = false;
        for (std::size_t y = 0; y < targets && !zero; ++y) {
          bool mod = false;
          products[y] = group_product(h, fd.groups[y], f, mod);
          zero = products[y].empty();
        }
        if (zero) continue;
        // Expand the tensor product of the per-target products.
        TensorFactors out(targets);
        auto expand = [&](auto&& self, std::size_t y, Residue c) -> void {
          if (y == targets) {
            auto it = lk_it->second.find(out);
            if (it != lk_it->second.end()) {
              raw.push_back({it->second, c});
            } else if (!degenerate(h - 1, out)) {
              throw Error(ErrorKind::Validation, "face of a basis tensor left the complex");
            }
            return;
          }
          for (const auto& e : products[y]) {
            out[y] = static_cast<std::uint16_t>(e.index);
            self(self, y + 1, field.mul(c, e.value));
          }
        };
        if (rows == 0) {
          // Target block empty: every face must be degenerate or zero.
          continue;
        }
        expand(expand, 0, field.sign(parity));
      }
      d.set_col(col, canonicalize(field, std::move(raw)));
    }
    diffs_[h].insert_or_assign(t, std::move(d));
  }
}

LodayComplex LodayBuilder::run() {
  const int top = x_.max_level();
  if (top < 2) throw Error(ErrorKind::CutoffTooSmall, "simplicial cutoff must be at least 2");
  if (opt_.max_internal < 0) throw Error(ErrorKind::InvalidParams, "internal cutoff must be nonnegative");
  if (m_ && !x_.pointed()) throw Error(ErrorKind::Validation, "coefficients need a pointed simplicial set");
  if (m_ && !(m_->base() == a_)) throw Error(ErrorKind::Validation, "bimodule is not over the given filtered algebra");
  if (a_.size() > 65535 || (m_ && m_->size() > 65535)) throw Error(ErrorKind::InvalidParams, "basis too large");

  image_.resize(top + 1);
  for (int h = 1; h <= top; ++h) {
    image_[h].assign(h, std::vector<bool>(x_.size(h), false));
    for (int i = 0; i < h; ++i)
      for (std::size_t s = 0; s < x_.size(h - 1); ++s) image_[h][i][x_.degeneracy(h - 1, i, s)] = true;
  }
  levels_.resize(top + 1);
  lookup_.resize(top + 1);
  diffs_.resize(top + 1);
  for (int h = 0; h <= top; ++h) enumerate(h);
  for (int h = 1; h <= top; ++h) differentials(h);

  LodayComplex c(a_.field());
  for (int h = 0; h <= top; ++h)
    for (auto& [t, list] : levels_[h]) {
      ComplexBlock b{{}, SparseMatrix(a_.field(), 0, list.size())};
      for (const auto& f : list) {
        int w = 0;
        for (std::size_t pos = 0; pos < f.size(); ++pos) w += weight(h, pos, f[pos]);
        b.weights.push_back(w);
      }
      if (h > 0) b.differential = std::move(diffs_[h].at(t));
      c.complex_.set_block(h, t, std::move(b));
      c.tensors_.emplace(Bidegree{h, t}, std::move(list));
    }

  Validity v;
  v.max_level = top;
  v.max_internal = opt_.max_internal;
  v.truncation = a_.algebra().truncation();
  if (opt_.normalized) {
    auto conn = a_.algebra().augmentation_connectivity();
    if (!conn)
      v.zero_above_level_zero = true;
    else
      v.connectivity = *conn;
    v.nondegenerate_dim = x_.nondegenerate_dim();
  }
  c.validity_ = v;
  c.algebra_ = std::make_shared<const FilteredAlgebra>(a_);
  if (m_) c.module_ = std::make_shared<const FilteredBimodule>(*m_);
  c.space_ = std::make_shared<const SimplicialFiniteSet>(x_);
  c.normalized_ = opt_.normalized;
  return c;
}

// ---------------------------------------------------------------------------

const std::vector<TensorFactors>& LodayComplex::tensors(int h, int t) const {
  static const std::vector<TensorFactors> empty;
  auto it = tensors_.find({h, t});
  return it == tensors_.end() ? empty : it->second;
}

std::string LodayComplex::label(int h, int t, std::size_t k) const {
  const auto& f = tensors(h, t).at(k);
  std::string s;
  for (std::size_t pos = 0; pos < f.size(); ++pos) {
    if (pos) s += '|';
    if (module_ && pos == space_->basepoint(h))
      s += module_->name(f[pos]);
    else
      s += algebra_->algebra().name(f[pos]);
  }
  return s;
}

LodayComplex build(const SimplicialFiniteSet& x, const FilteredAlgebra& a, LodayOptions options) {
  return LodayBuilder(x, a, nullptr, options).run();
}

LodayComplex build_with_coefficients(const SimplicialFiniteSet& y, const FilteredAlgebra& a, const FilteredBimodule& m,
                                     LodayOptions options) {
  return LodayBuilder(y, a, &m, options).run();
}

HomologyTable homology(const LodayComplex& c) { return homology(c.complex(), c.validity()); }

}  // namespace thhmay
