#include "thhmay/apps.hpp"

#include <algorithm>

namespace thhmay {

PowerSeries::PowerSeries(int order, std::vector<std::int64_t> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 0) throw Error(ErrorKind::InvalidParams, "series order must be nonnegative");
  c_.resize(order + 1, 0);
}

PowerSeries PowerSeries::binomial(int order, int d) {
  PowerSeries s(order);
  if (d <= order) s.c_[d] += 1;
  return s;
}

PowerSeries PowerSeries::geometric(int order, int d) {
  if (d <= 0) throw Error(ErrorKind::InvalidParams, "geometric series needs positive degree");
  PowerSeries s(order, {});
  for (int k = 0; k <= order; k += d) s.c_[k] = 1;
  return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  PowerSeries s(std::min(order_, o.order_), {});
  for (int k = 0; k <= s.order_; ++k) s.c_[k] = c_[k] + o.c_[k];
  return s;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  PowerSeries s(std::min(order_, o.order_), {});
  for (int i = 0; i <= s.order_; ++i)
    if (c_[i])
      for (int j = 0; i + j <= s.order_; ++j) s.c_[i + j] += c_[i] * o.c_[j];
  return s;
}

SymbolicGradedDims::SymbolicGradedDims(std::vector<SymbolicGenerator> gens) : gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.degree <= 0) throw Error(ErrorKind::InvalidParams, "generator degrees must be positive");
}

PowerSeries SymbolicGradedDims::series(int order) const {
  PowerSeries s = PowerSeries::one(order);
  for (const auto& g : gens_)
    s = s * (g.kind == GeneratorKind::Exterior ? PowerSeries::binomial(order, g.degree)
                                               : PowerSeries::geometric(order, g.degree));
  return s;
}

std::int64_t SymbolicGradedDims::count_monomials(int n) const {
  std::int64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == gens_.size()) {
      if (left == 0) ++count;
      return;
    }
    int cap = gens_[i].kind == GeneratorKind::Exterior ? 1 : left / gens_[i].degree;
    for (int e = 0; e <= cap && e * gens_[i].degree <= left; ++e) self(self, i + 1, left - e * gens_[i].degree);
  };
  if (n >= 0) rec(rec, 0, n);
  return count;
}

std::vector<std::size_t> hh_exterior_expected(std::uint32_t p, int deg_x, int N) {
  if (!is_prime(p) || deg_x <= 0 || N < 0) throw Error(ErrorKind::InvalidParams, "need prime p, deg_x > 0, N >= 0");
  if (p != 2 && deg_x % 2 == 0)
    throw Error(ErrorKind::InvalidParams, "exterior formula needs odd degree at odd p");
  auto s = SymbolicGradedDims({{deg_x, GeneratorKind::Exterior}, {deg_x + 1, GeneratorKind::DividedPower}}).series(N);
  std::vector<std::size_t> out;
  for (auto c : s.coefficients()) out.push_back(static_cast<std::size_t>(c));
  return out;
}

std::map<Bidegree, std::size_t> hh_truncated_square_expected(std::uint32_t p, int deg_x, int N) {
  if (!is_prime(p) || p == 2 || deg_x <= 0 || deg_x % 2 != 0)
    throw Error(ErrorKind::InvalidParams, "truncated square formula needs odd p and positive even degree");
  std::map<Bidegree, std::size_t> out;
  auto put = [&](int h, int t) {
    if (h + t <= N) out[{h, t}] += 1;
  };
  put(0, 0);
  put(0, deg_x);
  for (int i = 1; 2 * i + 2 * deg_x * i + deg_x <= N; ++i) put(2 * i, 2 * deg_x * i + deg_x);
  for (int j = 0; 2 * j + 1 + 2 * deg_x * j + deg_x <= N; ++j) put(2 * j + 1, 2 * deg_x * j + deg_x);
  return out;
}

std::vector<std::size_t> hh_polynomial_expected(int deg_x, int N) {
  if (deg_x <= 0 || deg_x % 2 != 0) throw Error(ErrorKind::InvalidParams, "polynomial generator needs positive even degree");
  auto s = SymbolicGradedDims({{deg_x, GeneratorKind::Polynomial}, {deg_x + 1, GeneratorKind::Exterior}}).series(N);
  std::vector<std::size_t> out;
  for (auto c : s.coefficients()) out.push_back(static_cast<std::size_t>(c));
  return out;
}

SymbolicGradedDims poincare_generators(std::uint32_t p, int n) {
  if (!is_prime(p) || n <= 0) throw Error(ErrorKind::InvalidParams, "need prime p and n > 0");
  const int q = static_cast<int>(p);
  return SymbolicGradedDims({{2 * q - 1, GeneratorKind::Exterior},
                             {2 * n + 1, GeneratorKind::Exterior},
                             {2 * n, GeneratorKind::Polynomial},
                             {2 * q, GeneratorKind::Polynomial}});
}

PowerSeries poincare_bound(std::uint32_t p, int n, int N) { return poincare_generators(p, n).series(N); }

VanishingReport vanishing_degrees(std::uint32_t p, int n) {
  if (n <= 0) throw Error(ErrorKind::InvalidParams, "n must be positive");
  auto gens = poincare_generators(p, n);
  const int q = static_cast<int>(p);
  VanishingReport rep;
  rep.p = p;
  rep.n = n;
  rep.frobenius_degree = 2 * (q * n - q - n);
  rep.p_divides_n = n % q == 0;
  auto mod = [](int a, int m) { return ((a % m) + m) % m; };
  if (!rep.p_divides_n) {
    for (int i = 0; 2 * i <= rep.frobenius_degree; ++i)
      if (mod(i, n) == mod(-q, n) || mod(i, q) == mod(-n, q)) rep.degrees.push_back(2 * i);
    const int N = std::max(rep.frobenius_degree, 0);
    auto s = gens.series(N);
    for (int d : rep.degrees) {
      VanishingCertificate c{d, gens.count_monomials(d), s[d]};
      if (c.enumerated != 0 || c.series != 0) rep.consistent = false;
      rep.certificates.push_back(c);
    }
  } else {
    rep.allowed_residues = {2 * q - 1, 0, 1};
    rep.residue_checked_up_to = 4 * (2 * n + 2 * q);
    for (int d = 0; d <= rep.residue_checked_up_to; ++d) {
      auto c = gens.count_monomials(d);
      if (c != 0 && !rep.allowed_residues.count(d % (2 * q))) {
        rep.consistent = false;
        rep.certificates.push_back({d, c, gens.series(d)[d]});
      }
    }
  }
  return rep;
}

HHComparison verify_hh_against_expected(const HomologyTable& computed, const std::vector<std::size_t>& expected) {
  HHComparison cmp;
  for (int n : computed.valid_totals(static_cast<int>(expected.size()) - 1)) {
    DegreeCheck c{n, computed.total(n), expected[n]};
    if (!c.ok()) cmp.pass = false;
    cmp.totals.push_back(c);
  }
  return cmp;
}

std::vector<BigradedCheck> bigraded_mismatches(const HomologyTable& computed,
                                               const std::map<Bidegree, std::size_t>& expected, int h_max, int t_max) {
  std::vector<BigradedCheck> out;
  for (int h = 0; h <= h_max; ++h)
    for (int t = 0; t <= t_max; ++t) {
      auto it = expected.find({h, t});
      std::size_t e = it == expected.end() ? 0 : it->second;
      std::size_t c = computed.at(h, t);
      if (c != e) out.push_back({{h, t}, c, e});
    }
  return out;
}

SquareZeroE1 square_zero_e1(std::uint32_t p, int k, int N) {
  if (!is_prime(p) || k <= 0) throw Error(ErrorKind::InvalidParams, "need prime p and k > 0");
  const int q = static_cast<int>(p);
  const int dx = 2 * k;
  // HH(F_p[x]/x^2) classes as (total degree, weight); weight counts x's.
  std::vector<std::pair<int, int>> hh{{0, 0}, {dx, 1}};
  std::vector<std::pair<int, int>> xs, ys;
  for (int i = 1; 2 * i + dx * (2 * i + 1) <= N; ++i) xs.push_back({2 * i + dx * (2 * i + 1), 2 * i + 1});
  for (int j = 0; (2 * j + 1) * (dx + 1) <= N; ++j) ys.push_back({(2 * j + 1) * (dx + 1), 2 * j + 1});
  hh.insert(hh.end(), xs.begin(), xs.end());
  hh.insert(hh.end(), ys.begin(), ys.end());

  SquareZeroE1 out;
  for (int a = 0; a <= 1; ++a)
    for (int m = 0; a * (2 * q - 1) + m * 2 * q <= N; ++m)
      for (auto [n, w] : hh) {
        int deg = a * (2 * q - 1) + m * 2 * q + n;
        if (deg <= N) out.table[{deg, w}] += 1;
      }
  out.generators = {{2 * q - 1, 0}, {2 * q, 0}, {dx, 1}};
  out.generators.insert(out.generators.end(), xs.begin(), xs.end());
  out.generators.insert(out.generators.end(), ys.begin(), ys.end());
  std::erase_if(out.generators, [&](const auto& g) { return g.first > N; });
  return out;
}

}  // namespace thhmay
