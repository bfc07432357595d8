#include "thhmay/cli.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "thhmay/apps.hpp"
#include "thhmay/io.hpp"
#include "thhmay/mayfilt.hpp"
#include "thhmay/posetlab.hpp"
#include "thhmay/selftest.hpp"
#include "thhmay/specseq.hpp"

namespace thhmay::cli {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kValidationError = 2;

bool want_json(const RunConfig& c) { return c.format == "json"; }

void validate(const RunConfig& c) {
  if (c.format != "tsv" && c.format != "json") throw Error(ErrorKind::InvalidParams, "format must be tsv or json");
  if (c.max_level < 2) throw Error(ErrorKind::CutoffTooSmall, "max_level must be at least 2");
  if (c.max_internal < 0) throw Error(ErrorKind::InvalidParams, "max_internal must be nonnegative");
  if (c.r_max < 1) throw Error(ErrorKind::InvalidParams, "r_max must be at least 1");
}

SimplicialFiniteSet make_space(const RunConfig& c) {
  const std::string& s = c.space;
  auto dim_after = [&](std::string_view prefix) {
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(s.substr(prefix.size()), &used);
      if (used != s.size() - prefix.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidParams, "bad space dimension in '" + s + "'");
    }
    if (d < 1) throw Error(ErrorKind::InvalidParams, "space dimension must be at least 1");
    return d;
  };
  if (s == "circle") return circle(c.max_level);
  if (s == "point") return point(c.max_level);
  if (s.rfind("torus:", 0) == 0) return torus(dim_after("torus:"), c.max_level);
  if (s.rfind("sphere:", 0) == 0) return sphere(dim_after("sphere:"), c.max_level);
  if (!std::filesystem::exists(s)) throw Error(ErrorKind::InvalidParams, "unknown space '" + s + "'");
  return simplicial_from_json(read_json_file(s));
}

FilteredAlgebra load_algebra(const RunConfig& c) {
  if (!c.algebra) throw Error(ErrorKind::InvalidParams, "--algebra is required for " + c.command);
  return algebra_from_json(read_json_file(*c.algebra));
}

LodayComplex make_complex(const RunConfig& c) {
  auto a = load_algebra(c);
  auto x = make_space(c);
  LodayOptions opt{c.max_internal, true};
  if (c.module) return build_with_coefficients(x, a, module_from_json(a, read_json_file(*c.module)), opt);
  return build(x, a, opt);
}

std::vector<int> exact_totals(const Validity& v) { return HomologyTable({}, v).valid_totals(v.internal_limit() + v.max_level); }

json validity_json(const Validity& v) {
  return {{"max_level", v.max_level},
          {"max_internal", v.max_internal},
          {"exact_level", v.level_limit()},
          {"exact_internal", v.internal_limit()}};
}

void validity_tsv(std::ostream& out, const Validity& v) {
  out << "# exact: h <= " << v.level_limit() << ", t <= " << v.internal_limit() << " (max_level " << v.max_level
      << ", max_internal " << v.max_internal << ")\n";
}

int cmd_hh(const RunConfig& c, std::ostream& out) {
  auto lc = make_complex(c);
  auto h = homology(lc);
  const auto& v = h.validity();
  auto totals = exact_totals(v);
  if (want_json(c)) {
    json doc{{"command", "hh"}, {"validity", validity_json(v)}};
    json bi = json::array(), tot = json::array();
    for (const auto& [k, d] : h.dims())
      if (d && v.exact(k.first, k.second)) bi.push_back({{"h", k.first}, {"t", k.second}, {"dim", d}});
    for (int n : totals) tot.push_back({{"n", n}, {"dim", h.total(n)}});
    doc["bigraded"] = bi;
    doc["totals"] = tot;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  validity_tsv(out, v);
  out << "h\tt\tdim\n";
  for (const auto& [k, d] : h.dims())
    if (d && v.exact(k.first, k.second)) out << k.first << '\t' << k.second << '\t' << d << '\n';
  out << "# totals over exact degrees\nn\tdim\n";
  for (int n : totals) out << n << '\t' << h.total(n) << '\n';
  return kOk;
}

int cmd_gr(const RunConfig& c, std::ostream& out) {
  out << to_json(associated_graded(load_algebra(c))).dump(2) << "\n";
  return kOk;
}

int cmd_pages(const RunConfig& c, std::ostream& out) {
  auto lc = make_complex(c);
  const auto v = lc.validity();
  auto totals = exact_totals(v);
  if (totals.empty()) throw Error(ErrorKind::CutoffTooSmall, "no exact total degree for these cutoffs");
  auto fc = filter(std::move(lc));
  PageOptions opt;
  opt.max_degree = totals.back();
  auto ss = pages(fc, c.r_max, opt);
  const int shown = std::min(c.r_max, ss.last_page);
  auto exact = [&](int n) { return std::find(totals.begin(), totals.end(), n) != totals.end(); };
  if (want_json(c)) {
    json doc{{"command", "pages"}, {"validity", validity_json(v)}, {"pages_shown", shown}, {"last_page", ss.last_page}};
    json e = json::array(), d = json::array(), inf = json::array(), h = json::array();
    for (const auto& [k, dim] : ss.dims)
      if (std::get<0>(k) <= shown && exact(std::get<1>(k)))
        e.push_back({{"r", std::get<0>(k)}, {"n", std::get<1>(k)}, {"w", std::get<2>(k)}, {"dim", dim}});
    for (const auto& [k, rk] : ss.ranks)
      if (std::get<0>(k) <= shown && exact(std::get<1>(k)))
        d.push_back({{"r", std::get<0>(k)}, {"n", std::get<1>(k)}, {"w", std::get<2>(k)}, {"rank", rk}});
    for (const auto& [k, dim] : ss.e_infinity)
      if (exact(k.first)) inf.push_back({{"n", k.first}, {"w", k.second}, {"dim", dim}});
    for (int n : totals) h.push_back({{"n", n}, {"dim", ss.abutment.count(n) ? ss.abutment.at(n) : 0}});
    doc["E"] = e;
    doc["d"] = d;
    doc["E_infinity"] = inf;
    doc["H"] = h;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  validity_tsv(out, v);
  out << "# pages 1.." << shown << " of " << ss.last_page << "\nkind\tr\tn\tw\tvalue\n";
  for (const auto& [k, dim] : ss.dims)
    if (std::get<0>(k) <= shown && exact(std::get<1>(k)))
      out << "E\t" << std::get<0>(k) << '\t' << std::get<1>(k) << '\t' << std::get<2>(k) << '\t' << dim << '\n';
  for (const auto& [k, rk] : ss.ranks)
    if (std::get<0>(k) <= shown && exact(std::get<1>(k)))
      out << "d\t" << std::get<0>(k) << '\t' << std::get<1>(k) << '\t' << std::get<2>(k) << '\t' << rk << '\n';
  for (const auto& [k, dim] : ss.e_infinity)
    if (exact(k.first)) out << "Einf\tinf\t" << k.first << '\t' << k.second << '\t' << dim << '\n';
  for (int n : totals) out << "H\t-\t" << n << "\t-\t" << (ss.abutment.count(n) ? ss.abutment.at(n) : 0) << '\n';
  return kOk;
}

int cmd_check_fundamental(const RunConfig& c, std::ostream& out) {
  auto rep = check_fundamental(filter(make_complex(c)));
  if (want_json(c)) {
    json entries = json::array();
    for (const auto& e : rep.entries)
      entries.push_back({{"h", e.h}, {"t", e.t}, {"n", e.n}, {"dims_equal", e.dims_equal}, {"differential_equal", e.differential_equal}});
    json doc{{"command", "check-fundamental"}, {"pass", rep.pass}, {"entries", entries}};
    if (!rep.pass) doc["first_failure"] = rep.first_failure;
    out << doc.dump(2) << "\n";
  } else {
    out << "h\tt\tn\tdims_equal\tdifferential_equal\n";
    for (const auto& e : rep.entries)
      out << e.h << '\t' << e.t << '\t' << e.n << '\t' << e.dims_equal << '\t' << e.differential_equal << '\n';
    out << "result\t" << (rep.pass ? "pass" : "fail") << '\n';
    if (!rep.pass) out << "first_failure\t" << rep.first_failure << '\n';
  }
  return rep.pass ? kOk : kCheckFailed;
}

int cmd_bound(const RunConfig& c, std::ostream& out) {
  auto rep = upper_bound_check(make_space(c), load_algebra(c), {c.max_internal, true});
  if (want_json(c)) {
    json entries = json::array();
    for (const auto& e : rep.entries)
      entries.push_back({{"n", e.n}, {"filtered", e.filtered}, {"graded", e.graded}, {"ok", e.ok()}});
    out << json{{"command", "bound"}, {"pass", rep.pass}, {"strict_somewhere", rep.strict_somewhere}, {"entries", entries}}
               .dump(2)
        << "\n";
  } else {
    out << "n\tfiltered\tgraded\tslack\tok\n";
    for (const auto& e : rep.entries)
      out << e.n << '\t' << e.filtered << '\t' << e.graded << '\t'
          << (e.ok() ? std::to_string(e.slack()) : "-") << '\t' << e.ok() << '\n';
    out << "result\t" << (rep.pass ? "pass" : "fail") << '\n';
  }
  return rep.pass ? kOk : kCheckFailed;
}

int cmd_poincare(const RunConfig& c, std::ostream& out) {
  if (c.N < 0) throw Error(ErrorKind::InvalidParams, "N must be nonnegative");
  auto s = poincare_bound(c.p, c.n, c.N);
  if (want_json(c)) {
    out << json{{"command", "poincare"}, {"p", c.p}, {"n", c.n}, {"N", c.N}, {"coefficients", s.coefficients()}}.dump(2)
        << "\n";
    return kOk;
  }
  for (int k = 0; k <= c.N; ++k) out << (k ? "," : "") << s[k];
  out << '\n';
  return kOk;
}

int cmd_vanishing(const RunConfig& c, std::ostream& out) {
  auto rep = vanishing_degrees(c.p, c.n);
  if (want_json(c)) {
    json certs = json::array();
    for (const auto& e : rep.certificates)
      certs.push_back({{"degree", e.degree}, {"enumerated", e.enumerated}, {"series", e.series}});
    json doc{{"command", "vanishing"},       {"p", rep.p},
             {"n", rep.n},                   {"frobenius_degree", rep.frobenius_degree},
             {"p_divides_n", rep.p_divides_n}, {"degrees", rep.degrees},
             {"certificates", certs},        {"consistent", rep.consistent}};
    if (rep.p_divides_n) {
      doc["allowed_residues"] = rep.allowed_residues;
      doc["modulus"] = 2 * rep.p;
      doc["checked_up_to"] = rep.residue_checked_up_to;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "p\t" << rep.p << "\nn\t" << rep.n << "\nfrobenius_degree\t" << rep.frobenius_degree << '\n';
    if (rep.p_divides_n) {
      out << "allowed_residues_mod_" << 2 * rep.p << '\t';
      bool first = true;
      for (int r : rep.allowed_residues) {
        out << (first ? "" : ",") << r;
        first = false;
      }
      out << "\nchecked_up_to\t" << rep.residue_checked_up_to << '\n';
    } else {
      out << "degree\tenumerated\tseries\n";
      for (const auto& e : rep.certificates) out << e.degree << '\t' << e.enumerated << '\t' << e.series << '\n';
    }
    out << "result\t" << (rep.consistent ? "pass" : "fail") << '\n';
  }
  return rep.consistent ? kOk : kCheckFailed;
}

int cmd_poset_check(const RunConfig& c, std::ostream& out) {
  int total = 0, passed = 0;
  std::string first;
  auto note = [&](bool ok, const std::string& what) {
    ++total;
    if (ok) ++passed;
    else if (first.empty()) first = what;
  };
  for (int s = 1; s <= 3; ++s)
    for (int n = 0; n <= 3; ++n) {
      note(E_poset(s, n, n).is_partial_order(), "E poset order s=" + std::to_string(s));
      // every x in N^s with |x| <= 2
      std::vector<NVector> xs;
      std::function<void(NVector&, std::size_t, int)> gen = [&](NVector& x, std::size_t i, int left) {
        if (i == x.size()) {
          xs.push_back(x);
          return;
        }
        for (int v = 0; v <= left; ++v) {
          x[i] = v;
          gen(x, i + 1, left - v);
        }
      };
      NVector x0(s, 0);
      gen(x0, 0, 2);
      for (const auto& x : xs) {
        auto res = check_adjunction(s, n, x, n + l1_norm(x) + 3);
        std::ostringstream what;
        what << "adjunction s=" << s << " n=" << n << " |x|=" << l1_norm(x) << " " << res.detail;
        note(res.pass, what.str());
      }
      auto e = E_poset(s, n, n);
      auto d = D_poset_truncated(s, n, NVector(s, 0), n);
      bool inside = true;
      for (const auto& z : e.elements()) inside = inside && d.contains(z);
      note(inside, "E inside D s=" + std::to_string(s) + " n=" + std::to_string(n));
    }
  std::mt19937_64 rng(c.seed);
  for (int k = 0; k < 50; ++k) {
    int tsize = std::uniform_int_distribution<int>(1, 5)(rng);
    int ssize = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<int> f(tsize);
    NVector x(tsize);
    for (int t = 0; t < tsize; ++t) {
      f[t] = std::uniform_int_distribution<int>(0, ssize - 1)(rng);
      x[t] = std::uniform_int_distribution<int>(0, 6)(rng);
    }
    note(l1_functoriality(f, ssize, x), "l1 functoriality");
  }
  const bool ok = passed == total;
  if (want_json(c)) {
    json doc{{"command", "poset-check"}, {"passed", passed}, {"total", total}, {"pass", ok}};
    if (!ok) doc["first_failure"] = first;
    out << doc.dump(2) << "\n";
  } else {
    out << "checks\t" << total << "\npassed\t" << passed << "\nresult\t" << (ok ? "pass" : "fail") << '\n';
    if (!ok) out << "first_failure\t" << first << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_selftest(const RunConfig& c, std::ostream& out) {
  std::vector<std::pair<std::string, bool>> checks;
  {
    auto h = homology(build(circle(8), corpus_exterior3(), {16, true}));
    checks.push_back({"hh_exterior", verify_hh_against_expected(h, hh_exterior_expected(3, 3, 16)).pass});
  }
  {
    auto h = homology(build(circle(8), whitehead_filtration(truncated_polynomial(3, 2, 2)), {14, true}));
    checks.push_back({"hh_truncated_square", bigraded_mismatches(h, hh_truncated_square_expected(3, 2, 20), 6, 14).empty()});
  }
  for (const auto& na : corpus_algebras()) {
    auto fc = filter(build(circle(5), na.algebra, {10, true}));
    checks.push_back({"fundamental_" + na.name, check_fundamental(fc).pass});
    auto ss = pages(fc, 1);
    bool conv = ss.page_turn_ok && ss.d_squared_ok;
    for (int n : ss.degrees()) conv = conv && ss.e_inf_total(n) == ss.abutment.at(n);
    checks.push_back({"convergence_" + na.name, conv});
  }
  {
    auto ce = corpus_coefficients();
    auto fc = filter(build_with_coefficients(circle(5), ce.algebra, ce.m1, {10, true}));
    checks.push_back({"fundamental_coefficients", check_fundamental(fc).pass});
  }
  auto props = run_property_suite(c.seed, c.trials);
  bool ok = props.pass;
  for (const auto& [name, pass] : checks) ok = ok && pass;
  if (want_json(c)) {
    json doc{{"command", "selftest"}, {"seed", c.seed}, {"trials", c.trials}, {"pass", ok}};
    json corpus = json::object(), suite = json::object();
    for (const auto& [name, pass] : checks) corpus[name] = pass;
    for (const auto& [name, cnt] : props.counts) suite[name] = {{"passed", cnt.passed}, {"total", cnt.total}};
    doc["corpus"] = corpus;
    doc["properties"] = suite;
    doc["failures"] = props.failures;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [name, pass] : checks) out << name << '\t' << (pass ? "pass" : "fail") << '\n';
    for (const auto& [name, cnt] : props.counts) out << name << '\t' << cnt.passed << '/' << cnt.total << '\n';
    for (const auto& f : props.failures) out << "failure\t" << f << '\n';
    out << "result\t" << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, int (*)(const RunConfig&, std::ostream&)> commands{
      {"hh", cmd_hh},
      {"gr", cmd_gr},
      {"pages", cmd_pages},
      {"check-fundamental", cmd_check_fundamental},
      {"bound", cmd_bound},
      {"poincare", cmd_poincare},
      {"vanishing", cmd_vanishing},
      {"poset-check", cmd_poset_check},
      {"selftest", cmd_selftest},
  };
  try {
    validate(config);
    auto it = commands.find(config.command);
    if (it == commands.end()) throw Error(ErrorKind::InvalidParams, "unknown command '" + config.command + "'");
    return it->second(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: Parse: " << e.what() << "\n";
    return kValidationError;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Loday constructions, May filtrations and their spectral sequences over F_p"};
  app.add_option("command", c.command, "hh | gr | pages | check-fundamental | bound | poincare | vanishing | poset-check | selftest")
      ->required();
  app.add_option("--algebra", c.algebra, "algebra JSON file");
  app.add_option("--module", c.module, "bimodule JSON file (coefficients on the basepoint)");
  app.add_option("--space", c.space, "circle | point | torus:d | sphere:d | path to a simplicial-set JSON file");
  app.add_option("--max-internal", c.max_internal, "internal degree cutoff");
  app.add_option("--max-level", c.max_level, "simplicial level cutoff (>= 2)");
  app.add_option("--r-max", c.r_max, "number of pages to print");
  app.add_option("--format", c.format, "tsv | json");
  app.add_option("--seed", c.seed, "seed for randomized suites");
  app.add_option("--trials", c.trials, "number of random instances in selftest");
  app.add_option("--p", c.p, "prime");
  app.add_option("--n", c.n, "generator index n (|x| = 2n)");
  app.add_option("--N", c.N, "series truncation order");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return run(c, out, err);
}

}  // namespace thhmay::cli
