#include "thhmay/io.hpp"

#include <fstream>
#include <map>

namespace thhmay {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return doc.at(key);
}

template <class T>
T get(const json& v, const char* what) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    parse_fail(std::string("field '") + what + "' has the wrong type");
  }
}

struct ParsedBasis {
  std::vector<BasisElement> basis;
  std::vector<int> weights;
  std::map<std::string, std::size_t> index;
};

ParsedBasis parse_basis(const json& arr) {
  if (!arr.is_array()) parse_fail("'basis' must be an array");
  ParsedBasis pb;
  for (const auto& e : arr) {
    BasisElement b{get<std::string>(field(e, "name"), "name"), get<int>(field(e, "degree"), "degree")};
    int w = e.contains("weight") ? get<int>(e.at("weight"), "weight") : 0;
    if (!pb.index.emplace(b.name, pb.basis.size()).second) parse_fail("basis name repeated: " + b.name);
    pb.basis.push_back(std::move(b));
    pb.weights.push_back(w);
  }
  return pb;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const json& v, const char* what) {
  auto name = get<std::string>(v, what);
  auto it = index.find(name);
  if (it == index.end()) parse_fail(std::string("unknown basis element '") + name + "' in " + what);
  return it->second;
}

SparseVector parse_result(const PrimeField& f, const std::map<std::string, std::size_t>& index, const json& arr) {
  if (!arr.is_array()) parse_fail("'result' must be an array");
  std::vector<Entry> raw;
  for (const auto& e : arr)
    raw.push_back({lookup(index, field(e, "basis"), "result"), f.reduce(get<std::int64_t>(field(e, "coeff"), "coeff"))});
  return canonicalize(f, std::move(raw));
}

json result_json(const std::vector<BasisElement>& basis, const SparseVector& v) {
  json r = json::array();
  for (const auto& e : v) r.push_back({{"basis", basis[e.index].name}, {"coeff", e.value}});
  return r;
}

json basis_json(const std::vector<BasisElement>& basis, const std::vector<int>& weights) {
  json arr = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i)
    arr.push_back({{"name", basis[i].name}, {"degree", basis[i].degree}, {"weight", weights[i]}});
  return arr;
}

}  // namespace

FilteredAlgebra algebra_from_json(const json& doc) {
  auto p = get<std::int64_t>(field(doc, "p"), "p");
  if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint32_t>(p))) parse_fail("'p' must be a prime below 65536");
  PrimeField f(static_cast<std::uint32_t>(p));
  auto pb = parse_basis(field(doc, "basis"));
  const std::size_t n = pb.basis.size();
  std::size_t unit = lookup(pb.index, field(doc, "unit"), "unit");

  ProductTable table(n, std::vector<SparseVector>(n));
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  if (doc.contains("products")) {
    const auto& prods = doc.at("products");
    if (!prods.is_array()) parse_fail("'products' must be an array");
    for (const auto& e : prods) {
      std::size_t i = lookup(pb.index, field(e, "left"), "left");
      std::size_t j = lookup(pb.index, field(e, "right"), "right");
      if (i > j) parse_fail("product " + pb.basis[i].name + "*" + pb.basis[j].name + " listed with left after right");
      if (given[i][j]) parse_fail("product " + pb.basis[i].name + "*" + pb.basis[j].name + " listed twice");
      given[i][j] = true;
      table[i][j] = parse_result(f, pb.index, field(e, "result"));
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!given[std::min(unit, k)][std::max(unit, k)]) table[std::min(unit, k)][std::max(unit, k)] = {{k, 1}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      table[i][j] = scaled(f, f.sign(pb.basis[i].degree * pb.basis[j].degree), table[j][i]);

  std::optional<int> trunc;
  if (doc.contains("truncation") && !doc.at("truncation").is_null()) trunc = get<int>(doc.at("truncation"), "truncation");
  GradedAlgebra a(f, pb.basis, unit, std::move(table), trunc);
  return FilteredAlgebra(std::move(a), pb.weights);
}

json to_json(const FilteredAlgebra& fa) {
  const auto& a = fa.algebra();
  json doc;
  doc["p"] = a.field().p();
  doc["basis"] = basis_json(a.basis(), fa.weights());
  doc["unit"] = a.name(a.unit());
  json prods = json::array();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) {
      if (i == a.unit() || j == a.unit() || a.product(i, j).empty()) continue;
      prods.push_back({{"left", a.name(i)}, {"right", a.name(j)}, {"result", result_json(a.basis(), a.product(i, j))}});
    }
  doc["products"] = prods;
  if (a.truncation()) doc["truncation"] = *a.truncation();
  return doc;
}

FilteredBimodule module_from_json(const FilteredAlgebra& base, const json& doc) {
  const auto& alg = base.algebra();
  const auto& f = alg.field();
  auto pb = parse_basis(field(doc, "basis"));
  const std::size_t n = pb.basis.size();
  std::map<std::string, std::size_t> alg_index;
  for (std::size_t i = 0; i < alg.size(); ++i) alg_index[alg.name(i)] = i;

  ActionTable act(alg.size(), std::vector<SparseVector>(n));
  std::vector<std::vector<bool>> given(alg.size(), std::vector<bool>(n, false));
  if (doc.contains("action")) {
    const auto& arr = doc.at("action");
    if (!arr.is_array()) parse_fail("'action' must be an array");
    for (const auto& e : arr) {
      std::size_t i = lookup(alg_index, field(e, "left"), "left");
      std::size_t j = lookup(pb.index, field(e, "right"), "right");
      if (given[i][j]) parse_fail("action " + alg.name(i) + "." + pb.basis[j].name + " listed twice");
      given[i][j] = true;
      act[i][j] = parse_result(f, pb.index, field(e, "result"));
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!given[alg.unit()][j]) act[alg.unit()][j] = {{j, 1}};
  return FilteredBimodule(base, pb.basis, pb.weights, std::move(act));
}

json to_json(const FilteredBimodule& m) {
  const auto& alg = m.base().algebra();
  json doc;
  doc["basis"] = basis_json(m.basis(), m.weights());
  json arr = json::array();
  for (std::size_t i = 0; i < alg.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == alg.unit() || m.left_action(i, j).empty()) continue;
      arr.push_back({{"left", alg.name(i)}, {"right", m.name(j)}, {"result", result_json(m.basis(), m.left_action(i, j))}});
    }
  doc["action"] = arr;
  return doc;
}

SimplicialFiniteSet simplicial_from_json(const json& doc) {
  auto levels = get<std::vector<std::vector<std::string>>>(field(doc, "levels"), "levels");
  auto faces = get<MapTables>(field(doc, "faces"), "faces");
  auto degs = get<MapTables>(field(doc, "degeneracies"), "degeneracies");
  if (faces.size() + 1 == levels.size()) faces.insert(faces.begin(), std::vector<std::vector<std::size_t>>{});
  std::optional<std::string> bp;
  if (doc.contains("basepoint") && !doc.at("basepoint").is_null()) bp = get<std::string>(doc.at("basepoint"), "basepoint");
  std::optional<int> nd;
  if (doc.contains("nondegenerate_dim") && !doc.at("nondegenerate_dim").is_null())
    nd = get<int>(doc.at("nondegenerate_dim"), "nondegenerate_dim");
  return SimplicialFiniteSet(std::move(levels), std::move(faces), std::move(degs), bp, nd);
}

json to_json(const SimplicialFiniteSet& x) {
  json doc;
  doc["levels"] = x.levels();
  doc["faces"] = x.faces();
  doc["degeneracies"] = x.degeneracies();
  if (x.basepoint_name()) doc["basepoint"] = *x.basepoint_name();
  if (x.nondegenerate_dim()) doc["nondegenerate_dim"] = *x.nondegenerate_dim();
  return doc;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

}  // namespace thhmay
