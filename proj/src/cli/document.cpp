#include "towercalc/cli/document.hpp"

#include "towercalc/errors.hpp"

#include <fstream>
#include <sstream>

namespace towercalc::cli {

using complex::ChainComplex;
using complex::ChainMap;
using exactalg::Integer;
using exactalg::IntegerMatrix;
using exactalg::Presentation;
using sections::LevelStructure;

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(where, key), "missing field");
  return *it;
}

long integer_field(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<long>();
}

Integer entry(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a decimal string");
  const std::string s = j.get<std::string>();
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw ParseError(where, "not a decimal integer: " + s);
  return v;
}

// An array of rows; [] stands for any matrix with no rows or no columns.
IntegerMatrix matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of rows");
  if (j.empty()) {
    if (rows != 0 && cols != 0)
      throw ValidationError(where, "expected " + std::to_string(rows) + " rows");
    return IntegerMatrix(rows, cols);
  }
  if (j.size() != rows)
    throw ValidationError(where, "expected " + std::to_string(rows) + " rows, got " +
                                     std::to_string(j.size()));
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array()) throw ParseError(at(where, r), "expected a row");
    if (row.size() != cols)
      throw ValidationError(at(where, r), "expected " + std::to_string(cols) + " entries, got " +
                                              std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(row[c], at(at(where, r), c));
  }
  return m;
}

// Relations may have any number of rows.
IntegerMatrix relations(const Json& j, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of rows");
  return j.empty() ? IntegerMatrix(0, cols) : matrix(j, j.size(), cols, where);
}

std::vector<IntegerMatrix> components(const Json& j, const ChainComplex& source,
                                      const ChainComplex& target, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of matrices");
  if (j.size() != source.length())
    throw ValidationError(where, "expected " + std::to_string(source.length()) + " components");
  std::vector<IntegerMatrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const long k = source.min_degree() + static_cast<long>(i);
    out.push_back(matrix(j[i], target.generators(k), source.generators(k), at(where, i)));
  }
  return out;
}

ChainMap chain_map(const Json& j, const ChainComplex& source, const ChainComplex& target,
                   const std::string& where) {
  auto parts = components(j, source, target, where);
  try {
    return ChainMap(source, target, std::move(parts));
  } catch (const IllFormedMap& e) {
    throw ValidationError(where, e.what());
  }
}

LevelStructure level_structure(const Json& j, const std::string& where) {
  const std::string kind = field(j, "kind", where).get<std::string>();
  if (kind == "plain") return LevelStructure::plain();
  if (kind == "terminal") return LevelStructure::terminal();
  if (kind == "rational") return LevelStructure::rational();
  if (kind == "truncated") return LevelStructure::truncated(integer_field(field(j, "n", where), at(where, "n")));
  if (kind == "local") {
    fracture::PrimeSet primes;
    const Json& ps = field(j, "primes", where);
    if (!ps.is_array()) throw ParseError(at(where, "primes"), "expected an array");
    for (std::size_t i = 0; i < ps.size(); ++i)
      primes.insert(integer_field(ps[i], at(at(where, "primes"), i)));
    return LevelStructure::local(std::move(primes));
  }
  throw ParseError(at(where, "kind"), "unknown level structure " + kind);
}

template <class F>
auto validated(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    if (where.empty()) throw;
    std::string message = e.what();
    const std::string prefix = e.location() + ": ";
    if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
    throw ValidationError(where + e.location(), message);
  }
}

}  // namespace

Json matrix_to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  if (m.cols() == 0) return rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json complex_to_json(const ComplexDocument& d) {
  Json j;
  j["name"] = d.name;
  j["min_degree"] = d.complex.min_degree();
  Json degrees = Json::array();
  for (const auto& p : d.complex.degrees())
    degrees.push_back({{"generators", p.generators}, {"relations", matrix_to_json(p.relations)}});
  j["degrees"] = std::move(degrees);
  Json diffs = Json::array();
  for (const auto& m : d.complex.differentials()) diffs.push_back(matrix_to_json(m));
  j["differentials"] = std::move(diffs);
  if (!d.metadata.empty()) j["metadata"] = d.metadata;
  return j;
}

Json level_structure_to_json(const LevelStructure& s) {
  using Kind = LevelStructure::Kind;
  switch (s.kind) {
    case Kind::Plain:
      return {{"kind", "plain"}};
    case Kind::Terminal:
      return {{"kind", "terminal"}};
    case Kind::Truncated:
      return {{"kind", "truncated"}, {"n", s.n}};
    case Kind::Local:
      if (s.ring.is_rational()) return {{"kind", "rational"}};
      return {{"kind", "local"}, {"primes", s.ring.primes}};
  }
  return {};
}

Json tower_to_json(const sections::TowerSection& t) {
  Json j;
  Json levels = Json::array(), maps = Json::array(), tags = Json::array();
  for (long i = 0; i <= t.top(); ++i) {
    levels.push_back(complex_to_json({"X_" + std::to_string(i), t.level(i), {}}));
    tags.push_back(level_structure_to_json(t.tag(i)));
  }
  for (const auto& f : t.maps()) {
    Json parts = Json::array();
    for (const auto& c : f.components()) parts.push_back(matrix_to_json(c));
    maps.push_back(std::move(parts));
  }
  j["levels"] = std::move(levels);
  j["maps"] = std::move(maps);
  j["tags"] = std::move(tags);
  if (t.stabilization()) j["stabilization"] = *t.stabilization();
  return j;
}

Json cospan_to_json(const sections::CospanSection& s) {
  auto parts = [](const ChainMap& f) {
    Json out = Json::array();
    for (const auto& c : f.components()) out.push_back(matrix_to_json(c));
    return out;
  };
  Json tags = Json::array();
  for (const auto& t : s.tags) tags.push_back(level_structure_to_json(t));
  return {{"x1", complex_to_json({"X_1", s.x1, {}})},
          {"x0", complex_to_json({"X_0", s.x0, {}})},
          {"x2", complex_to_json({"X_2", s.x2, {}})},
          {"left", parts(s.left)},
          {"right", parts(s.right)},
          {"tags", std::move(tags)}};
}

ComplexDocument complex_from_json(const Json& j, const std::string& where) {
  ComplexDocument d;
  if (auto it = j.is_object() ? j.find("name") : j.end(); it != j.end()) {
    if (!it->is_string()) throw ParseError(at(where, "name"), "expected a string");
    d.name = it->get<std::string>();
  }
  const long lo = integer_field(field(j, "min_degree", where), at(where, "min_degree"));
  const Json& degrees = field(j, "degrees", where);
  if (!degrees.is_array()) throw ParseError(at(where, "degrees"), "expected an array");
  std::vector<Presentation> ps;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const std::string w = at(at(where, "degrees"), i);
    const long g = integer_field(field(degrees[i], "generators", w), at(w, "generators"));
    if (g < 0) throw ParseError(at(w, "generators"), "negative count");
    const auto gens = static_cast<std::size_t>(g);
    IntegerMatrix rel(0, gens);
    if (degrees[i].contains("relations"))
      rel = relations(degrees[i]["relations"], gens, at(w, "relations"));
    ps.emplace_back(gens, std::move(rel));
  }
  const Json& diffs = field(j, "differentials", where);
  if (!diffs.is_array()) throw ParseError(at(where, "differentials"), "expected an array");
  const std::size_t expected = ps.empty() ? 0 : ps.size() - 1;
  if (diffs.size() != expected)
    throw ValidationError(at(where, "differentials"),
                          "expected " + std::to_string(expected) + " matrices, got " +
                              std::to_string(diffs.size()));
  std::vector<IntegerMatrix> ds;
  for (std::size_t i = 0; i < diffs.size(); ++i)
    ds.push_back(matrix(diffs[i], ps[i].generators, ps[i + 1].generators,
                        at(at(where, "differentials"), i)));
  d.complex = validated(where.empty() ? "" : where + ": ",
                        [&] { return ChainComplex(lo, std::move(ps), std::move(ds)); });
  if (j.contains("metadata")) d.metadata = j["metadata"];
  return d;
}

sections::TowerSection tower_from_json(const Json& j) {
  const Json& lv = field(j, "levels", "");
  const Json& mp = field(j, "maps", "");
  if (!lv.is_array() || lv.empty()) throw ParseError("/levels", "expected a nonempty array");
  if (!mp.is_array() || mp.size() + 1 != lv.size())
    throw ValidationError("/maps", "expected " + std::to_string(lv.size() - 1) + " maps");
  std::vector<ChainComplex> levels;
  for (std::size_t i = 0; i < lv.size(); ++i)
    levels.push_back(complex_from_json(lv[i], at("/levels", i)).complex);
  std::vector<ChainMap> maps;
  for (std::size_t i = 0; i < mp.size(); ++i)
    maps.push_back(chain_map(mp[i], levels[i + 1], levels[i], at("/maps", i)));
  std::vector<LevelStructure> tags;
  if (j.contains("tags")) {
    const Json& ts = j["tags"];
    if (!ts.is_array() || ts.size() != lv.size())
      throw ParseError("/tags", "expected one tag per level");
    for (std::size_t i = 0; i < ts.size(); ++i) tags.push_back(level_structure(ts[i], at("/tags", i)));
  }
  std::optional<long> stable;
  if (j.contains("stabilization")) stable = integer_field(j["stabilization"], "/stabilization");
  return {std::move(levels), std::move(maps), std::move(tags), stable};
}

sections::CospanSection cospan_from_json(const Json& j) {
  const auto x1 = complex_from_json(field(j, "x1", ""), "/x1").complex;
  const auto x0 = complex_from_json(field(j, "x0", ""), "/x0").complex;
  const auto x2 = complex_from_json(field(j, "x2", ""), "/x2").complex;
  ChainMap left = chain_map(field(j, "left", ""), x1, x0, "/left");
  ChainMap right = chain_map(field(j, "right", ""), x2, x0, "/right");
  std::array<LevelStructure, 3> tags;
  if (j.contains("tags")) {
    const Json& ts = j["tags"];
    if (!ts.is_array() || ts.size() != 3) throw ParseError("/tags", "expected three tags");
    for (std::size_t i = 0; i < 3; ++i) tags[i] = level_structure(ts[i], at("/tags", i));
  }
  return {x1, x0, x2, std::move(left), std::move(right), tags};
}

Document document_from_json(const Json& j) {
  if (j.is_object() && j.contains("levels")) return tower_from_json(j);
  if (j.is_object() && j.contains("x0")) return cospan_from_json(j);
  return complex_from_json(j);
}

Json read_json(const std::string& path, std::string* bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (bytes) *bytes = text;
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

Document load(const std::string& path, std::string* bytes) {
  const Json j = read_json(path, bytes);
  try {
    return document_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path, e.what());
  }
}

void save(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path, "cannot write file");
  out << j.dump(2) << "\n";
}

}  // namespace towercalc::cli
