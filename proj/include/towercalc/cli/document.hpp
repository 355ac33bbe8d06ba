#pragma once

#include "towercalc/complex/chain_complex.hpp"
#include "towercalc/sections/sections.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace towercalc::cli {

using Json = nlohmann::ordered_json;

/// A named complex as stored on disk. Integer entries are decimal strings;
/// matrices are arrays of rows, and an empty matrix is [].
struct ComplexDocument {
  std::string name;
  complex::ChainComplex complex;
  Json metadata = Json::object();
};

using Document = std::variant<ComplexDocument, sections::TowerSection, sections::CospanSection>;

Json matrix_to_json(const exactalg::IntegerMatrix& m);
Json complex_to_json(const ComplexDocument& d);
Json tower_to_json(const sections::TowerSection& t);
Json cospan_to_json(const sections::CospanSection& s);
Json level_structure_to_json(const sections::LevelStructure& s);

/// Each parser throws ParseError for malformed JSON and ValidationError when
/// the content fails mathematically; both carry a JSON-pointer-like location.
ComplexDocument complex_from_json(const Json& j, const std::string& where = "");
sections::TowerSection tower_from_json(const Json& j);
sections::CospanSection cospan_from_json(const Json& j);

/// Towers have "levels", cospans "x0"; anything else is a complex.
Document document_from_json(const Json& j);

/// Reads and parses a file; the raw bytes are returned through `bytes` for digests.
Json read_json(const std::string& path, std::string* bytes = nullptr);
Document load(const std::string& path, std::string* bytes = nullptr);

void save(const std::string& path, const Json& j);

}  // namespace towercalc::cli
