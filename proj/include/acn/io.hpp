#pragma once

#include "acn/catalog.hpp"
#include "acn/submanifold.hpp"

#include "json.hpp" // vendored nlohmann/json

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace acn::io {

using json = nlohmann::json;

struct InduceSpec {
  DecompositionCase kase = DecompositionCase::orthogonal;
  int epsilon = +1;
  Branch branch = Branch::lambda1;
  std::optional<std::string> t0, t2; // orthogonal case
  std::optional<std::string> k;      // non-orthogonal case
};

struct SectionSpec {
  std::vector<std::string> n1, n2;
  std::vector<std::vector<std::string>> tangent;
  std::optional<InduceSpec> induce;
};

/// Scalar entries are expression strings in the document's symbols.
/// `brackets` keys are "i,j" with 1-based i < j; antisymmetry is implied.
struct InputDocument {
  std::vector<std::string> symbols;
  std::vector<std::pair<std::string, std::string>> relations; // (symbol, square)
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> brackets;
  std::vector<std::vector<std::string>> metric;
  std::vector<std::vector<std::string>> phi;
  std::vector<std::string> xi;
  std::vector<std::string> eta;
  std::optional<SectionSpec> section;
};

InputDocument document_from_json(const json& j);
json document_to_json(const InputDocument& doc);
InputDocument load_document(const std::string& path);

/// Everything the commands need, built and validated.
struct BuiltDocument {
  TablePtr table;
  AmbientSpace space;
  std::optional<NormalSection> section;
  std::optional<InduceSpec> induce;
};

BuiltDocument build(const InputDocument& doc);

/// Exports a catalog bundle in the document format (round-trip support).
InputDocument document_from_bundle(const catalog::ExampleBundle& bundle);

json report_to_json(const Report& rep);

} // namespace acn::io
