// catalog.hpp -- built-in datasets: the three rank-10 exceptional-curve
// graphs, the K3 reference count table, and the classical elliptic / minimal
// hyperbolic diagram families, each with provenance notes and an
// expected-properties block used by the golden tests.

#pragma once

#include <variant>

#include "json.hpp"  // vendored nlohmann/json

#include "moricone/bounds.hpp"

namespace moricone {

using OrderedJson = nlohmann::ordered_json;

struct ReferenceTable {
  std::vector<std::pair<std::string, int>> rows;  // (rho, count)
};

struct CatalogEntry {
  std::string name;
  std::variant<std::monostate, Configuration, OrientedDiagram, ReferenceTable> payload;
  std::vector<std::string> provenance;  // including which readings were inferred
  OrderedJson expected;                 // golden properties re-verified by tests
};

const std::vector<std::string>& catalog_names();
const CatalogEntry& load_catalog(const std::string& name);  // throws on unknown name
const CatalogEntry* find_catalog(const std::string& name);  // nullptr when absent

}  // namespace moricone
