// io.hpp -- the JSON document format, DOT export, and deterministic report
// rendering (text and JSON forms) for every analysis.

#pragma once

#include "moricone/catalog.hpp"

namespace moricone {

struct ParsedDocument {
  std::string name;
  std::variant<std::monostate, Configuration, OrientedDiagram> payload;
  OrderedJson meta;  // free map, preserved verbatim

  const Configuration& configuration() const;
  const OrientedDiagram& diagram() const;
  bool is_surface() const { return std::holds_alternative<Configuration>(payload); }
  std::optional<int> rho_hint() const;  // meta.rho, used by 3-fold bound reports
};

// Single canonical input format. Surface documents carry an integer `gram`,
// 3-fold documents a rational-string matrix `t` plus `divisor_ids` and
// `self_k`. All invariants are enforced with errors naming the offending
// indices. Rationals are written "p" or "p/q".
ParsedDocument parse_configuration(const std::string& text);

OrderedJson to_json(const ParsedDocument& doc);
OrderedJson configuration_to_json(const std::string& name, const Configuration& c,
                                  const OrderedJson& meta);
OrderedJson diagram_to_json(const std::string& name, const OrientedDiagram& d,
                            const OrderedJson& meta);
OrderedJson catalog_entry_to_json(const CatalogEntry& e);
std::string dump_json(const OrderedJson& j);  // 2-space indent, trailing newline

// DOT export: undirected graph for surface configurations (vertex label =
// E^2, filled black iff E^2 = -2), digraph for oriented diagrams (one edge
// per arrow, label = weight). Deterministic ordering.
std::string export_dot(const std::string& name, const Configuration& c);
std::string export_dot(const std::string& name, const OrientedDiagram& d);
std::string export_dot(const ParsedDocument& doc);

struct Rendered {
  std::string text;
  OrderedJson json;
};

struct Cy3Flags {
  bool has_small_ray = false;
  bool has_low_kodaira_face = false;
  bool has_nef_d_with_d3_zero = false;
  bool cone_finite = true;
};

Rendered render_classify(const ParsedDocument& doc, int max_subset);
Rendered render_cone(const ParsedDocument& doc, int dim_cap);
Rendered render_narrow(const ParsedDocument& doc);
Rendered render_bounds(const ParsedDocument& doc, int max_subset,
                       std::optional<int> d_override, DistanceMode mode);
Rendered render_cy3(const ParsedDocument& doc, const Cy3Flags& flags);
Rendered render_catalog_entry(const CatalogEntry& e);
Rendered render_catalog_list();

}  // namespace moricone
