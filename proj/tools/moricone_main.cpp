// moricone_main.cpp -- command-line front end. Subcommands: classify, cone,
// narrow, bounds, cy3, catalog, export. Exit codes: 0 success, 1 domain
// error, 2 usage error. Output is byte-deterministic for identical
// invocations.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "moricone/io.hpp"

namespace {

using namespace moricone;

ParsedDocument resolve_input(const std::string& input) {
  std::ifstream file(input);
  if (file.good()) {
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_configuration(buffer.str());
  }
  if (const CatalogEntry* entry = find_catalog(input)) {
    ParsedDocument doc;
    doc.name = entry->name;
    OrderedJson meta;
    meta["provenance"] = entry->provenance;
    if (!entry->expected.is_null()) meta["expected"] = entry->expected;
    doc.meta = std::move(meta);
    if (const auto* c = std::get_if<Configuration>(&entry->payload)) {
      doc.payload = *c;
    } else if (const auto* d = std::get_if<OrientedDiagram>(&entry->payload)) {
      doc.payload = *d;
    } else {
      throw std::invalid_argument("catalog entry '" + input +
                                  "' is a reference table; use the catalog command");
    }
    return doc;
  }
  throw std::invalid_argument("input '" + input +
                              "' is neither a readable file nor a catalog entry");
}

void emit(const Rendered& r, const std::string& format) {
  if (format == "json")
    std::cout << dump_json(r.json);
  else
    std::cout << r.text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of exceptional-curve and extremal-ray configurations"};
  app.require_subcommand(1);

  std::string input, format = "text", dot_path, catalog_name;
  int max_subset = 5;
  int dim_cap = 12;
  int d_override = -1;
  std::string distance_mode = "induced";
  bool small_ray = false, low_kodaira = false, nef_d3_zero = false, cone_infinite = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* classify = app.add_subcommand("classify", "invariants and subset classification");
  classify->add_option("input", input, "input file or catalog name")->required();
  classify->add_option("--max-subset", max_subset, "subset enumeration cap");
  add_format(classify);

  CLI::App* cone = app.add_subcommand("cone", "dual nef cone and face diagnostics");
  cone->add_option("input", input, "input file or catalog name")->required();
  cone->add_option("--dim-cap", dim_cap, "face lattice dimension cap");
  add_format(cone);

  CLI::App* narrow = app.add_subcommand("narrow", "narrow-parts search and ample candidate");
  narrow->add_option("input", input, "input file or catalog name")->required();
  add_format(narrow);

  CLI::App* bounds = app.add_subcommand("bounds", "diagram-method constants and Picard bounds");
  bounds->add_option("input", input, "input file or catalog name")->required();
  bounds->add_option("--max-subset", max_subset, "subset enumeration cap");
  bounds->add_option("--d", d_override, "override the computed d");
  bounds->add_option("--distance-mode", distance_mode, "pair distance mode")
      ->check(CLI::IsMember({"induced", "ambient"}));
  add_format(bounds);

  CLI::App* cy3 = app.add_subcommand("cy3", "oriented diagram verdicts and 3-fold bounds");
  cy3->add_option("input", input, "input file or catalog name")->required();
  cy3->add_flag("--small-ray", small_ray, "a small extremal ray exists");
  cy3->add_flag("--low-kodaira-face", low_kodaira, "a face of Kodaira dimension <= 2 exists");
  cy3->add_flag("--nef-d3-zero", nef_d3_zero, "a rational nef D with D^3 = 0 exists");
  cy3->add_flag("--cone-infinite", cone_infinite, "the Mori cone is not finite polyhedral");
  add_format(cy3);

  CLI::App* catalog = app.add_subcommand("catalog", "list or emit built-in datasets");
  catalog->add_option("name", catalog_name, "catalog entry name");
  add_format(catalog);

  CLI::App* export_cmd = app.add_subcommand("export", "DOT graph export");
  export_cmd->add_option("input", input, "input file or catalog name")->required();
  export_cmd->add_option("--dot", dot_path, "write DOT to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      emit(render_classify(resolve_input(input), max_subset), format);
    } else if (cone->parsed()) {
      emit(render_cone(resolve_input(input), dim_cap), format);
    } else if (narrow->parsed()) {
      emit(render_narrow(resolve_input(input)), format);
    } else if (bounds->parsed()) {
      std::optional<int> d;
      if (d_override >= 0) d = d_override;
      const DistanceMode mode =
          distance_mode == "ambient" ? DistanceMode::ambient : DistanceMode::induced;
      emit(render_bounds(resolve_input(input), max_subset, d, mode), format);
    } else if (cy3->parsed()) {
      Cy3Flags flags;
      flags.has_small_ray = small_ray;
      flags.has_low_kodaira_face = low_kodaira;
      flags.has_nef_d_with_d3_zero = nef_d3_zero;
      flags.cone_finite = !cone_infinite;
      emit(render_cy3(resolve_input(input), flags), format);
    } else if (catalog->parsed()) {
      if (catalog_name.empty())
        emit(render_catalog_list(), format);
      else
        emit(render_catalog_entry(load_catalog(catalog_name)), format);
    } else if (export_cmd->parsed()) {
      const std::string dot = export_dot(resolve_input(input));
      if (dot_path.empty()) {
        std::cout << dot;
      } else {
        std::ofstream out(dot_path);
        if (!out) throw std::runtime_error("cannot write DOT file '" + dot_path + "'");
        out << dot;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
