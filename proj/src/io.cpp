// io.cpp

#include "moricone/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace moricone {

namespace {

using Json = OrderedJson;

std::string at(const std::string& field) { return "document field '" + field + "'"; }

const Json& require(const Json& j, const std::string& field) {
  if (!j.contains(field)) throw std::invalid_argument("missing " + at(field));
  return j.at(field);
}

std::string require_string(const Json& j, const std::string& field) {
  const Json& v = require(j, field);
  if (!v.is_string()) throw std::invalid_argument(at(field) + " must be a string");
  return v.get<std::string>();
}

Int json_to_int(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument(where + " must be an integer (or integer string)");
}

Rat json_to_rat(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw std::invalid_argument(where + " must be a rational string \"p/q\" or an integer");
}

Json int_to_json(const Int& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_labels(const std::vector<std::string>& labels, const std::vector<int>& idx) {
  std::string out;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) out += " ";
    out += labels[idx[i]];
  }
  return out;
}

Json subset_json(const std::vector<int>& idx) { return Json(idx); }

}  // namespace

const Configuration& ParsedDocument::configuration() const {
  if (!is_surface()) throw std::invalid_argument("operation requires a surface configuration");
  return std::get<Configuration>(payload);
}

const OrientedDiagram& ParsedDocument::diagram() const {
  if (!std::holds_alternative<OrientedDiagram>(payload))
    throw std::invalid_argument("operation requires a 3-fold oriented diagram");
  return std::get<OrientedDiagram>(payload);
}

std::optional<int> ParsedDocument::rho_hint() const {
  if (meta.is_object() && meta.contains("rho") && meta.at("rho").is_number_integer())
    return meta.at("rho").get<int>();
  return std::nullopt;
}

// ----------------------------------------------------------------- parsing

ParsedDocument parse_configuration(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("document must be a JSON object");

  ParsedDocument doc;
  doc.name = j.contains("name") ? require_string(j, "name") : "";
  const std::string kind = require_string(j, "kind");
  if (j.contains("meta")) {
    if (!j.at("meta").is_object()) throw std::invalid_argument(at("meta") + " must be an object");
    doc.meta = j.at("meta");
  }

  const Json& jlabels = require(j, "labels");
  if (!jlabels.is_array()) throw std::invalid_argument(at("labels") + " must be an array");
  std::vector<std::string> labels;
  for (const auto& v : jlabels) {
    if (!v.is_string()) throw std::invalid_argument("labels must all be strings");
    labels.push_back(v.get<std::string>());
  }
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw std::invalid_argument(at("labels") + " must be nonempty");

  auto check_square = [&](const Json& m, const std::string& field) {
    if (!m.is_array() || static_cast<int>(m.size()) != n)
      throw std::invalid_argument(at(field) + " must be a " + std::to_string(n) + "x" +
                                  std::to_string(n) + " matrix");
    for (const auto& row : m)
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw std::invalid_argument(at(field) + " must be a " + std::to_string(n) + "x" +
                                    std::to_string(n) + " matrix");
  };

  if (kind == "surface") {
    const Json& jgram = require(j, "gram");
    check_square(jgram, "gram");
    std::vector<std::vector<Int>> gram(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        gram[i][k] = json_to_int(jgram[i][k],
                                 "gram[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k)
        if (gram[i][k] != gram[k][i])
          throw std::invalid_argument("gram[" + std::to_string(i) + "][" + std::to_string(k) +
                                      "] != gram[" + std::to_string(k) + "][" + std::to_string(i) +
                                      "]: matrix not symmetric");
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (i != k && gram[i][k] < 0)
          throw std::invalid_argument("gram[" + std::to_string(i) + "][" + std::to_string(k) +
                                      "] < 0 violates the invariant E.E' >= 0 for distinct curves");

    std::optional<std::vector<Int>> canonical;
    if (j.contains("canonical")) {
      const Json& jc = j.at("canonical");
      if (!jc.is_array() || static_cast<int>(jc.size()) != n)
        throw std::invalid_argument(at("canonical") + " must list K.E for all " +
                                    std::to_string(n) + " curves");
      std::vector<Int> k;
      for (int i = 0; i < n; ++i)
        k.push_back(json_to_int(jc[i], "canonical[" + std::to_string(i) + "]"));
      canonical = std::move(k);
    }
    std::optional<Int> k2;
    if (j.contains("k_squared")) k2 = json_to_int(j.at("k_squared"), "k_squared");

    doc.payload = Configuration(std::move(labels), GramMatrix(std::move(gram)),
                                std::move(canonical), VarietyKind::surface, std::move(k2));
    return doc;
  }

  if (kind == "cy3") {
    const Json& jt = require(j, "t");
    check_square(jt, "t");
    QMat t(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        t[i][k] = json_to_rat(jt[i][k], "t[" + std::to_string(i) + "][" + std::to_string(k) + "]");

    const Json& jd = require(j, "divisor_ids");
    if (!jd.is_array() || static_cast<int>(jd.size()) != n)
      throw std::invalid_argument(at("divisor_ids") + " must list one id per ray");
    std::vector<std::string> ids;
    for (const auto& v : jd) {
      if (!v.is_string()) throw std::invalid_argument("divisor_ids must all be strings");
      ids.push_back(v.get<std::string>());
    }

    const Json& jk = require(j, "self_k");
    if (!jk.is_array() || static_cast<int>(jk.size()) != n)
      throw std::invalid_argument(at("self_k") + " must list one integer per ray");
    std::vector<int> self_k;
    for (int i = 0; i < n; ++i) {
      const Json& v = jk[i];
      if (!v.is_number_integer())
        throw std::invalid_argument("self_k[" + std::to_string(i) + "] must be an integer");
      const long k = v.get<long>();
      if (k < 1 || k > 3)
        throw std::invalid_argument("self_k[" + std::to_string(i) +
                                    "] = " + std::to_string(k) + " outside {1,2,3}");
      self_k.push_back(static_cast<int>(k));
    }

    doc.payload = OrientedDiagram(std::move(labels), std::move(ids), std::move(t),
                                  std::move(self_k));
    return doc;
  }

  throw std::invalid_argument("document kind must be \"surface\" or \"cy3\", got \"" + kind +
                              "\"");
}

// ------------------------------------------------------------- serialization

OrderedJson configuration_to_json(const std::string& name, const Configuration& c,
                                  const OrderedJson& meta) {
  Json j;
  j["name"] = name;
  j["kind"] = "surface";
  j["labels"] = c.labels();
  Json gram = Json::array();
  for (int i = 0; i < c.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < c.size(); ++k) row.push_back(int_to_json(c.gram().at(i, k)));
    gram.push_back(std::move(row));
  }
  j["gram"] = std::move(gram);
  if (c.canonical_pairings()) {
    Json canonical = Json::array();
    for (const Int& z : *c.canonical_pairings()) canonical.push_back(int_to_json(z));
    j["canonical"] = std::move(canonical);
  }
  if (c.k_squared()) j["k_squared"] = int_to_json(*c.k_squared());
  if (!meta.is_null()) j["meta"] = meta;
  return j;
}

OrderedJson diagram_to_json(const std::string& name, const OrientedDiagram& d,
                            const OrderedJson& meta) {
  Json j;
  j["name"] = name;
  j["kind"] = "cy3";
  j["labels"] = d.rays();
  Json t = Json::array();
  for (int i = 0; i < d.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < d.size(); ++k) row.push_back(rat_str(d.t()[i][k]));
    t.push_back(std::move(row));
  }
  j["t"] = std::move(t);
  j["divisor_ids"] = d.divisor_ids();
  j["self_k"] = d.self_k();
  if (!meta.is_null()) j["meta"] = meta;
  return j;
}

OrderedJson to_json(const ParsedDocument& doc) {
  if (doc.is_surface()) return configuration_to_json(doc.name, doc.configuration(), doc.meta);
  return diagram_to_json(doc.name, doc.diagram(), doc.meta);
}

OrderedJson catalog_entry_to_json(const CatalogEntry& e) {
  Json meta;
  meta["provenance"] = e.provenance;
  if (!e.expected.is_null()) meta["expected"] = e.expected;

  if (const auto* table = std::get_if<ReferenceTable>(&e.payload)) {
    Json j;
    j["name"] = e.name;
    j["kind"] = "reference-table";
    Json rows = Json::array();
    for (const auto& [rho, count] : table->rows) {
      Json row;
      row["rho"] = rho;
      row["count"] = count;
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["meta"] = std::move(meta);
    return j;
  }
  if (const auto* c = std::get_if<Configuration>(&e.payload))
    return configuration_to_json(e.name, *c, meta);
  return diagram_to_json(e.name, std::get<OrientedDiagram>(e.payload), meta);
}

std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

// ------------------------------------------------------------------- DOT

std::string export_dot(const std::string& name, const Configuration& c) {
  std::ostringstream out;
  out << "graph " << quote(name.empty() ? "configuration" : name) << " {\n";
  out << "  node [shape=circle];\n";
  for (int i = 0; i < c.size(); ++i) {
    out << "  " << quote(c.labels()[i]) << " [label=" << quote(c.gram().at(i, i).get_str());
    if (c.gram().at(i, i) == -2) out << ", style=filled, fillcolor=black, fontcolor=white";
    out << "];\n";
  }
  for (int i = 0; i < c.size(); ++i)
    for (int k = i + 1; k < c.size(); ++k)
      if (c.gram().at(i, k) > 0) {
        out << "  " << quote(c.labels()[i]) << " -- " << quote(c.labels()[k]);
        if (c.gram().at(i, k) != 1) out << " [label=" << quote(c.gram().at(i, k).get_str()) << "]";
        out << ";\n";
      }
  out << "}\n";
  return out.str();
}

std::string export_dot(const std::string& name, const OrientedDiagram& d) {
  std::ostringstream out;
  out << "digraph " << quote(name.empty() ? "diagram" : name) << " {\n";
  out << "  node [shape=circle];\n";
  for (int i = 0; i < d.size(); ++i)
    out << "  " << quote(d.rays()[i]) << " [label=" << quote(d.rays()[i]) << "];\n";
  for (int i = 0; i < d.size(); ++i)
    for (int k = 0; k < d.size(); ++k)
      if (d.arrow(i, k))
        out << "  " << quote(d.rays()[i]) << " -> " << quote(d.rays()[k])
            << " [label=" << quote(rat_str(d.t()[i][k])) << "];\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const ParsedDocument& doc) {
  if (doc.is_surface()) return export_dot(doc.name, doc.configuration());
  return export_dot(doc.name, doc.diagram());
}

// ------------------------------------------------------------------ reports

namespace {

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string signature_str(const Signature& s) {
  return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_zero) + "," +
         std::to_string(s.n_minus) + ")";
}

void render_surface_classify(std::ostringstream& text, Json& json, const ParsedDocument& doc,
                             int max_subset) {
  const Configuration& c = doc.configuration();
  const Signature sig = signature(c.gram());
  const SurfaceInvariants inv = surface_invariants(c);
  const CurveGraph graph(c.gram());

  text << "configuration: " << doc.name << " (surface)\n";
  text << "curves: " << c.size() << "\n";
  text << "labels: " << join_labels(c.labels(), [&] {
    std::vector<int> all(c.size());
    for (int i = 0; i < c.size(); ++i) all[i] = i;
    return all;
  }()) << "\n";
  text << "gram inertia: " << signature_str(sig) << "\n";
  text << "rho (span rank): " << inv.rho << "\n";
  text << "delta (max -E^2): " << inv.delta.get_str() << "\n";
  if (inv.per_curve_genus) {
    text << "genus p_a per curve:";
    for (const Int& g : *inv.per_curve_genus) text << " " << g.get_str();
    text << " (p = " << inv.p->get_str() << ")\n";
  } else {
    text << "genus p_a: n/a (no canonical pairings)\n";
  }
  const auto diam = graph.diameter();
  text << "graph: " << graph.edge_count() << " edge(s), " << graph.component_count()
       << " component(s), connected: " << yesno(graph.connected()) << ", diameter: "
       << (diam ? std::to_string(*diam) : std::string("infinite")) << "\n";

  json["name"] = doc.name;
  json["kind"] = "surface";
  json["curves"] = c.size();
  json["gram_inertia"] = signature_str(sig);
  json["rho"] = inv.rho;
  json["delta"] = int_to_json(inv.delta);
  if (inv.per_curve_genus) {
    Json genus = Json::array();
    for (const Int& g : *inv.per_curve_genus) genus.push_back(int_to_json(g));
    json["genus"] = std::move(genus);
    json["p"] = int_to_json(*inv.p);
  }
  json["graph"] = Json{{"edges", graph.edge_count()},
                       {"components", graph.component_count()},
                       {"connected", graph.connected()}};
  if (diam) json["graph"]["diameter"] = *diam;

  const SubsetEnumeration all = enumerate_subsets(c, std::nullopt, max_subset);
  long n_elliptic = 0, n_parabolic = 0, n_lanner = 0, n_hyp = 0;
  Json lanner_list = Json::array();
  std::ostringstream lanner_text;
  for (const auto& sc : all.matches) {
    switch (sc.verdict) {
      case SubsetVerdict::elliptic: ++n_elliptic; break;
      case SubsetVerdict::parabolic: ++n_parabolic; break;
      case SubsetVerdict::lanner:
        ++n_lanner;
        lanner_list.push_back(subset_json(sc.subset));
        lanner_text << "  {" << join_labels(c.labels(), sc.subset) << "}\n";
        break;
      case SubsetVerdict::hyperbolic_non_minimal: ++n_hyp; break;
    }
  }
  text << "subset inventory up to size " << all.max_size
       << " (complete: " << yesno(all.complete) << "):\n";
  text << "  elliptic: " << n_elliptic << "\n";
  text << "  parabolic: " << n_parabolic << "\n";
  text << "  lanner: " << n_lanner << "\n";
  text << "  hyperbolic-non-minimal: " << n_hyp << "\n";
  if (n_lanner > 0) {
    text << "lanner subsets:\n" << lanner_text.str();
  } else {
    text << "lanner subsets: none up to the size cap\n";
  }

  json["subset_inventory"] = Json{{"max_size", all.max_size},
                                  {"complete", all.complete},
                                  {"elliptic", n_elliptic},
                                  {"parabolic", n_parabolic},
                                  {"lanner", n_lanner},
                                  {"hyperbolic_non_minimal", n_hyp}};
  json["lanner_subsets"] = std::move(lanner_list);
}

void render_cy3_classify(std::ostringstream& text, Json& json, const ParsedDocument& doc,
                         int max_subset) {
  const OrientedDiagram& d = doc.diagram();
  const DivisorInjectivity inj = check_divisor_injectivity(d);
  const OrientedDistances dist = oriented_distances(d);
  const DiagramVerdict fam = recognize_elliptic_family(d);
  const DiagramVerdict eset = recognize_e_set(d);

  text << "diagram: " << doc.name << " (3-fold oriented)\n";
  text << "rays: " << d.size() << "\n";
  text << "divisor map injective: " << yesno(inj.injective) << "\n";
  if (!inj.injective) {
    text << "divisor collisions:\n";
    for (const auto& [a, b] : inj.collisions)
      text << "  " << d.rays()[a] << " and " << d.rays()[b] << " share divisor "
           << d.divisor_ids()[a] << "\n";
  }
  text << "single arrows present: " << yesno(d.has_single_arrow()) << "\n";
  text << "directed diameter: " << (dist.all_reachable ? std::to_string(*dist.diameter)
                                                       : std::string("infinite"))
       << " (all pairs reachable: " << yesno(dist.all_reachable) << ")\n";
  text << "elliptic family: "
       << (fam.kind == DiagramVerdict::Kind::elliptic_family ? fam.name
                                                             : "none (" + fam.reason + ")")
       << "\n";
  text << "minimal hyperbolic pattern: "
       << (eset.kind == DiagramVerdict::Kind::e_set ? eset.name : "none (" + eset.reason + ")")
       << "\n";

  json["name"] = doc.name;
  json["kind"] = "cy3";
  json["rays"] = d.size();
  json["divisor_injective"] = inj.injective;
  Json collisions = Json::array();
  for (const auto& [a, b] : inj.collisions) collisions.push_back(Json::array({a, b}));
  json["divisor_collisions"] = std::move(collisions);
  json["single_arrows"] = d.has_single_arrow();
  json["all_reachable"] = dist.all_reachable;
  if (dist.all_reachable) json["directed_diameter"] = *dist.diameter;
  json["elliptic_family"] = fam.kind == DiagramVerdict::Kind::elliptic_family ? Json(fam.name)
                                                                              : Json(nullptr);
  json["e_set_pattern"] = eset.kind == DiagramVerdict::Kind::e_set ? Json(eset.name)
                                                                   : Json(nullptr);

  // per-subset inventory of family / pattern matches
  const int n = d.size();
  const int cap = std::min(max_subset, n);
  Json families = Json::array();
  Json esets = Json::array();
  std::ostringstream fam_text, eset_text;
  for (int size = 1; size <= cap; ++size) {
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      const OrientedDiagram sub = d.induced(comb);
      const DiagramVerdict f = recognize_elliptic_family(sub);
      if (f.kind == DiagramVerdict::Kind::elliptic_family && size < n) {
        families.push_back(Json{{"subset", comb}, {"family", f.name}});
      }
      const DiagramVerdict p = recognize_e_set(sub);
      if (p.kind == DiagramVerdict::Kind::e_set) {
        esets.push_back(Json{{"subset", comb}, {"pattern", p.name}});
        eset_text << "  {" << join_labels(d.rays(), comb) << "}: " << p.name << "\n";
      }
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  text << "proper elliptic subdiagrams up to size " << cap << ": " << families.size() << "\n";
  text << "minimal hyperbolic subdiagrams up to size " << cap << ": " << esets.size() << "\n";
  if (!esets.empty()) text << eset_text.str();
  json["elliptic_subdiagrams"] = std::move(families);
  json["e_set_subdiagrams"] = std::move(esets);
  json["subset_cap"] = cap;
}

}  // namespace

Rendered render_classify(const ParsedDocument& doc, int max_subset) {
  std::ostringstream text;
  Json json;
  if (doc.is_surface())
    render_surface_classify(text, json, doc, max_subset);
  else
    render_cy3_classify(text, json, doc, max_subset);
  return Rendered{text.str(), std::move(json)};
}

Rendered render_cone(const ParsedDocument& doc, int dim_cap) {
  const Configuration& c = doc.configuration();
  const ConeDescription cone = dual_cone(c);
  const VertexKindReport kinds = vertex_kinds(cone);
  const FaceLattice fl = face_lattice(cone, dim_cap);
  const SimplicialityReport simp = simpliciality_report(fl, cone);
  const FacePolynomial poly = face_polynomial(fl);

  std::ostringstream text;
  Json json;
  text << "cone report: " << doc.name << "\n";
  text << "span rank: " << cone.ambient_dim << "\n";
  text << "basis curves: " << join_labels(c.labels(), cone.basis) << "\n";
  text << "nef extreme rays: " << cone.nef_rays.size() << "\n";
  json["name"] = doc.name;
  json["span_rank"] = cone.ambient_dim;
  json["basis"] = cone.basis;
  json["lineality_dim"] = cone.lineality_dim;

  Json rays = Json::array();
  int finite = 0, infinite = 0, outside = 0;
  for (size_t i = 0; i < cone.nef_rays.size(); ++i) {
    Json ray;
    Json coords = Json::array();
    for (const Rat& q : cone.nef_rays[i]) coords.push_back(rat_str(q));
    ray["coords"] = std::move(coords);
    ray["norm2"] = rat_str(cone.norm2(cone.nef_rays[i]));
    ray["kind"] = vertex_kind_name(kinds.kinds[i]);
    rays.push_back(std::move(ray));
    switch (kinds.kinds[i]) {
      case VertexKind::finite: ++finite; break;
      case VertexKind::infinite: ++infinite; break;
      case VertexKind::outside: ++outside; break;
    }
  }
  json["rays"] = std::move(rays);
  text << "ray kinds: finite " << finite << ", infinite " << infinite << ", outside " << outside
       << "\n";
  text << "finite volume: " << yesno(kinds.finite_volume)
       << "; all vertices finite: " << yesno(kinds.all_finite) << "\n";
  json["finite_volume"] = kinds.finite_volume;
  json["all_finite"] = kinds.all_finite;

  text << "face counts alpha (dim 0.." << fl.polytope_dim() - 1 << " of M):";
  Json alpha = Json::array();
  for (const Int& a : fl.alpha()) {
    text << " " << a.get_str();
    alpha.push_back(int_to_json(a));
  }
  text << "\n";
  json["alpha"] = std::move(alpha);

  text << "simple at vertices: " << yesno(simp.simple_at_vertices)
       << "; simplicial in edges: " << yesno(simp.simplicial_in_edges)
       << "; acute angles: " << yesno(simp.acute) << "\n";
  json["simple_at_vertices"] = simp.simple_at_vertices;
  json["simplicial_in_edges"] = simp.simplicial_in_edges;
  json["acute"] = simp.acute;

  text << "R(s) = " << poly.pretty() << "\n";
  text << "reversible: " << yesno(poly.reversible)
       << "; positive coefficients: " << yesno(poly.positive_coefficients) << "\n";
  Json coeffs = Json::array();
  for (const Int& z : poly.coefficients) coeffs.push_back(int_to_json(z));
  json["face_polynomial"] = Json{{"coefficients", std::move(coeffs)},
                                 {"pretty", poly.pretty()},
                                 {"reversible", poly.reversible},
                                 {"positive_coefficients", poly.positive_coefficients}};

  if (fl.polytope_dim() >= 3) {
    const FaceAverages avg = face_averages(fl);
    text << "A^{0,2} = " << rat_str(*avg.a02) << " (bound " << rat_str(*avg.bound02)
         << ", satisfied: " << yesno(*avg.ok02) << ")\n";
    json["a02"] = rat_str(*avg.a02);
    json["a02_bound"] = rat_str(*avg.bound02);
    json["a02_ok"] = *avg.ok02;
    if (avg.a23) {
      text << "A^{2,3} = " << rat_str(*avg.a23) << " (bound " << rat_str(*avg.bound23)
           << ", satisfied: " << yesno(*avg.ok23) << ")\n";
      json["a23"] = rat_str(*avg.a23);
      json["a23_bound"] = rat_str(*avg.bound23);
      json["a23_ok"] = *avg.ok23;
    } else {
      text << "A^{2,3}: n/a (dimension < 4)\n";
    }
  } else {
    text << "face averages: n/a (dimension < 3)\n";
  }
  return Rendered{text.str(), std::move(json)};
}

Rendered render_narrow(const ParsedDocument& doc) {
  const Configuration& c = doc.configuration();
  const NarrowPartsResult r = narrow_parts_search(c);

  std::ostringstream text;
  Json json;
  text << "narrow parts search: " << doc.name << "\n";
  text << "rho: " << signature(c.gram()).rank() << "\n";
  if (r.low_rank_warning) text << "warning: rho < 3, outside the intended frame\n";
  text << "success: " << yesno(r.success) << "\n";
  text << "chosen: {" << join_labels(c.labels(), r.chosen) << "}\n";
  text << "max ratio 4(Ei.Ej)^2/(Ei^2 Ej^2): " << rat_str(r.max_ratio)
       << " (< 3844: " << yesno(r.ratio_ok) << ")\n";
  text << "spans rank rho: " << yesno(r.spans) << "\n";
  text << "connected diagram: " << yesno(r.connected) << "\n";

  json["name"] = doc.name;
  json["success"] = r.success;
  json["chosen"] = r.chosen;
  json["max_ratio"] = rat_str(r.max_ratio);
  json["ratio_ok"] = r.ratio_ok;
  json["spans"] = r.spans;
  json["connected"] = r.connected;
  json["low_rank_warning"] = r.low_rank_warning;

  if (r.success) {
    const AmpleCandidate h = build_ample_candidate(c, r.chosen);
    text << "ample candidate H = sum a_i E_i over the chosen curves:\n";
    text << "  a =";
    Json coeffs = Json::array();
    for (const Int& a : h.coefficients) {
      text << " " << a.get_str();
      coeffs.push_back(int_to_json(a));
    }
    text << "\n  H^2 = " << h.h_squared.get_str() << "\n";
    Int min_pairing = h.pairings.front();
    Json pairings = Json::array();
    for (const Int& p : h.pairings) {
      min_pairing = std::min(min_pairing, p);
      pairings.push_back(int_to_json(p));
    }
    text << "  min H.E over the configuration = " << min_pairing.get_str() << "\n";
    json["ample"] = Json{{"coefficients", std::move(coeffs)},
                         {"h_squared", int_to_json(h.h_squared)},
                         {"pairings", std::move(pairings)}};
  } else {
    text << "failure certificate: best spanning candidate shown above; failed clause(s):";
    if (!r.ratio_ok) text << " ratio";
    if (!r.connected) text << " connectivity";
    text << "\n";
  }
  return Rendered{text.str(), std::move(json)};
}

Rendered render_bounds(const ParsedDocument& doc, int max_subset,
                       std::optional<int> d_override, DistanceMode mode) {
  const BoundReport r = doc.is_surface()
                            ? bound_report(doc.configuration(), max_subset, d_override, mode)
                            : bound_report(doc.diagram(), max_subset, d_override, mode,
                                           doc.rho_hint());

  std::ostringstream text;
  Json json;
  const char* mode_name = r.mode == VarietyKind::surface ? "surface" : "cy3";
  text << "bound report: " << doc.name << " (" << mode_name << " mode, "
       << distance_mode_name(r.distance_mode) << " distances)\n";
  text << "subset cap: " << r.max_size << " (complete: " << yesno(r.complete) << ")\n";
  text << "minimal hyperbolic subsets found: " << r.minimal_hyperbolic_count;
  text << (r.mode == VarietyKind::surface ? " (lanner)\n" : " (e-sets)\n");
  text << "d (max diameter): " << r.diameter.d << (r.diameter.vacuous ? " [vacuous]" : "")
       << "\n";
  if (r.d_override) text << "d override in effect: " << *r.d_override << "\n";
  text << "d used: " << r.d_used << "\n";
  text << "elliptic subsets found: " << r.elliptic_count << "\n";
  text << "pair counting: "
       << (r.mode == VarietyKind::surface ? "unordered pairs {E1,E2}" : "ordered pairs (R1,R2)")
       << "\n";
  text << "C1 = " << rat_str(r.counting.c1) << ", C2 = " << rat_str(r.counting.c2)
       << (r.counting.vacuous ? " [vacuous]" : "") << "\n";
  text << "surface bound 96(C1+C2/3)+68 = " << rat_str(r.surface_bound) << " (strict)\n";
  text << "3-fold bound (16/3)C1+4C2+6 = " << rat_str(r.threefold_bound) << "\n";
  if (r.rho) {
    text << "rho = " << *r.rho << "; consistent with the " << mode_name
         << " bound: " << yesno(*r.consistent) << "\n";
  } else {
    text << "rho: not derivable from a diagram alone (supply meta.rho for the consistency "
            "check)\n";
  }
  if (!r.complete)
    text << "caveat: enumeration capped, C1/C2 are lower estimates of the true constants\n";

  json["name"] = doc.name;
  json["mode"] = mode_name;
  json["distance_mode"] = distance_mode_name(r.distance_mode);
  json["max_size"] = r.max_size;
  json["complete"] = r.complete;
  json["minimal_hyperbolic_count"] = r.minimal_hyperbolic_count;
  Json lanner = Json::array();
  for (const auto& s : r.minimal_hyperbolic_subsets) lanner.push_back(subset_json(s));
  json["minimal_hyperbolic_subsets"] = std::move(lanner);
  json["d"] = r.diameter.d;
  json["d_vacuous"] = r.diameter.vacuous;
  if (r.d_override) json["d_override"] = *r.d_override;
  json["d_used"] = r.d_used;
  json["elliptic_count"] = r.elliptic_count;
  json["c1"] = rat_str(r.counting.c1);
  json["c2"] = rat_str(r.counting.c2);
  json["counting_vacuous"] = r.counting.vacuous;
  if (!r.counting.c1_witness.empty()) json["c1_witness"] = r.counting.c1_witness;
  if (!r.counting.c2_witness.empty()) json["c2_witness"] = r.counting.c2_witness;
  json["surface_bound"] = rat_str(r.surface_bound);
  json["threefold_bound"] = rat_str(r.threefold_bound);
  if (r.rho) {
    json["rho"] = *r.rho;
    json["consistent"] = *r.consistent;
  }
  return Rendered{text.str(), std::move(json)};
}

Rendered render_cy3(const ParsedDocument& doc, const Cy3Flags& flags) {
  const OrientedDiagram& d = doc.diagram();
  const DivisorInjectivity inj = check_divisor_injectivity(d);
  const DiagramVerdict fam = recognize_elliptic_family(d);
  const DiagramVerdict eset = recognize_e_set(d);
  const BoundApplicability app =
      rho_bound_applicability(flags.has_small_ray, flags.has_low_kodaira_face,
                              flags.has_nef_d_with_d3_zero, flags.cone_finite);

  std::ostringstream text;
  Json json;
  text << "3-fold diagram report: " << doc.name << "\n";
  text << "rays: " << d.size() << "\n";
  text << "divisor map injective: " << yesno(inj.injective) << "\n";
  for (const auto& [a, b] : inj.collisions)
    text << "  collision: " << d.rays()[a] << " and " << d.rays()[b] << " share "
         << d.divisor_ids()[a] << "\n";
  text << "elliptic family: "
       << (fam.kind == DiagramVerdict::Kind::elliptic_family ? fam.name
                                                             : "none (" + fam.reason + ")")
       << "\n";
  text << "minimal hyperbolic pattern: "
       << (eset.kind == DiagramVerdict::Kind::e_set ? eset.name : "none (" + eset.reason + ")")
       << "\n";
  text << "Fano 3-fold bound rho <= 7 applicable: " << yesno(app.fano_bound_applicable) << "\n";
  for (const auto& e : app.fano_exceptions) text << "  exception: " << e << "\n";
  text << "Calabi-Yau 3-fold bound rho <= 40 applicable: " << yesno(app.cy3_bound_applicable)
       << "\n";
  for (const auto& e : app.cy3_exceptions) text << "  exception: " << e << "\n";

  json["name"] = doc.name;
  json["rays"] = d.size();
  json["divisor_injective"] = inj.injective;
  json["elliptic_family"] = fam.kind == DiagramVerdict::Kind::elliptic_family ? Json(fam.name)
                                                                              : Json(nullptr);
  json["e_set_pattern"] = eset.kind == DiagramVerdict::Kind::e_set ? Json(eset.name)
                                                                   : Json(nullptr);
  json["fano_bound_applicable"] = app.fano_bound_applicable;
  json["fano_exceptions"] = app.fano_exceptions;
  json["cy3_bound_applicable"] = app.cy3_bound_applicable;
  json["cy3_exceptions"] = app.cy3_exceptions;
  json["fano_rho_bound"] = ReferenceConstants::fano3fold_rho_bound;
  json["cy3_rho_bound"] = ReferenceConstants::cy3_rho_bound;
  return Rendered{text.str(), std::move(json)};
}

Rendered render_catalog_entry(const CatalogEntry& e) {
  std::ostringstream text;
  if (const auto* table = std::get_if<ReferenceTable>(&e.payload)) {
    text << "catalog entry: " << e.name << " (reference table)\n";
    text << "rho   count\n";
    for (const auto& [rho, count] : table->rows) {
      text << rho;
      for (size_t pad = rho.size(); pad < 6; ++pad) text << ' ';
      text << count << "\n";
    }
  } else if (const auto* c = std::get_if<Configuration>(&e.payload)) {
    text << "catalog entry: " << e.name << " (surface configuration, " << c->size()
         << " curves)\n";
  } else {
    const auto& d = std::get<OrientedDiagram>(e.payload);
    text << "catalog entry: " << e.name << " (3-fold oriented diagram, " << d.size()
         << " rays)\n";
  }
  for (const auto& note : e.provenance) text << "note: " << note << "\n";
  return Rendered{text.str(), catalog_entry_to_json(e)};
}

Rendered render_catalog_list() {
  std::ostringstream text;
  Json json = Json::array();
  text << "catalog entries:\n";
  for (const auto& name : catalog_names()) {
    text << "  " << name << "\n";
    json.push_back(name);
  }
  return Rendered{text.str(), std::move(json)};
}

}  // namespace moricone
