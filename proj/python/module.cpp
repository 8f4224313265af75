// module.cpp -- pybind11 bindings. Exact rationals cross the boundary as
// canonical "p/q" strings; full analyses accept and return the same JSON
// documents the CLI uses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moricone/io.hpp"

namespace py = pybind11;
using namespace moricone;

namespace {

GramMatrix gram_from_lists(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> entries;
  entries.reserve(rows.size());
  for (const auto& row : rows) entries.emplace_back(row.begin(), row.end());
  return GramMatrix(std::move(entries));
}

py::tuple signature_py(const std::vector<std::vector<long>>& gram) {
  const Signature s = signature(gram_from_lists(gram));
  return py::make_tuple(s.n_plus, s.n_zero, s.n_minus);
}

std::string definiteness_py(const std::vector<std::vector<long>>& gram) {
  return definiteness_name(definiteness(gram_from_lists(gram)));
}

std::string distance_surrogate_py(const std::vector<std::string>& x,
                                  const std::vector<std::string>& y,
                                  const std::vector<std::vector<long>>& gram) {
  QVec xv, yv;
  for (const auto& s : x) xv.push_back(parse_rat(s));
  for (const auto& s : y) yv.push_back(parse_rat(s));
  return rat_str(distance_surrogate(xv, yv, gram_from_lists(gram)).value);
}

std::string render(const Rendered& r, bool as_json) {
  return as_json ? dump_json(r.json) : r.text;
}

std::string classify_py(const std::string& doc, int max_subset, bool as_json) {
  return render(render_classify(parse_configuration(doc), max_subset), as_json);
}

std::string cone_py(const std::string& doc, int dim_cap, bool as_json) {
  return render(render_cone(parse_configuration(doc), dim_cap), as_json);
}

std::string narrow_py(const std::string& doc, bool as_json) {
  return render(render_narrow(parse_configuration(doc)), as_json);
}

std::string bounds_py(const std::string& doc, int max_subset, int d_override,
                      const std::string& distance_mode, bool as_json) {
  std::optional<int> d;
  if (d_override >= 0) d = d_override;
  const DistanceMode mode =
      distance_mode == "ambient" ? DistanceMode::ambient : DistanceMode::induced;
  return render(render_bounds(parse_configuration(doc), max_subset, d, mode), as_json);
}

std::string cy3_py(const std::string& doc, bool small_ray, bool low_kodaira_face,
                   bool nef_d3_zero, bool cone_finite, bool as_json) {
  Cy3Flags flags;
  flags.has_small_ray = small_ray;
  flags.has_low_kodaira_face = low_kodaira_face;
  flags.has_nef_d_with_d3_zero = nef_d3_zero;
  flags.cone_finite = cone_finite;
  return render(render_cy3(parse_configuration(doc), flags), as_json);
}

std::string catalog_entry_py(const std::string& name) {
  return dump_json(catalog_entry_to_json(load_catalog(name)));
}

std::string export_dot_py(const std::string& doc) {
  return export_dot(parse_configuration(doc));
}

py::dict face_polynomial_py(const std::vector<long>& alpha) {
  std::vector<Int> a(alpha.begin(), alpha.end());
  const FacePolynomial p = face_polynomial(a);
  py::list coefficients;
  for (const Int& c : p.coefficients) coefficients.append(py::cast(c.get_str()));
  py::dict out;
  out["coefficients"] = coefficients;
  out["pretty"] = p.pretty();
  out["reversible"] = p.reversible;
  out["positive_coefficients"] = p.positive_coefficients;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact analysis of exceptional-curve and extremal-ray configurations";

  m.def("signature", &signature_py, py::arg("gram"),
        "inertia (n_plus, n_zero, n_minus) of a symmetric integer matrix");
  m.def("definiteness", &definiteness_py, py::arg("gram"));
  m.def("distance_surrogate", &distance_surrogate_py, py::arg("x"), py::arg("y"),
        py::arg("gram"), "exact (x.y)^2/(x^2 y^2) as a rational string");
  m.def("surface_rho_bound",
        [](const std::string& c1, const std::string& c2) {
          return rat_str(surface_rho_bound(parse_rat(c1), parse_rat(c2)));
        },
        py::arg("c1"), py::arg("c2"), "96(C1 + C2/3) + 68, exact");
  m.def("threefold_rho_bound",
        [](const std::string& c1, const std::string& c2) {
          return rat_str(threefold_rho_bound(parse_rat(c1), parse_rat(c2)));
        },
        py::arg("c1"), py::arg("c2"), "(16/3) C1 + 4 C2 + 6, exact");
  m.def("face_polynomial", &face_polynomial_py, py::arg("alpha"));

  m.def("classify", &classify_py, py::arg("doc"), py::arg("max_subset") = 5,
        py::arg("as_json") = false);
  m.def("cone", &cone_py, py::arg("doc"), py::arg("dim_cap") = 12, py::arg("as_json") = false);
  m.def("narrow", &narrow_py, py::arg("doc"), py::arg("as_json") = false);
  m.def("bounds", &bounds_py, py::arg("doc"), py::arg("max_subset") = 5,
        py::arg("d_override") = -1, py::arg("distance_mode") = "induced",
        py::arg("as_json") = false);
  m.def("cy3", &cy3_py, py::arg("doc"), py::arg("small_ray") = false,
        py::arg("low_kodaira_face") = false, py::arg("nef_d3_zero") = false,
        py::arg("cone_finite") = true, py::arg("as_json") = false);

  m.def("catalog_names", [] { return catalog_names(); });
  m.def("catalog_entry", &catalog_entry_py, py::arg("name"), "catalog entry as a JSON string");
  m.def("export_dot", &export_dot_py, py::arg("doc"));
}
