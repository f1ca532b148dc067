#include "weyltab/boxes_a.hpp"
#include "weyltab/boxes_c.hpp"
#include "weyltab/json_io.hpp"
#include "weyltab/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace weyltab;

namespace pybind11::detail {

// Rat <-> fractions.Fraction
template <>
struct type_caster<weyltab::Rat> {
  PYBIND11_TYPE_CASTER(weyltab::Rat, const_name("Fraction"));

  bool load(handle src, bool) {
    if (py::isinstance<py::int_>(src)) {
      value = weyltab::Rat(src.cast<long long>());
      return true;
    }
    if (py::isinstance<py::str>(src)) {
      value = weyltab::rat_from_string(src.cast<std::string>());
      return true;
    }
    if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
      value = weyltab::Rat(src.attr("numerator").cast<long long>(),
                           src.attr("denominator").cast<long long>());
      return true;
    }
    return false;
  }

  static handle cast(const weyltab::Rat& r, return_value_policy, handle) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.numerator(), r.denominator()).release();
  }
};

}  // namespace pybind11::detail

namespace {

std::vector<Coords> rootset_coords(const RootSystem& rs, const RootSet& s) {
  std::vector<Coords> out;
  for (int p : s.indices()) out.push_back(rs.positive(p));
  return out;
}

RootSet rootset_from_coords(const RootSystem& rs, const std::vector<Coords>& roots) {
  RootSet s;
  for (const auto& c : roots) {
    int id = rs.lookup(c);
    if (id <= 0) throw InvalidInput("not a positive root");
    s.set(id - 1);
  }
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact combinatorics of placed shapes, standard tableaux and "
            "calibration graphs for the classical root systems";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);

  py::class_<RootSystem, std::shared_ptr<RootSystem>>(m, "RootSystem")
      .def_static(
          "build",
          [](const std::string& family, int rank) {
            if (family.size() != 1) throw InvalidInput("bad family: " + family);
            return std::const_pointer_cast<RootSystem>(
                RootSystem::build(family_from_char(family[0]), rank));
          },
          py::arg("family"), py::arg("rank"))
      .def_property_readonly("name", &RootSystem::name)
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("ambient", &RootSystem::ambient)
      .def_property_readonly("weyl_order", &RootSystem::weyl_order)
      .def_property_readonly("positive_roots", &RootSystem::positive_roots)
      .def_property_readonly("simple_roots",
                             [](const RootSystem& rs) {
                               std::vector<Coords> out;
                               for (int i = 0; i < rs.num_simple(); ++i)
                                 out.push_back(rs.simple(i));
                               return out;
                             })
      .def("__repr__", [](const RootSystem& rs) { return "<RootSystem " + rs.name() + ">"; });

  py::class_<WeylElement>(m, "WeylElement")
      .def(py::init<std::vector<int>>())
      .def_property_readonly("one_line", &WeylElement::one_line)
      .def("act", [](const WeylElement& w, const Weight& x) { return w.act(x); })
      .def("inverse", &WeylElement::inverse)
      .def("__mul__", &WeylElement::operator*)
      .def("__eq__", &WeylElement::operator==)
      .def("__repr__", [](const WeylElement& w) { return w.to_string(); });

  py::class_<PlacedShape>(m, "PlacedShape")
      .def_static(
          "make",
          [](std::shared_ptr<RootSystem> rs, const Weight& gamma,
             const std::vector<Coords>& j) {
            return PlacedShape::make(rs, gamma, rootset_from_coords(*rs, j));
          },
          py::arg("rs"), py::arg("gamma"), py::arg("J") = std::vector<Coords>{})
      .def_property_readonly("gamma", [](const PlacedShape& s) { return s.gamma; })
      .def_property_readonly("Z", [](const PlacedShape& s) { return rootset_coords(*s.rs, s.Z); })
      .def_property_readonly("P", [](const PlacedShape& s) { return rootset_coords(*s.rs, s.P); })
      .def_property_readonly("J", [](const PlacedShape& s) { return rootset_coords(*s.rs, s.J); })
      .def_property_readonly("nonempty_condition",
                             [](const PlacedShape& s) {
                               return nonemptiness_condition(*s.rs, s.Z, s.J);
                             })
      .def_property_readonly("is_ribbon",
                             [](const PlacedShape& s) { return is_ribbon(*s.rs, s.gamma); })
      .def("to_json", [](const PlacedShape& s) { return shape_to_json(s).dump(); });

  m.def("rho", &rho);
  m.def("weight_from_pairings", &weight_from_pairings);
  m.def("dominant_representative",
        [](const RootSystem& rs, const Weight& g) { return dominant_representative(rs, g); });

  py::class_<WeylGroup>(m, "WeylGroup")
      .def(py::init([](std::shared_ptr<RootSystem> rs, long long cap) {
             return new WeylGroup(rs, cap);
           }),
           py::arg("rs"), py::arg("cap") = kDefaultGroupCap)
      .def_property_readonly("size", &WeylGroup::size)
      .def("element", &WeylGroup::element)
      .def("standard_tableaux",
           [](const WeylGroup& W, const PlacedShape& s) {
             return standard_tableaux(W, s.gamma, s.J);
           })
      .def("tableau_counts_by_shape", [](const WeylGroup& W, const Weight& gamma) {
        py::list out;
        for (const auto& [J, members] : tableau_buckets(W, gamma)) {
          py::dict d;
          d["J"] = rootset_coords(W.rs(), J);
          d["count"] = members.size();
          out.append(d);
        }
        return out;
      });

  m.def("calibration_components", [](std::shared_ptr<RootSystem> rs, const Weight& gamma) {
    auto g = build_calibration_graph(rs, gamma);
    label_components(g);
    py::dict out;
    out["vertices"] = g.vertices;
    out["edges"] = g.edges;
    py::list comps;
    for (int c = 0; c < g.num_components(); ++c) {
      py::dict d;
      d["size"] = g.component_sizes[c];
      d["J"] = rootset_coords(*rs, g.component_labels[c]);
      comps.append(d);
    }
    out["components"] = comps;
    return out;
  });

  m.def("count_shi_dominant", &count_shi_dominant_intersections);
  m.def("shi_dominant_formula", &shi_dominant_formula);
  m.def("count_calibration_classes",
        [](int ambient) {
          WeylGroup W(RootSystem::build(Family::A, ambient - 1));
          return count_calibration_classes(W);
        },
        py::arg("ambient"));
  m.def("calibration_class_series", &calibration_class_series, py::arg("n"),
        py::arg("reciprocal"));

  m.def("skew_tableaux_words",
        [](const std::vector<int>& lambda, const std::vector<int>& mu, int offset) {
          auto ps = boxes_a::skew_to_placed_shape(lambda, mu, offset);
          std::vector<std::vector<int>> out;
          for (const auto& t : boxes_a::classical_standard_tableaux(lambda, mu))
            out.push_back(boxes_a::tableau_word(t).one_line());
          return py::make_tuple(ps.gamma, rootset_coords(*ps.rs, ps.J), out);
        },
        py::arg("lambda_"), py::arg("mu") = std::vector<int>{}, py::arg("offset") = 0);

  m.def("render_shape", [](const PlacedShape& s) {
    const RootSystem& rs = *s.rs;
    if (rs.family() == Family::A) {
      Book book = boxes_a::build_book(s.gamma, s.J);
      return render_book(book, LabelMode::Content);
    }
    if (rs.family() == Family::C) {
      auto norm = boxes_c::normalize_gamma_c(rs, s.gamma);
      RootSet J2;
      for (int p : s.J.indices())
        J2.set(std::abs(rs.lookup(norm.w.act(rs.positive(p)))) - 1);
      Book book = boxes_c::build_book(rs, norm.arranged, J2);
      return render_book(book, LabelMode::Content);
    }
    throw InvalidInput("no box model for this type");
  });

  m.attr("__version__") = "1.0.0";
}
