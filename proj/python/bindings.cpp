#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fuzzyds/belief.hpp"
#include "fuzzyds/bpa.hpp"
#include "fuzzyds/combine.hpp"
#include "fuzzyds/core.hpp"
#include "fuzzyds/error.hpp"
#include "fuzzyds/io.hpp"
#include "fuzzyds/legacy.hpp"
#include "fuzzyds/oracle.hpp"
#include "fuzzyds/tolerance.hpp"

namespace py = pybind11;
using namespace fuzzyds;

namespace {

using FocalPair = std::pair<FuzzySet, double>;

std::vector<Focal> to_focals(const std::vector<FocalPair>& pairs) {
  std::vector<Focal> out;
  out.reserve(pairs.size());
  for (const auto& [set, mass] : pairs) out.push_back(Focal{set, mass});
  return out;
}

std::vector<FocalPair> from_focals(const std::vector<Focal>& focals) {
  std::vector<FocalPair> out;
  out.reserve(focals.size());
  for (const Focal& f : focals) out.emplace_back(f.set, f.mass);
  return out;
}

std::string dump(const io::json& doc) { return doc.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Belief and plausibility of fuzzy sets under fuzzy evidence";

  static py::exception<Error> error_type(m, "FuzzyDSError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object type = error_type;
      py::object instance = type(std::string(to_string(e.kind())) + ": " + e.what());
      instance.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), instance.ptr());
    }
  });

  m.def("epsilon", &epsilon);
  m.def("set_epsilon", &set_epsilon, py::arg("eps"));

  py::class_<Frame>(m, "Frame")
      .def(py::init<std::vector<std::string>>(), py::arg("labels"))
      .def_property_readonly("labels", &Frame::labels)
      .def("index_of", &Frame::index_of, py::arg("label"))
      .def("__len__", &Frame::size)
      .def("__eq__", [](const Frame& a, const Frame& b) { return a == b; });

  py::class_<FuzzySet>(m, "FuzzySet")
      .def(py::init<Frame, std::vector<double>>(), py::arg("frame"), py::arg("grades"))
      .def_static("from_grades", &FuzzySet::from_grades, py::arg("frame"), py::arg("grades"))
      .def_static("crisp", &FuzzySet::crisp, py::arg("frame"), py::arg("members"))
      .def_static("empty", &FuzzySet::empty, py::arg("frame"))
      .def_static("whole", &FuzzySet::whole, py::arg("frame"))
      .def_property_readonly("frame", &FuzzySet::frame)
      .def_property_readonly("grades", [](const FuzzySet& s) {
        return std::vector<double>(s.grades().begin(), s.grades().end());
      })
      .def("grade", py::overload_cast<const std::string&>(&FuzzySet::grade, py::const_), py::arg("label"))
      .def_property_readonly("peak", &FuzzySet::peak)
      .def_property_readonly("is_crisp", &FuzzySet::is_crisp)
      .def_property_readonly("is_normal", &FuzzySet::is_normal)
      .def_property_readonly("is_empty", &FuzzySet::is_empty)
      .def("support", &FuzzySet::support)
      .def("approx_equal", &FuzzySet::approx_equal, py::arg("other"))
      .def("to_dict", [](const FuzzySet& s) {
        std::map<std::string, double> out;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (s.grade(i) > 0.0) out[s.frame().label(i)] = s.grade(i);
        }
        return out;
      });

  py::class_<Level>(m, "Level")
      .def_readonly("alpha", &Level::alpha)
      .def_readonly("cut", &Level::cut)
      .def_readonly("fraction", &Level::fraction);

  py::class_<Decomposition>(m, "Decomposition")
      .def_property_readonly("levels", &Decomposition::levels)
      .def("__len__", &Decomposition::size)
      .def("total_fraction", &Decomposition::total_fraction)
      .def("recompose", &Decomposition::recompose);

  m.def("alpha_cut", &alpha_cut, py::arg("set"), py::arg("alpha"));
  m.def("decompose", &decompose, py::arg("set"));
  m.def("compose_from_consonant", [](const std::vector<FocalPair>& focals) {
    auto converted = to_focals(focals);
    return compose_from_consonant(converted);
  }, py::arg("focals"));
  m.def("intersect_min", &intersect_min, py::arg("a"), py::arg("b"));
  m.def("complement", &complement, py::arg("set"));

  py::class_<Bpa>(m, "Bpa")
      .def(py::init([](Frame frame, const std::vector<FocalPair>& focals) {
             return Bpa(std::move(frame), to_focals(focals));
           }),
           py::arg("frame"), py::arg("focals"))
      .def_static("vacuous", &Bpa::vacuous, py::arg("frame"))
      .def_property_readonly("frame", &Bpa::frame)
      .def_property_readonly("focals", [](const Bpa& b) { return from_focals(b.focals()); })
      .def_property_readonly("is_crisp", &Bpa::is_crisp)
      .def("approx_equal", &Bpa::approx_equal, py::arg("other"))
      .def("__len__", &Bpa::size)
      .def("to_json", [](const Bpa& b) { return dump(io::to_json(b)); })
      .def_static("from_json", [](const std::string& text) {
        return io::bpa_from_json(io::json::parse(text));
      }, py::arg("text"));

  py::class_<CompatibilityRelation>(m, "CompatibilityRelation")
      .def(py::init<Frame, Frame, std::vector<double>>(), py::arg("source"), py::arg("target"),
           py::arg("possibilities"))
      .def_property_readonly("source", &CompatibilityRelation::source)
      .def_property_readonly("target", &CompatibilityRelation::target)
      .def_property_readonly("is_classic", &CompatibilityRelation::is_classic);

  py::class_<SourceDistribution>(m, "SourceDistribution")
      .def(py::init<Frame, std::vector<double>>(), py::arg("frame"), py::arg("probabilities"));

  m.def("granule", py::overload_cast<const CompatibilityRelation&, const std::string&>(&granule),
        py::arg("relation"), py::arg("source"));
  m.def("induce_bpa", &induce_bpa, py::arg("distribution"), py::arg("relation"));
  m.def("combine_relations", &combine_relations, py::arg("first"), py::arg("second"));

  py::class_<BeliefInterval>(m, "BeliefInterval")
      .def_readonly("bel", &BeliefInterval::bel)
      .def_readonly("pls", &BeliefInterval::pls)
      .def("__iter__", [](const BeliefInterval& i) {
        return py::iter(py::make_tuple(i.bel, i.pls));
      });

  m.def("mass_lower", &mass_lower, py::arg("query"), py::arg("focal"), py::arg("mass"));
  m.def("mass_upper", &mass_upper, py::arg("query"), py::arg("focal"), py::arg("mass"));
  m.def("bel", &bel, py::arg("bpa"), py::arg("query"));
  m.def("pls", &pls, py::arg("bpa"), py::arg("query"));
  m.def("interval", &interval, py::arg("bpa"), py::arg("query"));
  m.def("bel_crisp", &bel_crisp, py::arg("bpa"), py::arg("query"));
  m.def("pls_crisp", &pls_crisp, py::arg("bpa"), py::arg("query"));
  m.def("singleton_pls", &singleton_pls, py::arg("bpa"), py::arg("element"));

  py::class_<NormalizedFocal>(m, "NormalizedFocal")
      .def_readonly("set", &NormalizedFocal::set)
      .def_readonly("retained", &NormalizedFocal::retained)
      .def_readonly("discarded", &NormalizedFocal::discarded);

  py::class_<PairRecord>(m, "PairRecord")
      .def_readonly("left", &PairRecord::left)
      .def_readonly("right", &PairRecord::right)
      .def_readonly("peak", &PairRecord::peak)
      .def_readonly("retained", &PairRecord::retained);

  py::class_<CombinationReport>(m, "CombinationReport")
      .def_readonly("result", &CombinationReport::result)
      .def_readonly("conflict_mass", &CombinationReport::conflict_mass)
      .def_readonly("pair_log", &CombinationReport::pair_log);

  m.def("normalize_subnormal", &normalize_subnormal, py::arg("set"), py::arg("mass"));
  m.def("combine", &combine, py::arg("first"), py::arg("second"));
  m.def("ishizuka_equivalence_check", &ishizuka_equivalence_check, py::arg("first"),
        py::arg("second"));

  auto legacy_mod = m.def_submodule("legacy", "Earlier fuzzy extensions, for comparison");
  py::enum_<legacy::MeasureKind>(legacy_mod, "MeasureKind")
      .value("ISHIZUKA", legacy::MeasureKind::Ishizuka)
      .value("YAGER", legacy::MeasureKind::Yager)
      .value("OGAWA", legacy::MeasureKind::Ogawa);
  legacy_mod.def("expected_possibility", &legacy::expected_possibility, py::arg("bpa"), py::arg("query"));
  legacy_mod.def("expected_certainty", &legacy::expected_certainty, py::arg("bpa"), py::arg("query"));
  legacy_mod.def("inclusion", &legacy::inclusion, py::arg("kind"), py::arg("a"), py::arg("b"));
  legacy_mod.def("bel_via_inclusion", &legacy::bel_via_inclusion, py::arg("kind"), py::arg("bpa"),
                 py::arg("query"));
  legacy_mod.def("ishizuka_combine", &legacy::ishizuka_combine, py::arg("first"), py::arg("second"));

  auto oracle_mod = m.def_submodule("oracle", "Vertex-enumeration check of bel/pls");
  oracle_mod.def("oracle_bel_pls", &oracle::oracle_bel_pls, py::arg("bpa"), py::arg("query"));
  oracle_mod.def("sample_feasible", &oracle::sample_feasible, py::arg("bpa"), py::arg("query"),
                 py::arg("count"), py::arg("seed"));
}
