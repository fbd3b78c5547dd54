#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "psmonoid/conjugacy.hpp"
#include "psmonoid/insertion.hpp"
#include "psmonoid/presentation.hpp"
#include "psmonoid/shiftgraph.hpp"

namespace py = pybind11;
using namespace psmonoid;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Patience sorting monoids: insertion, rewriting, shift graphs, "
            "conjugacy";

  py::register_exception<guard_exceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  py::enum_<Variant>(m, "Variant")
      .value("left", Variant::left)
      .value("right", Variant::right);

  m.def("parse_variant", &parse_variant, py::arg("name"));
  m.def("variant_name", &variant_name, py::arg("variant"));

  py::class_<Word>(m, "Word")
      .def(py::init<>())
      .def(py::init<std::vector<Symbol>>(), py::arg("symbols"))
      .def_static("parse", [](const std::string& s) { return Word::parse(s); },
                  py::arg("text"))
      .def("__str__", &Word::str)
      .def("__repr__",
           [](const Word& w) { return "Word('" + w.str() + "')"; })
      .def("__len__", &Word::size)
      .def("__getitem__",
           [](const Word& w, std::size_t i) {
             if (i >= w.size()) throw py::index_error();
             return w[i];
           })
      .def("symbols", &Word::symbols)
      .def(py::self + py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Word& w) {
        return py::hash(py::tuple(py::cast(w.symbols())));
      });

  py::class_<Evaluation>(m, "Evaluation")
      .def(py::init<>())
      .def(py::init<std::vector<int>>(), py::arg("counts"))
      .def_static("parse",
                  [](const std::string& s) { return Evaluation::parse(s); },
                  py::arg("text"))
      .def_static("of", &Evaluation::of, py::arg("word"))
      .def("__str__", &Evaluation::str)
      .def("__repr__",
           [](const Evaluation& e) { return "Evaluation('" + e.str() + "')"; })
      .def("count", &Evaluation::count, py::arg("symbol"))
      .def_property_readonly("max_symbol", &Evaluation::max_symbol)
      .def_property_readonly("total", &Evaluation::total)
      .def("content", &Evaluation::content)
      .def("standard", &Evaluation::standard)
      .def("contiguous", &Evaluation::contiguous)
      .def("multiset", &Evaluation::multiset)
      .def("counts", &Evaluation::counts)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self);

  py::class_<Tableau>(m, "Tableau")
      .def(py::init<Variant>(), py::arg("variant"))
      .def(py::init<Variant, std::vector<Tableau::Column>>(),
           py::arg("variant"), py::arg("columns"))
      .def_property_readonly("variant", &Tableau::variant)
      .def("columns",
           [](const Tableau& t) { return t.columns(); })
      .def("empty", &Tableau::empty)
      .def("__len__", &Tableau::size)
      .def("bottom_row", &Tableau::bottom_row)
      .def("valid", &Tableau::valid)
      .def("dump", &Tableau::dump)
      .def_static("from_json",
                  [](const std::string& text) {
                    return Tableau::from_json(nlohmann::json::parse(text));
                  },
                  py::arg("text"))
      .def("__repr__",
           [](const Tableau& t) { return "Tableau(" + t.dump() + ")"; })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Tableau& t) { return TableauHash{}(t); });

  m.def("insert_word", &insert_word, py::arg("word"), py::arg("variant"));
  m.def("insert_symbol", &insert_symbol, py::arg("tableau"), py::arg("symbol"));
  m.def("column_reading", &column_reading, py::arg("tableau"));
  m.def("delayed_column_readings", &delayed_column_readings, py::arg("tableau"));
  m.def("words_of", &words_of, py::arg("tableau"),
        py::arg("guard") = kDefaultGuard);
  m.def("equivalent", &equivalent, py::arg("u"), py::arg("v"),
        py::arg("variant"));
  m.def("evaluation_of",
        py::overload_cast<const Word&>(&evaluation_of), py::arg("word"));
  m.def("evaluation_of",
        py::overload_cast<const Tableau&>(&evaluation_of), py::arg("tableau"));
  m.def("is_standard", &is_standard, py::arg("word"));
  m.def("rotations", &rotations, py::arg("word"));
  m.def("multinomial", &multinomial, py::arg("evaluation"));

  m.def("rewrite_neighbors", &rewrite_neighbors, py::arg("word"),
        py::arg("variant"));
  m.def("congruence_closure", &congruence_closure, py::arg("word"),
        py::arg("variant"), py::arg("guard") = kDefaultGuard);

  py::class_<ShiftGraph>(m, "ShiftGraph")
      .def_readonly("variant", &ShiftGraph::variant)
      .def_readonly("evaluation", &ShiftGraph::evaluation)
      .def_readonly("vertices", &ShiftGraph::vertices)
      .def_readonly("edges", &ShiftGraph::edges)
      .def("index_of", &ShiftGraph::index_of, py::arg("tableau"))
      .def("adjacency", &ShiftGraph::adjacency)
      .def("__repr__", [](const ShiftGraph& g) {
        std::ostringstream out;
        out << "ShiftGraph(" << g.evaluation.str() << ", "
            << g.vertices.size() << " vertices, " << g.edges.size()
            << " edges)";
        return out.str();
      });

  m.def("enumerate_class", &enumerate_class, py::arg("evaluation"),
        py::arg("variant"), py::arg("guard") = kDefaultGuard);
  m.def("class_graph", &class_graph, py::arg("evaluation"), py::arg("variant"),
        py::arg("guard") = kDefaultGuard);
  m.def("shift_neighbors", &shift_neighbors, py::arg("tableau"),
        py::arg("guard") = kDefaultGuard);
  m.def("component", &component, py::arg("tableau"),
        py::arg("guard") = kDefaultGuard);
  m.def("is_connected", &is_connected, py::arg("graph"));
  m.def("diameter", &diameter, py::arg("graph"), py::arg("parallelism") = 0u);
  m.def("distance", &psmonoid::distance, py::arg("graph"), py::arg("from_t"),
        py::arg("to_t"));
  m.def("eccentricity", &eccentricity, py::arg("graph"), py::arg("tableau"));
  m.def("central_element", &central_element, py::arg("evaluation"));
  m.def("repeated_min_target", &repeated_min_target, py::arg("evaluation"));
  m.def("to_dot", &to_dot, py::arg("graph"));
  m.def("graph_json",
        [](const ShiftGraph& g, std::optional<int> diam) {
          return to_json(g, diam).dump();
        },
        py::arg("graph"), py::arg("diameter") = std::nullopt);

  py::class_<ShiftPath>(m, "ShiftPath")
      .def_readonly("nodes", &ShiftPath::nodes)
      .def_readonly("witnesses", &ShiftPath::witnesses)
      .def("__len__", &ShiftPath::length);
  m.def("verify", &verify, py::arg("path"), py::arg("variant"));
  m.def("path_to_center", &path_to_center, py::arg("tableau"));
  m.def("path_to_center_repeated_min", &path_to_center_repeated_min,
        py::arg("tableau"));

  py::class_<CochargeSequence>(m, "CochargeSequence")
      .def_readonly("labels", &CochargeSequence::labels)
      .def("__str__", &CochargeSequence::str)
      .def("__repr__",
           [](const CochargeSequence& c) {
             return "CochargeSequence(" + c.str() + ")";
           })
      .def("well_formed", &CochargeSequence::well_formed)
      .def(py::self == py::self)
      .def(py::self != py::self);
  m.def("cocharge", &cocharge, py::arg("word"));
  m.def("cocharge_of_element", &cocharge_of_element, py::arg("tableau"));

  py::enum_<ConjugacyStatus>(m, "ConjugacyStatus")
      .value("related", ConjugacyStatus::related)
      .value("not_related", ConjugacyStatus::not_related)
      .value("not_related_up_to_bound",
             ConjugacyStatus::not_related_up_to_bound);

  py::class_<ConjugacyVerdict>(m, "ConjugacyVerdict")
      .def_readonly("status", &ConjugacyVerdict::status)
      .def_readonly("witness", &ConjugacyVerdict::witness)
      .def_readonly("bound", &ConjugacyVerdict::bound)
      .def("is_related", &ConjugacyVerdict::is_related)
      .def("json", [](const ConjugacyVerdict& v) { return v.to_json().dump(); })
      .def("__repr__", [](const ConjugacyVerdict& v) {
        std::string out = "ConjugacyVerdict(" +
                          std::string(status_name(v.status));
        if (v.witness) out += ", witness='" + v.witness->str() + "'";
        out += ")";
        return out;
      });

  m.def("psim", &psim, py::arg("u"), py::arg("v"),
        py::arg("guard") = kDefaultGuard);
  m.def("tpsim", &tpsim, py::arg("u"), py::arg("v"),
        py::arg("guard") = kDefaultGuard);
  m.def("evsim", &evsim, py::arg("u"), py::arg("v"));
  m.def("default_conjugacy_bound", &default_conjugacy_bound, py::arg("u"));
  m.def("lsim_bounded", &lsim_bounded, py::arg("u"), py::arg("v"),
        py::arg("max_g_len"));
  m.def("osim_bounded", &osim_bounded, py::arg("u"), py::arg("v"),
        py::arg("max_g_len"));

  py::class_<C2Code>(m, "C2Code")
      .def(py::init<std::vector<int>>(), py::arg("letters"))
      .def_readonly("letters", &C2Code::letters)
      .def("__str__", &C2Code::str)
      .def("__repr__", [](const C2Code& c) { return "C2Code(" + c.str() + ")"; })
      .def(py::self == py::self);
  m.def("c2_encode", &c2_encode, py::arg("code"));
  m.def("c2_decode", &c2_decode, py::arg("tableau"));
  m.def("lsim_in_c2", &lsim_in_c2, py::arg("a"), py::arg("b"));

  py::class_<TwoSymbolReport>(m, "TwoSymbolReport")
      .def_readonly("evaluation", &TwoSymbolReport::evaluation)
      .def_readonly("bound", &TwoSymbolReport::bound)
      .def_readonly("elements", &TwoSymbolReport::elements)
      .def_readonly("pairs_checked", &TwoSymbolReport::pairs_checked)
      .def_readonly("related_pairs", &TwoSymbolReport::related_pairs)
      .def_readonly("violations", &TwoSymbolReport::violations)
      .def("ok", &TwoSymbolReport::ok)
      .def("__str__", &TwoSymbolReport::str);
  m.def("two_symbol_tpsim_equals_lsim_check", &two_symbol_tpsim_equals_lsim_check,
        py::arg("evaluation"), py::arg("max_g_len"),
        py::arg("guard") = kDefaultGuard);

  m.attr("DEFAULT_GUARD") = kDefaultGuard;
}
