#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ngc/cli.hpp"
#include "ngc/errors.hpp"
#include "ngc/oracle.hpp"
#include "ngc/serialize.hpp"

namespace py = pybind11;
using namespace ngc;

namespace {

MonoidalPtr select(int rank, const std::string& form, int tau_sign) {
  RunConfig cfg;
  cfg.rank = rank;
  cfg.form = form;
  cfg.tau_sign = tau_sign;
  return select_monoidal(cfg);
}

std::string classify(int rank, const std::string& form, int tau_sign) {
  const auto cat = select(rank, form, tau_sign);
  py::gil_scoped_release release;
  return dump(to_json(classification_document(cat, enumerate_braidings(cat, default_threads()))));
}

std::string verify(const std::string& text) {
  const Document doc = document_from_json(parse_json(text));
  py::gil_scoped_release release;
  const int threads = default_threads();
  const auto pentagon = verify_pentagon(*doc.monoidal, threads);
  const HexagonSystem system(doc.monoidal);
  Json braidings = Json::array();
  bool passed = pentagon.passed;
  for (const auto& rec : doc.braidings) {
    const auto reduced = verify_hexagons_reduced(rec.data);
    const auto direct = verify_hexagons_direct(rec.data, &system, threads);
    Json failed = Json::array();
    for (const auto& f : reduced.failures) {
      if (failed.empty() || failed.back() != f.equation) failed.push_back(f.equation);
    }
    bool twists_ok = true;
    if (rec.twists) {
      for (const auto& t : *rec.twists) twists_ok = twists_ok && check_twist(rec.data, t).passed();
    }
    const bool ok = reduced.passed && direct.passed && twists_ok;
    passed = passed && ok;
    braidings.push_back(Json{{"reduced", reduced.passed},
                             {"failed_equations", failed},
                             {"direct", direct.passed},
                             {"twists", twists_ok},
                             {"passed", ok}});
  }
  return dump(Json{{"pentagon", pentagon.passed}, {"braidings", braidings}, {"passed", passed}});
}

std::string export_monoidal(int rank, const std::string& form, int tau_sign) {
  return dump(to_json(*select(rank, form, tau_sign)));
}

std::string obstruct(const std::vector<int>& factors) {
  const GroupSpec group(factors);
  const auto o = braidability_obstruction(group);
  Json j{{"group", group.to_string()}, {"braidable", o.braidable}};
  if (o.witness) {
    j["witness"] = Json{{"element", group.key(o.witness->element)},
                        {"order", o.witness->order},
                        {"trivialized", group.key(o.witness->trivialized)},
                        {"chain", o.witness->chain}};
  }
  return dump(j);
}

std::string compare(int rank, const std::string& form, int tau_sign) {
  const auto cat = select(rank, form, tau_sign);
  py::gil_scoped_release release;
  const auto cmp = oracle_compare(cat, default_threads());
  return dump(Json{{"equal", cmp.equal},
                   {"oracle_count", cmp.oracle_count},
                   {"constructed_count", cmp.constructed_count},
                   {"nodes", cmp.stats.nodes},
                   {"summary", cmp.summary()}});
}

std::vector<std::vector<std::vector<int>>> forms(int rank) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& f : enumerate_forms(rank)) out.push_back(*f.binary_gram());
  return out;
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = run_cli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_ngc, m) {
  py::register_exception<Error>(m, "NgcError", PyExc_ValueError);
  m.def("classify", &classify, py::arg("rank"), py::arg("form") = "0", py::arg("tau_sign") = 1);
  m.def("verify", &verify, py::arg("document"));
  m.def("export_monoidal", &export_monoidal, py::arg("rank"), py::arg("form") = "0", py::arg("tau_sign") = 1);
  m.def("obstruct", &obstruct, py::arg("factors"));
  m.def("oracle_compare", &compare, py::arg("rank"), py::arg("form") = "0", py::arg("tau_sign") = 1);
  m.def("enumerate_forms", &forms, py::arg("rank"));
  m.def("run_cli", &cli, py::arg("args"));
}
