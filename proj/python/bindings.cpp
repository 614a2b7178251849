#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tiverify/corpus.hpp"
#include "tiverify/errors.hpp"
#include "tiverify/predicates.hpp"
#include "tiverify/structure.hpp"
#include "tiverify/sweep.hpp"
#include "tiverify/theorems.hpp"

namespace py = pybind11;
using namespace tiv;

namespace {

py::dict report_dict(const TheoremReport& rep) {
  py::dict d;
  d["group"] = rep.group_name;
  d["order"] = rep.group_order;
  d["prime"] = rep.prime;
  d["theorem"] = theorem_name(rep.theorem);
  d["lhs"] = rep.lhs;
  d["rhs_case"] = rep.rhs_case ? py::object(py::str(*rep.rhs_case)) : py::none();
  d["holds"] = rep.biconditional_holds;
  d["falsification_candidate"] = rep.falsification_candidate;
  d["unrestricted_lhs"] =
      rep.unrestricted_lhs ? py::object(py::bool_(*rep.unrestricted_lhs)) : py::none();
  d["witness_order"] =
      rep.witness_order ? py::object(py::int_(*rep.witness_order)) : py::none();
  d["witness"] = rep.witness ? py::object(py::str(*rep.witness)) : py::none();
  return d;
}

TheoremId parse_theorem(const std::string& name) {
  auto id = theorem_from_name(name);
  if (!id) throw py::value_error("unknown theorem: " + name);
  return *id;
}

}  // namespace

PYBIND11_MODULE(tiverify, m) {
  m.doc() = "finite-group engine checking which subgroups are TI, subnormal "
            "or of p'-order, and the classification theorems built on them";

  py::register_exception<Error>(m, "GroupError");

  py::class_<GroupTable>(m, "GroupTable")
      .def_property_readonly("order", &GroupTable::order)
      .def_property_readonly("name", &GroupTable::name)
      .def_property_readonly("provenance", &GroupTable::provenance)
      .def("mul", &GroupTable::mul)
      .def("inv", &GroupTable::inv)
      .def("conjugate", &GroupTable::conjugate, py::arg("x"), py::arg("g"))
      .def("element_order", &GroupTable::element_order)
      .def("prime_divisors",
           [](const GroupTable& g) { return prime_divisors(g.order()); })
      .def("__len__", &GroupTable::order)
      .def("__repr__", [](const GroupTable& g) {
        std::ostringstream out;
        out << "<GroupTable " << g.name() << " order " << g.order() << ">";
        return out.str();
      });

  m.def("group_from_generators",
        [](const std::vector<std::string>& cycles, const std::string& name) {
          std::vector<Permutation> gens;
          for (const auto& c : cycles) gens.push_back(Permutation::from_cycles(c));
          return group_from_generators(std::move(gens), name);
        },
        py::arg("cycles"), py::arg("name") = "G");

  m.def("cyclic", [](int n) { return build(GroupRecipe::make_cyclic(n)); });
  m.def("dihedral", [](int ngon) { return build(GroupRecipe::make_dihedral(ngon)); });
  m.def("dicyclic", [](int n) { return build(GroupRecipe::make_dicyclic(n)); });
  m.def("elementary_abelian",
        [](int q, int r) { return build(GroupRecipe::make_elementary_abelian(q, r)); });
  m.def("symmetric", [](int n) { return build(GroupRecipe::make_symmetric(n)); });
  m.def("alternating", [](int n) { return build(GroupRecipe::make_alternating(n)); });
  m.def("direct_product", [](const GroupTable& a, const GroupTable& b) {
    return direct_product_table(a, b, a.name() + "x" + b.name());
  });
  m.def("semidirect_cyclic",
        [](int q, int mm, int k, const std::string& name) {
          return build(GroupRecipe::make_semidirect(GroupRecipe::make_cyclic(q),
                                                    GroupRecipe::make_cyclic(mm),
                                                    power_action(q, k), name));
        },
        py::arg("kernel_order"), py::arg("complement_order"), py::arg("power"),
        py::arg("name") = "");

  m.def("enumerate_all_of_order",
        [](int n) { return enumerate_all_of_order(n); },
        "one representative per isomorphism class, n <= 12");
  m.def("default_corpus", [](int max_order) { return default_corpus({max_order, {}}); },
        py::arg("max_order") = 512);
  m.def("isomorphic", &isomorphic);

  m.def("analyze", [](const GroupTable& g) {
    GroupAnalysis a(g);
    py::dict d;
    d["subgroup_count"] = a.lattice().size();
    d["conjugacy_class_count"] = a.lattice().conjugacy_classes.size();
    py::list subs;
    for (int i = 0; i < a.lattice().size(); ++i) {
      const Subgroup& s = a.lattice().all[i];
      const auto& f = a.facts(i);
      py::dict sd;
      sd["order"] = s.order;
      sd["members"] = s.elements();
      sd["ti"] = f.ti;
      sd["subnormal"] = f.subnormal;
      sd["self_centralizing"] = f.self_centralizing;
      sd["nilpotent"] = f.nilpotent;
      sd["abelian"] = f.abelian;
      sd["normal"] = f.normal;
      subs.append(sd);
    }
    d["subgroups"] = subs;
    return d;
  });

  m.def("frobenius_decomposition", [](const GroupTable& g) -> py::object {
    SubgroupLattice lat = all_subgroups(g);
    auto fd = frobenius_decomposition(g, lat);
    if (!fd) return py::none();
    py::dict d;
    d["kernel_order"] = fd->kernel.order;
    d["complement_order"] = fd->complement.order;
    d["kernel_members"] = fd->kernel.elements();
    d["complement_members"] = fd->complement.elements();
    d["kernel_prime"] =
        fd->kernel_prime ? py::object(py::int_(*fd->kernel_prime)) : py::none();
    d["kernel_rank"] =
        fd->kernel_rank ? py::object(py::int_(*fd->kernel_rank)) : py::none();
    return d;
  });

  m.def("verify",
        [](const GroupTable& g, int p, const std::string& theorem) {
          GroupAnalysis a(g);
          return report_dict(verify(a, p, parse_theorem(theorem)));
        },
        py::arg("group"), py::arg("prime"), py::arg("theorem"));

  m.def("verify_all", [](const GroupTable& g) {
    GroupAnalysis a(g);
    py::list out;
    for (int p : prime_divisors(g.order()))
      for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T5,
                           TheoremId::T6, TheoremId::T7})
        out.append(report_dict(verify(a, p, id)));
    if (g.order() > 1) out.append(report_dict(verify_corollary1(a)));
    return out;
  });

  m.def("explain", [](const GroupTable& g, int p, const std::string& theorem) {
    return explain(g, p, parse_theorem(theorem));
  });
}
