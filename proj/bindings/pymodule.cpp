#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "kottwitz/averaging.hpp"
#include "kottwitz/characters.hpp"
#include "kottwitz/galois.hpp"
#include "kottwitz/groups.hpp"
#include "kottwitz/kottwitz.hpp"
#include "kottwitz/render.hpp"
#include "kottwitz/tilting.hpp"
#include "kottwitz/weights.hpp"

namespace py = pybind11;
using namespace kottwitz;

namespace {

py::object to_py(const ojson& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

UnramifiedCharacter character_from(const CoinvariantLattice& lat,
                                   const std::vector<std::string>& values) {
  if (values.size() != lat.inv_basis.size())
    throw std::invalid_argument("expected " + std::to_string(lat.inv_basis.size()) +
                                " character values (one per invariant basis vector)");
  UnramifiedCharacter chi;
  for (const std::string& s : values) chi.values.push_back(CharacterValue::parse(s));
  return chi;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Kottwitz-set, weight, character-ladder, tilting and averaging computations";

  m.def(
      "describe",
      [](const std::string& group) {
        const GroupSpec g = build_group(group);
        const CoinvariantLattice lat = coinvariants(g.rd, g.twist);
        return to_py(describe_doc(g, lat));
      },
      py::arg("group"));

  m.def(
      "bgmu",
      [](const std::string& group, const Vec& mu) {
        const GroupSpec g = build_group(group);
        const CoinvariantLattice lat = coinvariants(g.rd, g.twist);
        const std::vector<KottwitzPoint> points = enumerate_bgmu_un(lat, mu);
        std::vector<Polygon> polys;
        const bool is_gln = g.rd.type_tag.rfind("GL", 0) == 0 && lat.twist.order == 1;
        if (is_gln) polys = bgmu_gln(g.rd.rank, mu);
        return to_py(bgmu_doc(g, lat, mu, points, is_gln ? &polys : nullptr));
      },
      py::arg("group"), py::arg("mu"));

  m.def(
      "weights",
      [](const std::string& group, const Vec& mu, bool coinvariant) {
        const GroupSpec g = build_group(group);
        const CoinvariantLattice lat = coinvariants(g.rd, g.twist);
        const WeightSystem ws = freudenthal(g.rd, mu);
        return to_py(weights_doc(g.rd, ws, coinvariant ? &lat : nullptr));
      },
      py::arg("group"), py::arg("mu"), py::arg("coinvariant") = false);

  m.def(
      "check_character",
      [](const std::string& group, const std::vector<std::string>& values) {
        const GroupSpec g = build_group(group);
        const CoinvariantLattice lat = coinvariants(g.rd, g.twist);
        const UnramifiedCharacter chi = character_from(lat, values);
        return to_py(ladder_doc(g, chi, condition_ladder(lat, chi)));
      },
      py::arg("group"), py::arg("chi"));

  m.def(
      "tilting",
      [](const std::string& group, const Vec& mu, long long ell) {
        const GroupSpec g = build_group(group);
        const JantzenSum sum =
            ell >= jantzen_bound(g.rd, mu) ? JantzenSum{} : jantzen_sum(g.rd, mu, ell);
        return to_py(tilting_doc(g.rd, mu, ell, sum, sum.vanishes()));
      },
      py::arg("group"), py::arg("mu"), py::arg("ell"));

  m.def(
      "tilting_table",
      [](const std::string& type) { return tilting_table_tsv(build_root_datum(type)); },
      py::arg("type"));

  m.def(
      "averaging",
      [](const std::string& group, const Vec& mu, const std::vector<std::string>& phi_values) {
        const GroupSpec g = build_group(group);
        const CoinvariantLattice lat = coinvariants(g.rd, g.twist);
        const UnramifiedCharacter phi = character_from(lat, phi_values);
        return to_py(averaging_doc(g, lat, mu, refined_averaging_check(lat, mu, phi)));
      },
      py::arg("group"), py::arg("mu"), py::arg("phi"));
}
