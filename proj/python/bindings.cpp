#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mip/caps.hpp"
#include "mip/error.hpp"
#include "mip/families.hpp"
#include "mip/invariants.hpp"
#include "mip/iso.hpp"
#include "mip/tables.hpp"

namespace py = pybind11;

namespace {

mip::Caps caps_of(const std::string& caps_json) {
  return caps_json.empty() ? mip::Caps{} : mip::Caps::from_json_text(caps_json);
}

mip::FiniteGroup group_of(const std::string& spec, const mip::Caps& caps) {
  return mip::build(mip::parse_family_spec(spec), caps.coset_cap, caps.group_order_cap);
}

mip::FiniteField field_of(const std::string& field, const mip::Caps& caps) {
  return mip::FiniteField::parse(field, static_cast<unsigned>(caps.field_cap));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Modular group algebra invariants";

  auto base = py::register_exception<mip::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<mip::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<mip::InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<mip::ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<mip::CapExceeded>(m, "CapExceeded", base.ptr());

  m.def("group_order", [](const std::string& spec, const std::string& caps) {
    return group_of(spec, caps_of(caps)).order();
  }, py::arg("spec"), py::arg("caps") = "");

  m.def("field_name", [](const std::string& field) { return mip::FiniteField::parse(field).name(); });

  m.def("hh1_dimension", [](const std::string& spec, const std::string& caps) {
    return mip::hh1_dimension(group_of(spec, caps_of(caps)));
  }, py::arg("spec"), py::arg("caps") = "");

  m.def("fingerprint_json", [](const std::string& spec, const std::string& field, const std::string& caps) {
    const mip::Caps c = caps_of(caps);
    mip::Fingerprint f;
    {
      py::gil_scoped_release nogil;
      f = mip::fingerprint(group_of(spec, c), field_of(field, c), c);
    }
    return f.to_json();
  }, py::arg("spec"), py::arg("field") = "2", py::arg("caps") = "");

  m.def("compare_json", [](const std::string& a, const std::string& b, const std::string& field,
                           const std::string& caps) {
    const mip::Caps c = caps_of(caps);
    py::gil_scoped_release nogil;
    const auto F = field_of(field, c);
    return mip::compare(mip::fingerprint(group_of(a, c), F, c), mip::fingerprint(group_of(b, c), F, c)).to_json();
  }, py::arg("left"), py::arg("right"), py::arg("field") = "2", py::arg("caps") = "");

  m.def("kernel_size", [](const std::string& spec, unsigned i, unsigned j, unsigned k, const std::string& field,
                          const std::string& caps) {
    const mip::Caps c = caps_of(caps);
    const auto A = mip::group_algebra(group_of(spec, c), field_of(field, c), c);
    const auto r = mip::kernel_size_power_map(mip::augmentation_section(A, i, j), k, c.enum_cap);
    return py::make_tuple(r.killed, r.surviving);
  }, py::arg("spec"), py::arg("i"), py::arg("j"), py::arg("k"), py::arg("field") = "2", py::arg("caps") = "");

  m.def("table_names", [] { return mip::table_names(); });
  m.def("table_json", [](const std::string& name) { return mip::run_table(name).to_json(); });

  m.def("group_iso_json", [](const std::string& a, const std::string& b, const std::string& caps)
                              -> std::optional<std::string> {
    const mip::Caps c = caps_of(caps);
    const auto G = group_of(a, c), H = group_of(b, c);
    const auto w = mip::group_isomorphic(G, H, c.iso_search_cap);
    if (!w) return std::nullopt;
    if (!mip::verify_witness(*w, G, H)) throw mip::Error("witness failed verification");
    return mip::witness_json(*w, &H);
  }, py::arg("left"), py::arg("right"), py::arg("caps") = "");

  m.def("algebra_iso_json", [](const std::string& a, const std::string& b, unsigned i, unsigned j,
                               const std::string& field, const std::string& caps) -> std::optional<std::string> {
    const mip::Caps c = caps_of(caps);
    const auto F = field_of(field, c);
    const auto A = mip::augmentation_section(mip::group_algebra(group_of(a, c), F, c), i, j);
    const auto B = mip::augmentation_section(mip::group_algebra(group_of(b, c), F, c), i, j);
    const auto w = mip::nilpotent_algebra_iso(A, B, c.iso_search_cap);
    if (!w) return std::nullopt;
    if (!mip::verify_witness(*w, A, B)) throw mip::Error("witness failed verification");
    return mip::witness_json(*w, nullptr, &F);
  }, py::arg("left"), py::arg("right"), py::arg("i"), py::arg("j"), py::arg("field") = "2", py::arg("caps") = "");
}
