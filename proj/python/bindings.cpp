#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "ballquot/analysis.hpp"
#include "ballquot/classify.hpp"
#include "ballquot/conditions.hpp"
#include "ballquot/covering.hpp"
#include "ballquot/dataset.hpp"
#include "ballquot/errors.hpp"
#include "ballquot/euler.hpp"
#include "ballquot/lyapunov.hpp"

namespace py = pybind11;
using namespace ballquot;

namespace pybind11 {
namespace detail {

// Exact rationals cross the boundary as fractions.Fraction, via strings so
// that arbitrarily large numerators survive.
template <>
struct type_caster<Rat> {
  PYBIND11_TYPE_CASTER(Rat, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
    std::string num = str(src.attr("numerator"));
    std::string den = str(src.attr("denominator"));
    value = Rat(BigInt(num), BigInt(den));
    return true;
  }

  static handle cast(const Rat& r, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(rat_str(r)).release();
  }
};

}  // namespace detail
}  // namespace pybind11

PYBIND11_MODULE(_ballquot, m) {
  m.doc() = "Exact Lyapunov spectra and commensurability invariants of "
            "cyclic-covering ball quotients";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const TypeReject& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const OutOfRange& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const DatasetError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  py::class_<CoveringType>(m, "CoveringType")
      .def_readonly("d", &CoveringType::d)
      .def_readonly("a", &CoveringType::a)
      .def_property_readonly("n_points", &CoveringType::n_points)
      .def_property_readonly("ball_dim", &CoveringType::ball_dim)
      .def("__str__", &type_str)
      .def("__repr__", [](const CoveringType& ct) { return "CoveringType(" + type_str(ct) + ")"; })
      .def("__eq__", [](const CoveringType& x, const CoveringType& y) {
        return x.d == y.d && x.a == y.a;
      });

  py::class_<WeightVector>(m, "WeightVector")
      .def_readonly("k", &WeightVector::k)
      .def_readonly("mu", &WeightVector::mu)
      .def_readonly("sigma", &WeightVector::sigma)
      .def_readonly("s", &WeightVector::s)
      .def_readonly("p", &WeightVector::p)
      .def_readonly("q", &WeightVector::q);

  py::enum_<PairKind>(m, "PairKind")
      .value("UniformizingType", PairKind::UniformizingType)
      .value("Unitary", PairKind::Unitary)
      .value("Unsupported", PairKind::Unsupported);

  py::class_<ConjugatePair>(m, "ConjugatePair")
      .def_readonly("k_lo", &ConjugatePair::k_lo)
      .def_readonly("k_hi", &ConjugatePair::k_hi)
      .def_readonly("kind", &ConjugatePair::kind)
      .def_readonly("uniformizing_rep", &ConjugatePair::uniformizing_rep);

  py::enum_<PairClass>(m, "PairClass")
      .value("Elliptic", PairClass::Elliptic)
      .value("Parabolic", PairClass::Parabolic)
      .value("Contracted", PairClass::Contracted);

  py::class_<PairProfile>(m, "PairProfile")
      .def_readonly("i", &PairProfile::i)
      .def_readonly("j", &PairProfile::j)
      .def_readonly("sum", &PairProfile::sum)
      .def_readonly("cls", &PairProfile::cls)
      .def_readonly("kappa", &PairProfile::kappa)
      .def_readonly("in_S", &PairProfile::in_S);

  py::class_<ConditionReport> cond(m, "ConditionReport");
  py::enum_<ConditionReport::Kind>(cond, "Kind")
      .value("Int", ConditionReport::Kind::Int)
      .value("SigmaInt", ConditionReport::Kind::SigmaInt)
      .value("none", ConditionReport::Kind::None);
  cond.def_readonly("kind", &ConditionReport::kind)
      .def_readonly("S", &ConditionReport::S)
      .def_readonly("all_S", &ConditionReport::all_S)
      .def_readonly("pairs", &ConditionReport::pairs)
      .def("lattice", &ConditionReport::lattice)
      .def("__str__", &condition_str);

  py::class_<VanishingOrder>(m, "VanishingOrder")
      .def_readonly("i", &VanishingOrder::i)
      .def_readonly("j", &VanishingOrder::j)
      .def_readonly("ell", &VanishingOrder::ell)
      .def_readonly("order", &VanishingOrder::order)
      .def_readonly("above_one", &VanishingOrder::above_one);

  py::class_<SummandReport>(m, "SummandReport")
      .def_readonly("pair", &SummandReport::pair)
      .def_readonly("lambda_", &SummandReport::lambda)
      .def_readonly("rel_euler", &SummandReport::rel_euler)
      .def_readonly("cab", &SummandReport::cab);

  py::class_<SpectrumReport>(m, "SpectrumReport")
      .def_readonly("summands", &SpectrumReport::summands)
      .def_readonly("distinct_nonnegative", &SpectrumReport::distinct_nonnegative)
      .def_readonly("relative_euler_set", &SpectrumReport::relative_euler_set)
      .def_readonly("maximally_degenerate", &SpectrumReport::maximally_degenerate);

  py::class_<EulerReport>(m, "EulerReport")
      .def_readonly("e_orb", &EulerReport::e_orb)
      .def_readonly("c1_sq", &EulerReport::c1_sq)
      .def_readonly("bmy_holds", &EulerReport::bmy_holds);

  py::class_<TraceField>(m, "TraceField")
      .def_readonly("canonical_d", &TraceField::canonical_d)
      .def_readonly("degree", &TraceField::degree)
      .def("__eq__", [](const TraceField& x, const TraceField& y) { return x == y; });

  py::class_<CommInvariant>(m, "CommInvariant")
      .def_readonly("field", &CommInvariant::field)
      .def_readonly("spectrum", &CommInvariant::spectrum)
      .def_readonly("relative_euler", &CommInvariant::relative_euler)
      .def_readonly("cocompact", &CommInvariant::cocompact)
      .def("__eq__", [](const CommInvariant& x, const CommInvariant& y) { return x == y; });

  py::class_<TypeRecord>(m, "TypeRecord")
      .def_readonly("ct", &TypeRecord::ct)
      .def_readonly("cond", &TypeRecord::cond)
      .def_readonly("arithmetic", &TypeRecord::arithmetic);

  py::class_<DatasetRow>(m, "DatasetRow")
      .def_readonly("index", &DatasetRow::index)
      .def_readonly("ct", &DatasetRow::ct)
      .def_readonly("condition", &DatasetRow::condition)
      .def_readonly("model", &DatasetRow::model)
      .def_readonly("parabolic", &DatasetRow::parabolic)
      .def_readonly("genus", &DatasetRow::genus)
      .def_readonly("dim_p", &DatasetRow::dim_p)
      .def_readonly("dim_u", &DatasetRow::dim_u)
      .def_readonly("spectrum", &DatasetRow::spectrum)
      .def_readonly("relative_euler", &DatasetRow::relative_euler)
      .def_readonly("comm_to", &DatasetRow::comm_to);

  m.def("parse_type", &parse_type, py::arg("text"));
  m.def("make_type", &make_type, py::arg("d"), py::arg("a"));
  m.def("type_str", &type_str);
  m.def("weight_vector", &weight_vector, py::arg("ct"), py::arg("k") = 1);
  m.def("conjugate_classes", &conjugate_classes);
  m.def("genus", &genus);
  m.def("primitive_dimensions", [](const CoveringType& ct) {
    PrimitiveDims d = primitive_dimensions(ct);
    return std::make_pair(d.dim_p, d.dim_u);
  });
  m.def("is_arithmetic", &is_arithmetic);

  m.def("pair_profiles", &pair_profiles, py::arg("mu"));
  m.def("check_int", &check_int, py::arg("mu"));
  m.def("check_sigma_int", &check_sigma_int, py::arg("mu"));
  m.def("enumerate_types", [](Int max_d, int n_points, const std::string& filter) {
    TypeFilter tf;
    if (filter == "int") tf = TypeFilter::Int;
    else if (filter == "sigmaint") tf = TypeFilter::SigmaInt;
    else if (filter == "nonarithmetic") tf = TypeFilter::NonArithmetic;
    else throw py::value_error("filter must be int, sigmaint or nonarithmetic");
    return enumerate_types(max_d, n_points, tf);
  }, py::arg("max_d"), py::arg("n_points") = 5, py::arg("filter") = "nonarithmetic");

  m.def("vanishing_orders", &vanishing_orders, py::arg("ct"), py::arg("k"));
  m.def("lambda1", &lambda1, py::arg("ct"), py::arg("k"));
  m.def("lambda1_via_quotient", &lambda1_via_quotient, py::arg("ct"), py::arg("k"));
  m.def("cab_invariants", &cab_invariants, py::arg("ct"), py::arg("k"));
  m.def("spectrum", &spectrum, py::arg("ct"));

  m.def("orb_euler", &orb_euler, py::arg("mu"));
  m.def("bmy_check", &bmy_check, py::arg("mu"));
  m.def("relative_euler", &relative_euler, py::arg("ct"), py::arg("k"));

  m.def("trace_field", &trace_field);
  m.def("invariants", &invariants);
  m.def("partition", [](const std::vector<CoveringType>& types,
                        std::optional<std::vector<std::pair<int, int>>> known_edges) {
    return partition(types, known_edges ? &*known_edges : nullptr);
  }, py::arg("types"), py::arg("known_edges") = py::none());

  m.def("load_dataset", &load_dataset, py::arg("path"));
  m.def("default_data_path", &default_data_path);

  m.def("analyze_json", [](const std::string& text) {
    return to_json(analyze(parse_type(text)));
  }, py::arg("type"), "Full analysis of a type string, rendered as JSON.");
}
