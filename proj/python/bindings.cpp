#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adspace/brute_force.hpp"
#include "adspace/classify.hpp"
#include "adspace/dp_large.hpp"
#include "adspace/errors.hpp"
#include "adspace/generate.hpp"
#include "adspace/greedy.hpp"
#include "adspace/instance.hpp"
#include "adspace/io.hpp"
#include "adspace/ptas.hpp"
#include "adspace/rational.hpp"
#include "adspace/schedule.hpp"

namespace py = pybind11;
using namespace adspace;

namespace pybind11 {
namespace detail {

// Rational <-> fractions.Fraction, exactly, via decimal strings so no
// precision is lost at any magnitude. Anything with integer numerator and
// denominator attributes loads (int, bool, Fraction).
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  static boost::multiprecision::cpp_int to_int(const py::handle& obj) {
    return boost::multiprecision::cpp_int(
        py::str(obj).cast<std::string>());
  }

  bool load(handle src, bool) {
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) {
      return false;
    }
    py::object num = src.attr("numerator");
    py::object den = src.attr("denominator");
    if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr())) return false;
    boost::multiprecision::cpp_int d = to_int(den);
    if (d == 0) return false;
    value = Rational(to_int(num), d);
    return true;
  }

  static handle cast(const Rational& src, return_value_policy, handle) {
    py::object fraction =
        py::module_::import("fractions").attr("Fraction");
    py::object num = py::reinterpret_steal<py::object>(PyLong_FromString(
        numerator(src).str().c_str(), nullptr, 10));
    py::object den = py::reinterpret_steal<py::object>(PyLong_FromString(
        denominator(src).str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace detail
}  // namespace pybind11

PYBIND11_MODULE(_adspace, m) {
  m.doc() = "ad slot scheduling: exact, greedy and scheme solvers";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ClassViolationError>(m, "ClassViolationError",
                                              PyExc_ValueError);
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError",
                                              PyExc_RuntimeError);
  py::register_exception<OverflowGuardError>(m, "OverflowGuardError",
                                             PyExc_OverflowError);

  py::enum_<Variant>(m, "Variant")
      .value("MAXSPACE", Variant::MaxSpace)
      .value("MAXSPACE_R", Variant::MaxSpaceR)
      .value("MAXSPACE_RD", Variant::MaxSpaceRD);

  py::enum_<ViolationKind>(m, "ViolationKind")
      .value("CAPACITY", ViolationKind::Capacity)
      .value("FREQUENCY", ViolationKind::Frequency)
      .value("RELEASE", ViolationKind::Release)
      .value("DEADLINE", ViolationKind::Deadline)
      .value("DUPLICATE", ViolationKind::Duplicate)
      .value("UNKNOWN_AD", ViolationKind::UnknownAd);

  py::enum_<SizeDistribution>(m, "SizeDistribution")
      .value("UNIFORM", SizeDistribution::Uniform)
      .value("THIRDS_MIX", SizeDistribution::ThirdsMix)
      .value("PTAS_SMALL", SizeDistribution::PtasSmall);

  py::class_<Ad>(m, "Ad")
      .def(py::init<>())
      .def_readwrite("id", &Ad::id)
      .def_readwrite("size", &Ad::size)
      .def_readwrite("frequency", &Ad::frequency)
      .def_readwrite("release", &Ad::release)
      .def_readwrite("deadline", &Ad::deadline);

  py::class_<Instance>(m, "Instance")
      .def(py::init<>())
      .def_readwrite("slot_count", &Instance::slot_count)
      .def_readwrite("slot_height", &Instance::slot_height)
      .def_readwrite("variant", &Instance::variant)
      .def_readwrite("ads", &Instance::ads);

  py::class_<Schedule>(m, "Schedule")
      .def(py::init<>())
      .def(py::init<int>(), py::arg("slot_count"))
      .def_readwrite("slots", &Schedule::slots)
      .def("slot_count", &Schedule::slot_count);

  py::class_<Violation>(m, "Violation")
      .def_readonly("kind", &Violation::kind)
      .def_readonly("index", &Violation::index)
      .def_readonly("detail", &Violation::detail);

  py::class_<FeasibilityReport>(m, "FeasibilityReport")
      .def_readonly("violations", &FeasibilityReport::violations)
      .def("feasible", &FeasibilityReport::feasible);

  py::class_<OracleLimits>(m, "OracleLimits")
      .def(py::init<>())
      .def_readwrite("max_ads", &OracleLimits::max_ads)
      .def_readwrite("max_states", &OracleLimits::max_states);

  py::class_<BruteForceResult>(m, "BruteForceResult")
      .def_readonly("schedule", &BruteForceResult::schedule)
      .def_readonly("value", &BruteForceResult::value)
      .def_readonly("states", &BruteForceResult::states);

  py::class_<DpOptions>(m, "DpOptions")
      .def(py::init<>())
      .def_readwrite("allow_deadlines", &DpOptions::allow_deadlines);

  py::class_<DpResult>(m, "DpResult")
      .def_readonly("schedule", &DpResult::schedule)
      .def_readonly("value", &DpResult::value);

  py::class_<MoveRecord>(m, "MoveRecord")
      .def_readonly("iteration", &MoveRecord::iteration)
      .def_readonly("from_slot", &MoveRecord::from_slot)
      .def_readonly("to_slot", &MoveRecord::to_slot)
      .def_readonly("moved_ads", &MoveRecord::moved_ads);

  py::class_<GreedyTrace>(m, "GreedyTrace")
      .def_readonly("discarded", &GreedyTrace::discarded)
      .def_readonly("moves", &GreedyTrace::moves);

  py::class_<GreedyResult>(m, "GreedyResult")
      .def_readonly("schedule", &GreedyResult::schedule)
      .def_readonly("trace", &GreedyResult::trace);

  py::class_<FirstFitResult>(m, "FirstFitResult")
      .def_readonly("schedule", &FirstFitResult::schedule)
      .def_readonly("complete", &FirstFitResult::complete);

  py::class_<ThirdsPartition>(m, "ThirdsPartition")
      .def_readonly("large", &ThirdsPartition::large)
      .def_readonly("medium", &ThirdsPartition::medium)
      .def_readonly("small", &ThirdsPartition::small);

  py::class_<PtasPartition>(m, "PtasPartition")
      .def_readonly("large", &PtasPartition::large)
      .def_readonly("small", &PtasPartition::small);

  py::class_<FlowOptions>(m, "FlowOptions")
      .def(py::init<>())
      .def_readwrite("sink_capacity_no_eps", &FlowOptions::sink_capacity_no_eps);

  py::class_<PtasOptions>(m, "PtasOptions")
      .def(py::init<>())
      .def_readwrite("eps_prime", &PtasOptions::eps_prime)
      .def_readwrite("budget", &PtasOptions::budget)
      .def_readwrite("internal_eps_override",
                     &PtasOptions::internal_eps_override)
      .def_readwrite("flow", &PtasOptions::flow);

  py::class_<PtasResult>(m, "PtasResult")
      .def_readonly("schedule", &PtasResult::schedule)
      .def_readonly("value", &PtasResult::value)
      .def_readonly("internal_eps", &PtasResult::internal_eps)
      .def_readonly("first_fit_complete", &PtasResult::first_fit_complete)
      .def_readonly("guarantee_void", &PtasResult::guarantee_void)
      .def_readonly("configurations", &PtasResult::configurations)
      .def_readonly("capacity_vectors", &PtasResult::capacity_vectors);

  py::class_<GenerateParams>(m, "GenerateParams")
      .def(py::init<>())
      .def_readwrite("ad_count", &GenerateParams::ad_count)
      .def_readwrite("slot_count", &GenerateParams::slot_count)
      .def_readwrite("variant", &GenerateParams::variant)
      .def_readwrite("distribution", &GenerateParams::distribution)
      .def_readwrite("seed", &GenerateParams::seed)
      .def_readwrite("ptas_epsilon", &GenerateParams::ptas_epsilon);

  m.def("parse_instance", [](const std::string& text) {
    return parse_instance(text);
  }, py::arg("text"));
  m.def("serialize_instance", &serialize_instance, py::arg("instance"));
  m.def("validate_instance", &validate_instance, py::arg("instance"));
  m.def("parse_schedule", [](const std::string& text, const Instance& inst) {
    return parse_schedule(text, inst);
  }, py::arg("text"), py::arg("instance"));
  m.def("format_schedule", &format_schedule, py::arg("instance"),
        py::arg("schedule"));

  m.def("slot_fullness", &slot_fullness, py::arg("instance"),
        py::arg("schedule"), py::arg("slot"));
  m.def("total_fullness", &total_fullness, py::arg("instance"),
        py::arg("schedule"));
  m.def("verify", &verify, py::arg("instance"), py::arg("schedule"));

  m.def("classify_thirds", &classify_thirds, py::arg("ads"));
  m.def("classify_ptas", &classify_ptas, py::arg("ads"), py::arg("epsilon"),
        py::arg("slot_count"));
  m.def("ptas_threshold", &ptas_threshold, py::arg("epsilon"),
        py::arg("slot_count"));

  m.def("generate", &generate, py::arg("params"));

  m.def("brute_force", &brute_force, py::arg("instance"),
        py::arg("limits") = OracleLimits());
  m.def("dp_large", &dp_large, py::arg("ads"), py::arg("slot_count"),
        py::arg("options") = DpOptions());
  m.def("schedule_medium", &schedule_medium, py::arg("ads"),
        py::arg("slot_count"));
  m.def("schedule_small", &schedule_small, py::arg("ads"),
        py::arg("slot_count"));
  m.def("first_fit", &first_fit, py::arg("instance"));
  m.def("combined", &combined, py::arg("instance"));
  m.def("ptas", &ptas, py::arg("instance"),
        py::arg("options") = PtasOptions());
}
