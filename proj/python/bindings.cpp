// Python module vasseq._core. Words are lists of letter names, configurations
// (state name, counters) tuples. Every search takes an optional node_budget.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vasseq/equivalence.hpp"
#include "vasseq/games.hpp"
#include "vasseq/io.hpp"
#include "vasseq/random.hpp"
#include "vasseq/reduction.hpp"
#include "vasseq/resolver.hpp"
#include "vasseq/twocm.hpp"

namespace py = pybind11;
using namespace vasseq;

namespace
{

SearchOptions budget(std::uint64_t nodes)
{
    SearchOptions o;
    o.node_budget = nodes;
    return o;
}

py::tuple config_tuple(const Vass& v, const Configuration& c)
{
    return py::make_tuple(v.state_name(c.state), c.counters);
}

Semantics semantics_of(const std::string& s)
{
    if (s == "trace")
        return Semantics::Trace;
    if (s == "cover")
        return Semantics::Cover;
    throw py::value_error("semantics must be 'trace' or 'cover'");
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Counter machines, VASS reductions and bounded checks";

    auto base = py::register_exception<Error>(m, "VasseqError");
    py::register_exception<InvalidMachine>(m, "InvalidMachine", base.ptr());
    py::register_exception<ResourceBound>(m, "ResourceBound", base.ptr());
    py::register_exception<SyntaxError>(m, "ParseError", base.ptr());
    py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base.ptr());

    py::class_<CounterMachine>(m, "CounterMachine")
        .def_readonly("states", &CounterMachine::states)
        .def_readonly("initial", &CounterMachine::initial)
        .def_readonly("final", &CounterMachine::final)
        .def_property_readonly("transitions",
                               [](const CounterMachine& cm) {
                                   py::list out;
                                   for (const auto& t : cm.transitions)
                                       out.append(py::make_tuple(t.source, std::string(to_string(t.op)), t.target));
                                   return out;
                               })
        .def("__eq__", [](const CounterMachine& a, const CounterMachine& b) { return a == b; })
        .def("__str__", &print_cm);

    py::class_<Vass>(m, "Vass")
        .def_property_readonly("dimension", &Vass::dimension)
        .def_property_readonly("alphabet", &Vass::alphabet)
        .def_property_readonly("states", &Vass::states)
        .def_property_readonly("transitions",
                               [](const Vass& v) {
                                   py::list out;
                                   for (const auto& t : v.transitions())
                                       out.append(py::make_tuple(v.state_name(t.source), v.letter_name(t.letter),
                                                                 t.effect, v.state_name(t.target)));
                                   return out;
                               })
        .def_property_readonly("initial", [](const Vass& v) { return config_tuple(v, v.initial()); })
        .def_property_readonly("finals",
                               [](const Vass& v) {
                                   py::list out;
                                   for (const auto& f : v.finals())
                                       out.append(config_tuple(v, f));
                                   return out;
                               })
        .def("is_deterministic", [](const Vass& v) { return is_deterministic(v); })
        .def("reads", [](const Vass& v, const Word& w) { return reads(v, v.initial(), w); }, py::arg("word"))
        .def("__eq__", [](const Vass& a, const Vass& b) { return a == b; })
        .def("__str__", &print_vass);

    py::class_<ReductionOutput>(m, "Reduction")
        .def_readonly("n", &ReductionOutput::n)
        .def_readonly("a", &ReductionOutput::a)
        .def_readonly("b", &ReductionOutput::b);

    py::class_<EqVerdict>(m, "EqVerdict")
        .def_readonly("equal", &EqVerdict::equal)
        .def_readonly("checked_up_to", &EqVerdict::checked_up_to)
        .def_readonly("word", &EqVerdict::word)
        .def_readonly("in_first", &EqVerdict::in_first);

    py::class_<ContainmentVerdict>(m, "ContainmentVerdict")
        .def_readonly("contained", &ContainmentVerdict::contained)
        .def_readonly("checked_up_to", &ContainmentVerdict::checked_up_to)
        .def_readonly("witness", &ContainmentVerdict::witness);

    py::class_<GameVerdict>(m, "GameVerdict")
        .def_readonly("spoiler_wins", &GameVerdict::spoiler_wins)
        .def_readonly("depth", &GameVerdict::depth)
        .def_readonly("witness", &GameVerdict::witness);

    py::class_<HistoryDeterminismVerdict>(m, "HdVerdict")
        .def_readonly("ok", &HistoryDeterminismVerdict::ok)
        .def_readonly("checked_up_to", &HistoryDeterminismVerdict::checked_up_to)
        .def_readonly("counterexample", &HistoryDeterminismVerdict::counterexample);

    py::class_<TheoremReport>(m, "TheoremReport")
        .def_property_readonly("status", [](const TheoremReport& r) { return to_string(r.status); })
        .def_property_readonly("checks",
                               [](const TheoremReport& r) {
                                   py::list out;
                                   for (const auto& c : r.checks)
                                       out.append(py::make_tuple(c.name, c.passed, c.detail));
                                   return out;
                               })
        .def_readonly("notes", &TheoremReport::notes)
        .def_readonly("halted", &TheoremReport::halted)
        .def_readonly("halting_word", &TheoremReport::halting_word)
        .def_readonly("final_control_reachable", &TheoremReport::final_control_reachable)
        .def_readonly("equivalence", &TheoremReport::equivalence);

    m.def("parse_cm", &parse_cm, py::arg("text"));
    m.def("print_cm", &print_cm, py::arg("machine"));
    m.def("parse_vass", &parse_vass, py::arg("text"));
    m.def("print_vass", &print_vass, py::arg("vass"));
    m.def("random_machine",
          [](std::uint64_t seed, std::size_t max_states) {
              Rng rng(seed);
              return random_machine(rng, max_states);
          },
          py::arg("seed"), py::arg("max_states") = 6);

    m.def("halting_word", &halting_word, py::arg("machine"), py::arg("fuel") = 100000);
    m.def("build_n", &build_n, py::arg("machine"));
    m.def("build_a", &build_a, py::arg("machine"));
    m.def("build_b", &build_b, py::arg("machine"));

    constexpr auto default_budget = static_cast<std::uint64_t>(default_node_budget);
    m.def("trace_language",
          [](const Vass& v, std::size_t maxlen, std::uint64_t nodes) {
              return bounded_trace_language(v, maxlen, budget(nodes));
          },
          py::arg("vass"), py::arg("maxlen"), py::arg("node_budget") = default_budget);
    m.def("cover_language",
          [](const Vass& v, std::size_t maxlen, std::uint64_t nodes) {
              return bounded_cover_language(v, maxlen, budget(nodes));
          },
          py::arg("vass"), py::arg("maxlen"), py::arg("node_budget") = default_budget);
    m.def("trace_equal_bounded",
          [](const Vass& a, const Vass& b, std::size_t maxlen, std::uint64_t nodes) {
              return trace_equal_bounded(a, b, maxlen, budget(nodes));
          },
          py::arg("a"), py::arg("b"), py::arg("maxlen"), py::arg("node_budget") = default_budget);
    m.def("cover_equal_bounded",
          [](const Vass& a, const Vass& b, std::size_t maxlen, std::uint64_t nodes) {
              return cover_equal_bounded(a, b, maxlen, budget(nodes));
          },
          py::arg("a"), py::arg("b"), py::arg("maxlen"), py::arg("node_budget") = default_budget);
    m.def("containment_bounded",
          [](const Vass& a, const Vass& b, std::size_t maxlen, const std::string& semantics, std::uint64_t nodes) {
              return containment_bounded(a, b, maxlen, semantics_of(semantics), budget(nodes));
          },
          py::arg("a"), py::arg("b"), py::arg("maxlen"), py::arg("semantics") = "trace",
          py::arg("node_budget") = default_budget);
    m.def("simulates_bounded",
          [](const Vass& dup, const Vass& spoiler, std::size_t depth, std::uint64_t nodes) {
              return simulates_bounded(dup, spoiler, depth, budget(nodes));
          },
          py::arg("duplicator"), py::arg("spoiler"), py::arg("depth"), py::arg("node_budget") = default_budget);
    m.def("check_history_det",
          [](const ReductionOutput& r, std::size_t maxlen, std::uint64_t nodes) {
              return check_history_det_bounded(r.b, jancar_resolver(r), maxlen, budget(nodes));
          },
          py::arg("reduction"), py::arg("maxlen"), py::arg("node_budget") = default_budget,
          "History-determinism check of B with the cheated-zero-test resolver.");
    m.def("check_history_det",
          [](const Vass& v, std::size_t maxlen, std::uint64_t nodes) {
              return check_history_det_bounded(v, first_enabled_resolver(v), maxlen, budget(nodes));
          },
          py::arg("vass"), py::arg("maxlen"), py::arg("node_budget") = default_budget,
          "Same check with the first-enabled resolver (the only one for a deterministic VASS).");
    m.def("theorem_harness",
          [](const CounterMachine& cm, std::size_t fuel, std::size_t maxlen, std::uint64_t nodes) {
              return theorem_harness(cm, fuel, maxlen, budget(nodes));
          },
          py::arg("machine"), py::arg("fuel") = 100000, py::arg("maxlen") = 8,
          py::arg("node_budget") = default_budget);
}
