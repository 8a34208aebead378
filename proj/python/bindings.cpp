#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "korselt/commands.hpp"
#include "korselt/korselt_set.hpp"
#include "korselt/version.hpp"

namespace py = pybind11;
using namespace korselt;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.num(), r.den());
}

// Accepts int, fractions.Fraction or "a/b".
Rational from_python(const py::handle& value) {
    if (py::isinstance<py::str>(value)) return Rational::parse(value.cast<std::string>());
    if (py::isinstance<py::int_>(value)) return Rational(value.cast<std::int64_t>());
    if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator"))
        return Rational::make(value.attr("numerator").cast<std::int64_t>(), value.attr("denominator").cast<std::int64_t>());
    throw py::type_error("expected int, Fraction or str");
}

py::list fractions(const std::vector<Rational>& values) {
    py::list out;
    for (const Rational& r : values) out.append(to_fraction(r));
    return out;
}

py::object report(const CommandResult& result) {
    py::dict out = py::module_::import("json").attr("loads")(render_json(result.report));
    out["exit_code"] = result.exit_code;
    return std::move(out);
}

}  // namespace

PYBIND11_MODULE(_korselt, m) {
    m.doc() = "Rational Korselt sets of semiprimes";
    m.attr("__version__") = kVersion;

    // Translators run newest first, so the base class is registered before its subclasses.
    const auto base = py::register_exception<Error>(m, "KorseltError", PyExc_ValueError);
    py::register_exception<NotSquarefree>(m, "NotSquarefree", base);
    py::register_exception<NotSemiprime>(m, "NotSemiprime", base);
    py::register_exception<ZeroDenominator>(m, "ZeroDenominator", base);
    py::register_exception<OverflowError>(m, "OverflowError", base);
    py::register_exception<ScaleGuard>(m, "ScaleGuard", base);
    py::register_exception<RangeError>(m, "RangeError", base);
    py::register_exception<HypothesisNotMet>(m, "HypothesisNotMet", base);
    py::register_exception<ParseError>(m, "ParseError", base);

    m.def("is_prime", [](std::uint64_t n) { return is_prime(n); }, py::arg("n"));
    m.def("factor_squarefree", &factor_squarefree, py::arg("n"));
    m.def("is_carmichael", &is_carmichael, py::arg("n"));
    m.def(
        "is_korselt_base",
        [](std::int64_t n, const py::object& alpha) { return is_korselt_base(n, from_python(alpha)); },
        py::arg("n"), py::arg("alpha"));
    m.def(
        "korselt_set",
        [](std::int64_t n, const std::string& domain) {
            const KorseltSet ks = q_korselt_set(Semiprime::from_n(n));
            if (domain == "z") {
                std::vector<Rational> ints(ks.integer_part.begin(), ks.integer_part.end());
                return fractions(ints);
            }
            if (domain == "qz") return fractions(ks.fractional_part);
            if (domain == "q") return fractions(ks.all());
            throw py::value_error("domain must be 'z', 'qz' or 'q'");
        },
        py::arg("n"), py::arg("domain") = "q");
    m.def(
        "korselt_set_oracle",
        [](std::int64_t n) { return fractions(q_korselt_set_oracle(Semiprime::from_n(n)).all()); }, py::arg("n"));
    m.def(
        "z_korselt_set", [](std::int64_t n) { return z_korselt_set(Semiprime::from_n(n)); }, py::arg("n"));
    m.def(
        "korselt_weights",
        [](std::int64_t n) {
            const KorseltWeights w = korselt_weights(q_korselt_set(Semiprime::from_n(n)));
            py::dict out;
            out["z"] = w.z_weight;
            out["qz"] = w.qz_weight;
            out["q"] = w.q_weight;
            return out;
        },
        py::arg("n"));

    m.def(
        "base_check",
        [](std::int64_t n, const std::string& alpha) { return report(cmd_base_check(n, alpha)); }, py::arg("n"),
        py::arg("alpha"));
    m.def(
        "verify",
        [](const std::string& claim, std::int64_t p_max, std::optional<std::int64_t> q_max, unsigned jobs) {
            CommandResult r;
            {
                py::gil_scoped_release release;
                r = cmd_verify(claim, p_max, q_max.value_or(p_max), jobs);
            }
            return report(r);
        },
        py::arg("claim"), py::arg("p_max"), py::arg("q_max") = py::none(), py::arg("jobs") = 0);
    m.def(
        "tables",
        [](int which, unsigned jobs) {
            CommandResult r;
            {
                py::gil_scoped_release release;
                r = cmd_tables(which, jobs);
            }
            return report(r);
        },
        py::arg("which"), py::arg("jobs") = 0);
}
