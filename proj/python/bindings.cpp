// Thin pybind11 layer. Exact values cross the boundary as decimal strings;
// the Python package turns them into int / fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mvoyce/cli.hpp"
#include "mvoyce/errors.hpp"
#include "mvoyce/limits.hpp"
#include "mvoyce/modes.hpp"
#include "mvoyce/moments.hpp"
#include "mvoyce/triangle.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> strings(const mvoyce::CoeffRow& row) {
    std::vector<std::string> out;
    out.reserve(row.coeffs.size());
    for (const auto& c : row.coeffs) out.push_back(c.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coefficient triangle of the Morgan-Voyce polynomials Q_n(x) = x B_{n-1}(x)";

    py::register_exception<mvoyce::VerificationFailure>(m, "VerificationFailure", PyExc_ArithmeticError);

    m.def("fib", [](std::uint64_t n) { return mvoyce::fib(n).to_string(); });
    m.def("binom", [](std::uint64_t n, std::int64_t k) { return mvoyce::binom(n, k).to_string(); });

    m.def("row", [](std::uint32_t n, const std::string& method) {
        if (method == "closed") return strings(mvoyce::row_closed_form(n));
        if (method == "three_term") return strings(mvoyce::row_three_term(n));
        if (method == "reciprocal") return strings(mvoyce::reciprocal_row(n));
        throw std::invalid_argument("unknown method: " + method);
    }, py::arg("n"), py::arg("method") = "closed");

    m.def("row_hereditary", [](std::uint32_t n, const std::string& g) {
        mvoyce::ArithmeticFunction f;
        if (g == "identity") f = mvoyce::arithmetic::identity;
        else if (g == "one") f = mvoyce::arithmetic::one;
        else if (g == "inverse_factorial") f = mvoyce::arithmetic::inverse_factorial;
        else throw std::invalid_argument("unknown g: " + g);
        std::vector<std::string> out;
        for (const auto& c : mvoyce::row_hereditary(n, f).coeffs) out.push_back(c.to_string());
        return out;
    }, py::arg("n"), py::arg("g") = "identity");

    m.def("moment_summary", [](std::uint32_t n) {
        const auto s = mvoyce::moment_summary(n);
        py::dict d;
        d["n"] = s.n;
        d["u"] = s.u.to_string();
        d["v"] = s.v.to_string();
        d["w"] = s.w.to_string();
        d["mu"] = s.mu.to_string();
        d["sigma2"] = s.sigma2.to_string();
        return d;
    });

    m.def("locate_mode", [](std::uint32_t n) {
        const auto r = mvoyce::locate_mode(n);
        return py::make_tuple(r.smallest_mode, r.is_double, r.darroch_gap.to_string());
    });

    m.def("double_mode_sequence", [](std::uint32_t count) {
        std::vector<std::tuple<std::string, std::string>> out;
        for (const auto& s : mvoyce::double_mode_sequence(count)) out.emplace_back(s.m.to_string(), s.n.to_string());
        return out;
    });

    m.def("pell_all_solutions", [](std::uint32_t count) {
        std::vector<std::tuple<std::string, std::string>> out;
        for (const auto& s : mvoyce::pell_all_solutions(count)) out.emplace_back(s.j.to_string(), s.n.to_string());
        return out;
    });

    m.def("kolmogorov_distance", [](std::uint32_t n) {
        const auto r = mvoyce::kolmogorov_distance(n);
        return py::make_tuple(r.kolmogorov, r.be_bound);
    });
    m.def("local_limit_error", py::overload_cast<std::uint32_t, double, double, std::uint32_t>(&mvoyce::local_limit_error),
          py::arg("n"), py::arg("lo") = -3.0, py::arg("hi") = 3.0, py::arg("steps") = 601);
    m.def("table2_row", [](std::uint32_t n) {
        const auto r = mvoyce::table2_row(n);
        return py::make_tuple(r.ratio, r.scaled_error);
    });
    m.def("harper_max_error", [](std::uint32_t n) { return mvoyce::harper_model(n).max_error; });

    m.def("singularity_constants", [](std::optional<double> h) {
        const auto c = h ? mvoyce::singularity_constants_numeric(*h) : mvoyce::singularity_constants();
        return py::make_tuple(c.a, c.b2);
    }, py::arg("h") = py::none());

    m.def("run_cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "mvoyce");
        std::ostringstream out, err;
        const int code = mvoyce::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
