#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "rvertex/bethe.hpp"
#include "rvertex/detformula.hpp"
#include "rvertex/lattice.hpp"
#include "rvertex/sample.hpp"
#include "rvertex/symfunc.hpp"
#include "rvertex/verify.hpp"

namespace py = pybind11;

namespace {

// Scalars cross the boundary as exact fraction strings "p/q"; no floats.
rvertex::Rat r(const std::string& s) { return rvertex::parse_rat(s); }

std::vector<rvertex::Rat> rv(const std::vector<std::string>& v) {
    std::vector<rvertex::Rat> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(r(s));
    return out;
}

rvertex::OccupationConfig occ(int M, const std::vector<int>& x) {
    rvertex::OccupationConfig c;
    c.M = M;
    c.x = x;
    if (!c.valid()) throw std::invalid_argument("positions must be strictly increasing in 1..M");
    return c;
}

py::dict report_dict(const rvertex::VerificationReport& rep) {
    py::dict d;
    d["check_id"] = rep.check_id;
    d["paper_ref"] = rep.paper_ref;
    d["seed"] = rep.seed;
    d["point"] = rep.point_summary;
    d["lhs"] = rvertex::to_string(rep.lhs);
    d["rhs"] = rvertex::to_string(rep.rhs);
    d["passed"] = rep.passed;
    d["elapsed_ms"] = rep.elapsed_ms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_rvertex, m) {
    m.doc() = "exact-arithmetic reflecting-end six-vertex model kernels";

    m.def(
        "wavefunction",
        [](const std::string& a, const std::string& b, const std::vector<std::string>& z,
           const std::vector<std::string>& w, const std::vector<int>& x) {
            return rvertex::to_string(rvertex::wavefunction_oracle(
                {r(a), r(b)}, rv(z), rv(w), occ(static_cast<int>(w.size()), x)));
        },
        py::arg("a"), py::arg("b"), py::arg("z"), py::arg("w"), py::arg("x"),
        "Lattice contraction of the double-row wavefunction; exact fraction string.");

    m.def(
        "dual_wavefunction",
        [](const std::string& a, const std::string& b, const std::vector<std::string>& z,
           const std::vector<std::string>& w, const std::vector<int>& xbar) {
            return rvertex::to_string(rvertex::dual_wavefunction_oracle(
                {r(a), r(b)}, rv(z), rv(w), occ(static_cast<int>(w.size()), xbar)));
        },
        py::arg("a"), py::arg("b"), py::arg("z"), py::arg("w"), py::arg("xbar"));

    m.def(
        "symmetric_function",
        [](const std::string& a, const std::string& b, const std::vector<std::string>& z,
           const std::vector<std::string>& w, const std::vector<int>& x) {
            return rvertex::to_string(rvertex::eval_F({r(a), r(b)}, rv(z), rv(w),
                                                      occ(static_cast<int>(w.size()), x)));
        },
        py::arg("a"), py::arg("b"), py::arg("z"), py::arg("w"), py::arg("x"),
        "Closed-form sum over permutations and exponent signs.");

    m.def(
        "dual_symmetric_function",
        [](const std::string& a, const std::string& b, const std::vector<std::string>& z,
           const std::vector<std::string>& w, const std::vector<int>& xbar) {
            return rvertex::to_string(rvertex::eval_F_bar(
                {r(a), r(b)}, rv(z), rv(w), occ(static_cast<int>(w.size()), xbar)));
        },
        py::arg("a"), py::arg("b"), py::arg("z"), py::arg("w"), py::arg("xbar"));

    m.def(
        "domain_wall_det",
        [](const std::string& a, const std::string& b, const std::vector<std::string>& z,
           const std::vector<std::string>& w) {
            return rvertex::to_string(rvertex::domain_wall_det({r(a), r(b)}, rv(z), rv(w)));
        },
        py::arg("a"), py::arg("b"), py::arg("z"), py::arg("w"),
        "Reflecting-end domain-wall partition function, determinant form.");

    m.def(
        "domain_wall_det_homogeneous",
        [](const std::string& a, const std::string& b, const std::vector<std::string>& z) {
            return rvertex::to_string(
                rvertex::domain_wall_det_homogeneous({r(a), r(b)}, rv(z)));
        },
        py::arg("a"), py::arg("b"), py::arg("z"));

    m.def(
        "bethe_f",
        [](const std::string& a, const std::string& b, const std::vector<std::string>& z,
           int M, const std::vector<int>& x) {
            const auto bp = rvertex::momenta_from_spectral({r(a), r(b)}, rv(z), M);
            return rvertex::to_string(rvertex::eval_f(bp, occ(M, x)));
        },
        py::arg("a"), py::arg("b"), py::arg("z"), py::arg("M"), py::arg("x"),
        "Plane-wave sum over permuted and negated momenta.");

    m.def(
        "run_suite",
        [](std::uint64_t seed, const std::vector<std::pair<int, int>>& sizes) {
            py::list out;
            for (const auto& rep : rvertex::run_suite(seed, sizes)) out.append(report_dict(rep));
            return out;
        },
        py::arg("seed"), py::arg("sizes"),
        "Runs every identity checker at sampled points; list of report dicts.");
}
