#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hopfcalc/chern.hpp"
#include "hopfcalc/connections.hpp"
#include "hopfcalc/hopf.hpp"
#include "hopfcalc/matrices.hpp"
#include "hopfcalc/topology.hpp"
#include "hopfcalc/verify.hpp"

namespace py = pybind11;
using namespace hopfcalc;

namespace {

ProjectorSource source_from(const std::string& name) {
    if (name == "etilde") return ProjectorSource::e_tilde;
    if (name == "p") return ProjectorSource::p;
    throw std::invalid_argument("source must be 'etilde' or 'p'");
}

std::vector<std::vector<std::string>> rendered_rows(const PolyMatrix& m) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(render(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(hopfcalc, m) {
    m.doc() = "exact and numeric calculator for the circle bundle over the 2-sphere";

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::string& text) { return parse_poly(text); }),
             py::arg("text"))
        .def_static("one", &Poly::one)
        .def_static("zero", &Poly::zero)
        .def("__mul__", [](const Poly& x, const Poly& y) { return x * y; })
        .def("__add__", [](const Poly& x, const Poly& y) { return x + y; })
        .def("__sub__", [](const Poly& x, const Poly& y) { return x - y; })
        .def("__neg__", [](const Poly& x) { return -x; })
        .def("__eq__", [](const Poly& x, const Poly& y) { return x == y; })
        .def("__pow__", [](const Poly& x, unsigned n) { return x.pow(n); })
        .def("star", &Poly::star)
        .def("is_zero", &Poly::is_zero)
        .def("is_invariant", &Poly::is_invariant)
        .def("winding",
             [](const Poly& p) -> std::optional<std::int64_t> { return p.winding(); })
        .def("__str__", [](const Poly& p) { return render(p); })
        .def("__repr__", [](const Poly& p) { return "Poly('" + render(p) + "')"; });

    m.def("alpha_power", &alpha_power, py::arg("n"));
    m.def("antipode", &antipode, py::arg("p"));
    m.def("counit", [](const Poly& p) { return counit(p).to_complex(); }, py::arg("p"));
    m.def("isotypic_project", &isotypic_project, py::arg("p"), py::arg("mu"));

    m.def(
        "e_tilde", [](std::int64_t mu) { return rendered_rows(build_E_tilde(mu)); },
        py::arg("mu"), "polynomial idempotent for one winding module, rendered rows");
    m.def(
        "projector",
        [](std::int64_t mu) {
            RatFnProjector p = build_p(mu);
            py::dict out;
            out["num"] = rendered_rows(p.num);
            out["den"] = render(p.den);
            return out;
        },
        py::arg("mu"), "rational two-by-two idempotent as rendered numerators");

    m.def(
        "decompose",
        [](const Poly& f, std::int64_t mu) {
            if (!(isotypic_project(f, mu) == f))
                throw std::invalid_argument(
                    "polynomial is not homogeneous of the requested winding");
            SectionDecomposition d = decompose_section(f, mu);
            py::dict out;
            std::vector<std::string> coeffs, monos;
            for (const Poly& c : d.coefficients) coeffs.push_back(render(c));
            for (const Poly& g : d.monomials) monos.push_back(render(g));
            out["mu"] = d.mu;
            out["coefficients"] = coeffs;
            out["monomials"] = monos;
            out["reconstructs"] = d.reconstruct() == f;
            return out;
        },
        py::arg("f"), py::arg("mu"),
        "invariant coefficients of a homogeneous section plus a rebuild check");

    m.def(
        "chern_number",
        [](std::int64_t mu, unsigned n_theta, unsigned n_phi, const std::string& source) {
            return chern_number(mu, n_theta, n_phi, source_from(source));
        },
        py::arg("mu"), py::arg("n_theta") = 64, py::arg("n_phi") = 128,
        py::arg("source") = "etilde");
    m.def(
        "pairing",
        [](std::int64_t mu) {
            PairingResult r = pairing(mu);
            py::dict out;
            out["mu"] = r.mu;
            out["integral"] = r.integral;
            out["nearest"] = r.nearest;
            out["residual"] = r.residual;
            return out;
        },
        py::arg("mu"));
    m.def("chern_character_line", &chern_character_line, py::arg("mu"));

    m.def(
        "flow",
        [](double x, double y, double t) {
            PlanePoint q = flow({x, y}, t);
            return std::make_pair(q.x, q.y);
        },
        py::arg("x"), py::arg("y"), py::arg("t"));
    m.def(
        "translation_time",
        [](std::pair<double, double> p, std::pair<double, double> q) {
            return translation_time({p.first, p.second}, {q.first, q.second});
        },
        py::arg("p"), py::arg("q"));

    m.def(
        "hopf_projection",
        [](Complex a, Complex c) { return hopf_projection(S3Point(a, c)); },
        py::arg("a"), py::arg("c"),
        "base-sphere image (equatorial complex slot, height) of a unit pair");
    m.def(
        "heegaard",
        [](Complex a, Complex c) { return heegaard_maps(S3Point(a, c)); },
        py::arg("a"), py::arg("c"));
    m.def(
        "heegaard_inverse",
        [](Complex z1, Complex z2) {
            S3Point q = heegaard_inverse(z1, z2);
            return std::make_pair(q.a, q.c);
        },
        py::arg("z1"), py::arg("z2"));
    m.def(
        "transition_function",
        [](Complex a, Complex c) { return transition_function(S3Point(a, c)); },
        py::arg("a"), py::arg("c"));

    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed) {
            py::list out;
            for (const CheckResult& r : verify_suite(suite, seed)) {
                py::dict entry;
                entry["name"] = r.name;
                entry["ok"] = r.ok;
                entry["detail"] = r.detail;
                out.append(std::move(entry));
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("seed") = kDefaultSeed);

    m.attr("default_seed") = kDefaultSeed;
}
