#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ftsent/io.hpp"
#include "ftsent/slocc.hpp"

namespace py = pybind11;
using namespace ftsent;

namespace {

ThreeQubitState<Complex> state_from_seq(const std::vector<Complex>& amps) {
    if (amps.size() != 8)
        throw std::invalid_argument("expected exactly 8 amplitudes (a000..a111, index 4A+2B+C)");
    ThreeQubitState<Complex> s;
    for (int i = 0; i < 8; ++i) s[i] = amps[static_cast<std::size_t>(i)];
    return s;
}

ThreeQubitState<GaussianRational> exact_state_from_seq(
    const std::vector<std::pair<std::string, std::string>>& amps) {
    if (amps.size() != 8)
        throw std::invalid_argument("expected exactly 8 (re, im) rational string pairs");
    ThreeQubitState<GaussianRational> s;
    for (int i = 0; i < 8; ++i) {
        const auto& [re, im] = amps[static_cast<std::size_t>(i)];
        s[i] = GaussianRational(parse_rational(re), parse_rational(im));
    }
    return s;
}

py::object json_to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::vector<std::vector<Complex>>> operator_to_lists(const LocalOperator<Complex>& g) {
    auto mat = [](const SmallMatrix<Complex, 2>& m) {
        return std::vector<std::vector<Complex>>{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
    };
    return {mat(g.op_a), mat(g.op_b), mat(g.op_c)};
}

LocalOperator<Complex> operator_from_lists(const std::vector<std::vector<std::vector<Complex>>>& v) {
    if (v.size() != 3) throw std::invalid_argument("expected 3 factors");
    LocalOperator<Complex> g;
    SmallMatrix<Complex, 2>* ops[3] = {&g.op_a, &g.op_b, &g.op_c};
    for (int f = 0; f < 3; ++f) {
        const auto& m = v[static_cast<std::size_t>(f)];
        if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
            throw std::invalid_argument("each factor must be 2x2");
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                (*ops[f])(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Three-qubit SLOCC entanglement classification via the Freudenthal triple "
              "system over C+C+C";

    m.def(
        "classify",
        [](const std::vector<Complex>& amps, double epsilon, bool real) {
            auto s = state_from_seq(amps);
            ToleranceConfig tol;
            tol.epsilon = epsilon;
            auto c = real ? classify_real(s, tol) : classify_fts(s, tol);
            return json_to_py(classification_to_json("state", c));
        },
        py::arg("amplitudes"), py::arg("epsilon") = 1e-9, py::arg("real") = false,
        "Classify a state (8 complex amplitudes, index order a000..a111).");

    m.def(
        "classify_exact",
        [](const std::vector<std::pair<std::string, std::string>>& amps, bool real) {
            auto s = exact_state_from_seq(amps);
            auto c = real ? classify_real(s) : classify_fts(s);
            return json_to_py(classification_to_json("state", c));
        },
        py::arg("amplitudes"), py::arg("real") = false,
        "Classify with exact Gaussian-rational arithmetic; amplitudes are (re, im) "
        "rational string pairs like ('1/2', '0').");

    m.def(
        "invariants",
        [](const std::vector<Complex>& amps) {
            return json_to_py(invariant_report_to_json("state", state_from_seq(amps)));
        },
        py::arg("amplitudes"), "LU invariant report plus residual diagnostics.");

    m.def(
        "invariants_exact",
        [](const std::vector<std::pair<std::string, std::string>>& amps) {
            return json_to_py(invariant_report_to_json("state", exact_state_from_seq(amps)));
        },
        py::arg("amplitudes"));

    m.def(
        "orbit_dimensions",
        [](const std::vector<Complex>& amps) {
            auto s = state_from_seq(amps);
            auto orbit = orbit_dimension(s);
            auto proj = projective_orbit_dimension(s);
            py::dict d;
            d["orbit"] = orbit.dim;
            d["stabilizer"] = stabilizer_dimension(orbit);
            d["projective"] = proj.dim;
            d["gap_ratio"] = orbit.gap_ratio;
            d["determinate"] = orbit.determinate && proj.determinate;
            return d;
        },
        py::arg("amplitudes"), "Complex SLOCC orbit/stabilizer/projective dimensions.");

    m.def(
        "real_orbit_dimension",
        [](const std::vector<Complex>& amps) {
            auto r = real_orbit_dimension(state_from_seq(amps));
            py::dict d;
            d["orbit"] = r.dim;
            d["gap_ratio"] = r.gap_ratio;
            d["determinate"] = r.determinate;
            return d;
        },
        py::arg("amplitudes"));

    m.def(
        "apply_slocc",
        [](const std::vector<std::vector<std::vector<Complex>>>& op,
           const std::vector<Complex>& amps) {
            auto img = apply_slocc(operator_from_lists(op), state_from_seq(amps));
            std::vector<Complex> out(8);
            for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>(i)] = img[i];
            return out;
        },
        py::arg("op"), py::arg("amplitudes"),
        "Apply an SL(2,C)^3 element given as three 2x2 matrices.");

    m.def(
        "random_slocc",
        [](std::uint64_t seed, double spread) { return operator_to_lists(random_slocc(seed, spread)); },
        py::arg("seed"), py::arg("spread") = 1.0, "Seeded random SL(2,C)^3 element.");

    m.def(
        "class_representative",
        [](const std::string& name) {
            auto cls = class_from_string(name);
            if (!cls) throw std::invalid_argument("unknown class '" + name + "'");
            auto s = class_representative<Complex>(*cls);
            std::vector<Complex> out(8);
            for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>(i)] = s[i];
            return out;
        },
        py::arg("name"), "Unnormalized representative of a class (Null, A-B-C, A-BC, B-CA, C-AB, W, GHZ).");

    m.def("hierarchy", [] { return hierarchy_export(); },
          "Class stratification as a 'src -> dst' edge list (transitive reduction).");

    m.def(
        "hyperdet",
        [](const std::vector<Complex>& amps) { return hyperdet(state_from_seq(amps)); },
        py::arg("amplitudes"), "Cayley hyperdeterminant of the 2x2x2 amplitude tensor.");

    m.def(
        "three_tangle",
        [](const std::vector<Complex>& amps) { return three_tangle(state_from_seq(amps)); },
        py::arg("amplitudes"));

    m.attr("__version__") = "0.1.0";
}
