// Python bindings. Types cross the boundary as plain tuples of ints and
// rationals as "p/q" strings; the pbun package wraps them in Fractions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pbun/eigenform.hpp"
#include "pbun/error.hpp"
#include "pbun/extensions.hpp"
#include "pbun/hecke.hpp"
#include "pbun/oracle.hpp"
#include "pbun/toroidal.hpp"

namespace py = pybind11;
using namespace pbun;

namespace {

using Gaps = std::vector<int>;

std::vector<std::string> coefficients(const QPoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

EigenPair pair_from(const std::string& l1, const std::string& l2) {
    return {parse_rational(l1), parse_rational(l2)};
}

// Lists of (gaps, value) pairs: Python cannot hash the list a vector key
// would become.
std::vector<std::pair<Gaps, std::string>> table_values(const FormTable& t) {
    std::vector<std::pair<Gaps, std::string>> out;
    for (const auto& [type, value] : t.values) out.emplace_back(type.gaps(), to_string(value));
    return out;
}

FormTable table_from(const std::map<Gaps, std::string>& values, int bound, std::int64_t q0) {
    FormTable t;
    t.bound = bound;
    t.q0 = q0;
    for (const auto& [gaps, value] : values) t.values[ProjectiveType(gaps)] = parse_rational(value);
    return t;
}

} // namespace

PYBIND11_MODULE(_pbun, m) {
    m.doc() = "Hecke graphs, eigenforms, cusp and toroidal checks on rank-3 bundles over the projective line";
    py::register_exception<Error>(m, "PbunError", PyExc_ValueError);

    m.def("enumerate_pbun", [](std::size_t n, int bound) {
        std::vector<Gaps> out;
        for (const auto& p : bundles::enumerate_pbun(n, bound)) out.push_back(p.gaps());
        return out;
    }, py::arg("n"), py::arg("bound"));
    m.def("pbun_count", &bundles::pbun_count, py::arg("n"), py::arg("bound"));
    m.def("canonical_projective", [](const std::vector<int>& degrees) {
        return bundles::canonical_projective(SplittingType(degrees)).gaps();
    }, py::arg("degrees"));
    m.def("h0", [](const std::vector<int>& degrees, int k) { return bundles::h0(SplittingType(degrees), k); },
          py::arg("degrees"), py::arg("k"));
    m.def("splitting_from_h0_profile", [](const bundles::H0Profile& profile, std::size_t n) {
        return bundles::splitting_from_h0_profile(profile, n).degrees();
    }, py::arg("profile"), py::arg("n"));
    m.def("dualize", [](const Gaps& gaps) { return bundles::dualize(ProjectiveType(gaps)).gaps(); }, py::arg("gaps"));

    m.def("gaussian_binomial", [](int n, int r) { return coefficients(qpoly::gaussian_binomial(n, r)); },
          py::arg("n"), py::arg("r"));
    m.def("phi_neighbors", [](int r, const Gaps& gaps) {
        std::vector<std::pair<Gaps, std::vector<std::string>>> out;
        for (const auto& [type, weight] : hecke::phi_neighbors(r, ProjectiveType(gaps))) {
            out.emplace_back(type.gaps(), coefficients(weight));
        }
        return out;
    }, py::arg("r"), py::arg("gaps"));
    m.def("hecke_graph", [](int r, int bound, const std::string& format, unsigned jobs) {
        const auto g = hecke::build_graph(r, bound, jobs);
        if (format == "dot") return hecke::to_dot(g);
        if (format == "csv") return hecke::to_csv(g);
        if (format != "json") throw Error("unknown format: " + format);
        return hecke::to_json(g).dump();
    }, py::arg("r"), py::arg("bound"), py::arg("format") = "json", py::arg("jobs") = 1);

    m.def("neighbor_oracle", [](const Gaps& gaps, int r, std::uint32_t q0) {
        std::vector<std::pair<Gaps, std::uint64_t>> out;
        for (const auto& [type, count] : oracle::neighbor_oracle(ProjectiveType(gaps), r, q0).counts) {
            out.emplace_back(type.gaps(), count);
        }
        return out;
    }, py::arg("gaps"), py::arg("r"), py::arg("q0"));
    m.def("verify_rules", [](int bound, const std::vector<std::uint32_t>& primes, unsigned jobs) {
        return oracle::to_json(oracle::verify_rules(bound, primes, jobs)).dump();
    }, py::arg("bound"), py::arg("primes"), py::arg("jobs") = 1);

    m.def("solve_eigenform", [](const std::string& l1, const std::string& l2, std::int64_t q0, int bound,
                                const std::string& f0) {
        return table_values(eigen::solve_eigenform(pair_from(l1, l2), q0, bound, parse_rational(f0)));
    }, py::arg("lambda1"), py::arg("lambda2"), py::arg("q0"), py::arg("bound"), py::arg("f0") = "1");
    m.def("solve_by_elimination", [](const std::string& l1, const std::string& l2, std::int64_t q0, int bound,
                                     const std::string& f0) {
        return table_values(eigen::solve_by_elimination(pair_from(l1, l2), q0, bound, parse_rational(f0)));
    }, py::arg("lambda1"), py::arg("lambda2"), py::arg("q0"), py::arg("bound"), py::arg("f0") = "1");
    m.def("verify_hecke_relations", [](const std::map<Gaps, std::string>& values, const std::string& l1,
                                       const std::string& l2, std::int64_t q0, int bound) {
        return eigen::verify_hecke_relations(table_from(values, bound, q0), pair_from(l1, l2)).ok();
    }, py::arg("values"), py::arg("lambda1"), py::arg("lambda2"), py::arg("q0"), py::arg("bound"));

    m.def("ext_dim", [](const std::vector<int>& quotient, const std::vector<int>& sub) {
        return ext::ext_dim(SplittingType(quotient), SplittingType(sub));
    }, py::arg("quotient"), py::arg("sub"));
    m.def("middle_term", [](const std::vector<int>& quotient, const std::vector<int>& sub, std::uint32_t q0,
                            const std::vector<fq::Residue>& coords) {
        const auto c = ext::class_from_coordinates(SplittingType(quotient), SplittingType(sub), q0, coords);
        return ext::middle_term(c, q0).gaps();
    }, py::arg("quotient"), py::arg("sub"), py::arg("q0"), py::arg("coords"));
    m.def("cuspidal_sum", [](const std::map<Gaps, std::string>& values, int bound, const std::vector<int>& quotient,
                             const std::vector<int>& sub, std::uint32_t q0) {
        return to_string(ext::cuspidal_sum(table_from(values, bound, q0), SplittingType(quotient), SplittingType(sub), q0));
    }, py::arg("values"), py::arg("bound"), py::arg("quotient"), py::arg("sub"), py::arg("q0"));
    m.def("cusp_space_dimension", &ext::cusp_space_dimension, py::arg("bound"), py::arg("q0"), py::arg("jobs") = 1);

    m.def("toroidal_sum", [](const std::map<Gaps, std::string>& values, int bound, std::int64_t q0) {
        return to_string(toroidal::toroidal_sum(table_from(values, bound, q0)).sum);
    }, py::arg("values"), py::arg("bound"), py::arg("q0"));
    m.def("toroidal_eigen_intersection", [](const std::string& l1, const std::string& l2, std::int64_t q0, int bound) {
        const auto v = toroidal::toroidal_eigen_intersection(pair_from(l1, l2), q0, bound);
        py::dict out;
        out["eigenform_sum"] = to_string(v.eigenform_sum);
        out["augmented_nullity"] = v.augmented_nullity;
        out["trivial_intersection"] = v.trivial_intersection;
        return out;
    }, py::arg("lambda1"), py::arg("lambda2"), py::arg("q0"), py::arg("bound"));
}
