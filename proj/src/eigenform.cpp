#include "pbun/eigenform.hpp"

#include <map>

#include "pbun/error.hpp"
#include "pbun/hecke.hpp"

namespace pbun::eigen {

namespace {

ProjectiveType e(int a, int b) { return ProjectiveType({a, b}); }

std::string relation_label(int r, const ProjectiveType& center) { return "phi" + std::to_string(r) + "@" + label(center); }

struct PlannedStep {
    ProjectiveType vertex;
    int r;
    ProjectiveType center;
};

std::vector<PlannedStep> plan(int bound) {
    std::vector<PlannedStep> steps;
    for (int b = 1; b <= bound; ++b) {
        for (int a = 0; a <= b; ++a) {
            if (b == 1 && a == 0) {
                steps.push_back({e(0, 1), 2, e(0, 0)});
            } else if (b == 1 && a == 1) {
                steps.push_back({e(1, 1), 1, e(0, 0)});
            } else if (a == 0) {
                steps.push_back({e(0, b), 2, e(0, b - 1)});
            } else if (a == 1) {
                steps.push_back({e(1, b), 1, e(0, b - 1)});
            } else {
                // Both the diagonal and the off-diagonal case step up from
                // (a-1, b-1) along the q^2 edge of Phi_{x,1}.
                steps.push_back({e(a, b), 1, e(a - 1, b - 1)});
            }
        }
    }
    return steps;
}

void require_q0(std::int64_t q0) {
    if (!is_prime_power(q0)) throw Error("not a prime power: " + std::to_string(q0));
}

} // namespace

std::vector<RecursionStep> recursion_plan(int bound) {
    std::vector<RecursionStep> out{{e(0, 0), "pinned"}};
    for (const auto& s : plan(bound)) out.push_back({s.vertex, relation_label(s.r, s.center)});
    return out;
}

FormTable solve_eigenform(const EigenPair& pair, std::int64_t q0, int bound, const Rational& f0) {
    require_q0(q0);
    if (bound < 1) throw Error("degree bound must be at least 1");
    FormTable f;
    f.bound = bound;
    f.q0 = q0;
    f.lambda = pair;
    f.values[e(0, 0)] = f0;

    for (const auto& step : plan(bound)) {
        // lambda_r f(center) = sum_w m_w f(w); the step's vertex is the only
        // neighbor not yet known.
        const Rational& lambda = step.r == 1 ? pair.lambda1 : pair.lambda2;
        Rational rest = lambda * f.at(step.center);
        Rational coeff(0);
        for (const auto& [w, m] : hecke::phi_neighbors(step.r, step.center)) {
            const Rational weight(m.eval(q0));
            if (w == step.vertex) {
                coeff += weight;
            } else {
                rest -= weight * f.at(w);
            }
        }
        if (sgn(coeff) == 0) throw Error("recursion step does not involve its vertex");
        f.values[step.vertex] = rest / coeff;
    }
    return f;
}

std::vector<qlinalg::Row> relation_rows(const EigenPair& pair, std::int64_t q0, int bound) {
    require_q0(q0);
    const auto vertices = bundles::enumerate_pbun(3, bound);
    std::map<ProjectiveType, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;

    std::vector<qlinalg::Row> rows;
    for (int r : {1, 2}) {
        const auto g = hecke::build_graph(r, bound);
        const Rational& lambda = r == 1 ? pair.lambda1 : pair.lambda2;
        for (const auto& v : g.vertices) {
            if (!g.is_interior(v)) continue;
            qlinalg::Row row(vertices.size(), Rational(0));
            row[index.at(v)] -= lambda;
            for (const auto* edge : g.out_edges(v)) row[index.at(edge->dst)] += Rational(edge->weight.eval(q0));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

FormTable solve_by_elimination(const EigenPair& pair, std::int64_t q0, int bound, const Rational& f0) {
    auto rows = relation_rows(pair, q0, bound);
    const auto vertices = bundles::enumerate_pbun(3, bound);
    std::vector<Rational> rhs(rows.size(), Rational(0));
    qlinalg::Row pin(vertices.size(), Rational(0));
    pin[0] = 1;
    rows.push_back(std::move(pin));
    rhs.push_back(f0);

    const auto result = qlinalg::eliminate(std::move(rows), std::move(rhs), vertices.size());
    if (!result.consistent) throw Error("system inconsistent");
    if (result.rank < vertices.size()) throw Error("system singular");

    FormTable f;
    f.bound = bound;
    f.q0 = q0;
    f.lambda = pair;
    for (std::size_t i = 0; i < vertices.size(); ++i) f.values[vertices[i]] = (*result.particular)[i];
    return f;
}

std::size_t unpinned_nullity(const EigenPair& pair, std::int64_t q0, int bound) {
    return qlinalg::nullity(relation_rows(pair, q0, bound), bundles::pbun_count(3, bound));
}

RelationReport verify_hecke_relations(const FormTable& f, const EigenPair& pair) {
    RelationReport report;
    for (int r : {1, 2}) {
        const auto g = hecke::build_graph(r, f.bound);
        const auto image = hecke::apply_hecke(g, f, f.q0);
        const Rational& lambda = r == 1 ? pair.lambda1 : pair.lambda2;
        for (const auto& [v, value] : image.values) {
            ++report.checked;
            const Rational expected = lambda * f.at(v);
            if (value != expected) report.violations.push_back({r, v, expected, value});
        }
    }
    return report;
}

nlohmann::ordered_json to_json(const RelationReport& report) {
    nlohmann::ordered_json j;
    j["checked"] = report.checked;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
        nlohmann::ordered_json e;
        e["r"] = v.r;
        e["vertex"] = v.vertex.gaps();
        e["expected"] = to_string(v.expected);
        e["got"] = to_string(v.got);
        arr.push_back(std::move(e));
    }
    j["violations"] = std::move(arr);
    return j;
}

} // namespace pbun::eigen
