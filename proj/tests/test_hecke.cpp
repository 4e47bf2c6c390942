#include <doctest.h>

#include <random>

#include "pbun/error.hpp"
#include "pbun/hecke.hpp"
#include "support.hpp"

using namespace pbun;
using namespace pbun::hecke;
using testing::P;

namespace {

const QPoly kRowSum{1, 1, 1};

QPoly row_sum(const HeckeGraph& g, const ProjectiveType& v) {
    QPoly total;
    for (const auto* e : g.out_edges(v)) total += e->weight;
    return total;
}

} // namespace

TEST_CASE("shape classification") {
    CHECK(classify(P(0, 0)) == Shape::Trivial);
    CHECK(classify(P(0, 4)) == Shape::Single);
    CHECK(classify(P(3, 3)) == Shape::Double);
    CHECK(classify(P(1, 4)) == Shape::Generic);
}

TEST_CASE("phi2 neighbor tables") {
    CHECK(phi_neighbors(2, P(0, 0)) == std::vector<Neighbor>{{P(0, 1), QPoly{1, 1, 1}}});
    CHECK(phi_neighbors(2, P(0, 3)) == std::vector<Neighbor>{{P(0, 4), QPoly{0, 0, 1}}, {P(1, 3), QPoly{1, 1}}});
    CHECK(phi_neighbors(2, P(2, 2)) == std::vector<Neighbor>{{P(2, 3), QPoly{0, 1, 1}}, {P(1, 1), QPoly{1}}});
    CHECK(phi_neighbors(2, P(1, 2)) ==
          std::vector<Neighbor>{{P(2, 2), QPoly{0, 1}}, {P(1, 3), QPoly{0, 0, 1}}, {P(0, 1), QPoly{1}}});
}

TEST_CASE("phi1 neighbor tables") {
    CHECK(phi_neighbors(1, P(0, 0)) == std::vector<Neighbor>{{P(1, 1), QPoly{1, 1, 1}}});
    for (int d = 1; d <= 5; ++d) {
        CHECK(phi_neighbors(1, P(0, d)) ==
              std::vector<Neighbor>{{P(1, d + 1), QPoly{0, 1, 1}}, {P(0, d - 1), QPoly{1}}});
    }
    CHECK(phi_neighbors(1, P(2, 2)) == std::vector<Neighbor>{{P(3, 3), QPoly{0, 0, 1}}, {P(1, 2), QPoly{1, 1}}});
    CHECK(phi_neighbors(1, P(2, 4)) ==
          std::vector<Neighbor>{{P(3, 5), QPoly{0, 0, 1}}, {P(2, 3), QPoly{1}}, {P(1, 4), QPoly{0, 1}}});
}

TEST_CASE("phi3 fixes every class") {
    for (const auto& p : {P(0, 0), P(1, 2), P(0, 3)}) {
        CHECK(phi3_neighbors(p) == std::vector<Neighbor>{{p, QPoly{1}}});
    }
}

TEST_CASE("unsupported inputs") {
    CHECK_THROWS_WITH_AS(phi_neighbors(3, P(0, 0)), doctest::Contains("unsupported operator"), Error);
    CHECK_THROWS_WITH_AS(phi_neighbors(1, ProjectiveType({1})), doctest::Contains("unsupported rank"), Error);
}

TEST_CASE("truncated graphs at bound 1") {
    const auto g2 = build_graph(2, 1);
    CHECK(g2.edges.size() == 3);
    CHECK(g2.weight(P(0, 0), P(0, 1)) == QPoly{1, 1, 1});
    CHECK(g2.weight(P(0, 1), P(1, 1)) == QPoly{1, 1});
    CHECK(g2.weight(P(1, 1), P(0, 0)) == QPoly{1});
    CHECK(g2.boundary == std::set<ProjectiveType>{P(0, 1), P(1, 1)});

    const auto g1 = build_graph(1, 1);
    CHECK(g1.edges.size() == 3);
    CHECK(g1.weight(P(0, 0), P(1, 1)) == QPoly{1, 1, 1});
    CHECK(g1.weight(P(1, 1), P(0, 1)) == QPoly{1, 1});
    CHECK(g1.weight(P(0, 1), P(0, 0)) == QPoly{1});
    CHECK(g1.boundary == std::set<ProjectiveType>{P(0, 1), P(1, 1)});

    const auto g3 = build_graph(3, 4);
    CHECK(g3.boundary.empty());
    CHECK(g3.edges.size() == g3.vertices.size());
    for (const auto& e : g3.edges) CHECK(e.src == e.dst);
}

TEST_CASE("edges are nonzero and unique, endpoints in the truncation") {
    for (int r : {1, 2, 3}) {
        const auto g = build_graph(r, 7);
        std::set<std::pair<ProjectiveType, ProjectiveType>> seen;
        for (const auto& e : g.edges) {
            CHECK_FALSE(e.weight.is_zero());
            CHECK(seen.emplace(e.src, e.dst).second);
            CHECK(g.contains(e.src));
            CHECK(g.contains(e.dst));
        }
    }
}

TEST_CASE("row sums of interior vertices") {
    for (int r : {1, 2}) {
        const auto g = build_graph(r, 9);
        for (const auto& v : g.vertices) {
            if (g.is_interior(v)) CHECK(row_sum(g, v) == kRowSum);
        }
    }
    const auto g3 = build_graph(3, 5);
    for (const auto& v : g3.vertices) CHECK(row_sum(g3, v) == QPoly{1});
}

TEST_CASE("phi1 and phi2 are dual") {
    const auto g1 = build_graph(1, 8);
    const auto g2 = build_graph(2, 8);
    for (const auto& p : g1.vertices) {
        for (const auto& [dst, w] : phi_neighbors(1, p)) {
            bool found = false;
            for (const auto& [ddst, dw] : phi_neighbors(2, bundles::dualize(p))) {
                if (ddst == bundles::dualize(dst)) {
                    CHECK(dw == w);
                    found = true;
                }
            }
            CHECK(found);
        }
        for (const auto& p2 : g1.vertices) {
            if (g2.contains(bundles::dualize(p)) && g2.contains(bundles::dualize(p2))) {
                CHECK(g1.weight(p, p2) == g2.weight(bundles::dualize(p), bundles::dualize(p2)));
            }
        }
    }
}

TEST_CASE("apply_hecke examples") {
    const auto g2 = build_graph(2, 4);
    FormTable ones = zero_table(4, 2);
    for (auto& [v, x] : ones.values) x = 1;
    const auto out = apply_hecke(g2, ones, 2);
    for (const auto& v : g2.vertices) {
        if (g2.is_interior(v)) {
            CHECK(out.at(v) == 7);
        } else {
            CHECK_FALSE(out.contains(v));
        }
    }

    std::mt19937_64 rng(3);
    const auto f = testing::random_table(rng, 4, 3);
    const auto id = apply_hecke(build_graph(3, 4), f, 3);
    CHECK(id.values == f.values);

    const auto g1 = build_graph(1, 2);
    FormTable delta = zero_table(2, 2);
    delta.values[P(0, 0)] = 1;
    const auto hit = apply_hecke(g1, delta, 2);
    CHECK(hit.at(P(0, 1)) == 1);
    CHECK(hit.at(P(1, 1)) == 0);
    CHECK(hit.at(P(0, 0)) == 0);

    FormTable partial = zero_table(1, 2);
    partial.values.erase(P(1, 1));
    CHECK_THROWS_WITH_AS(apply_hecke(build_graph(2, 1), partial, 2), doctest::Contains("missing value"), Error);
}

TEST_CASE("phi1 and phi2 commute on doubly interior vertices") {
    const int bound = 8;
    const auto g1 = build_graph(1, bound);
    const auto g2 = build_graph(2, bound);
    std::mt19937_64 rng(17);
    for (std::int64_t q0 : {2, 3, 4}) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto f = testing::random_table(rng, bound, q0);
            const auto phi2f = apply_hecke(g2, f, q0);
            const auto phi1f = apply_hecke(g1, f, q0);
            std::size_t compared = 0;
            for (const auto& v : g1.vertices) {
                const auto a = hecke_value_at(g1, phi2f, v, q0);
                const auto b = hecke_value_at(g2, phi1f, v, q0);
                if (a && b) {
                    CHECK(*a == *b);
                    ++compared;
                }
            }
            CHECK(compared > 0);
        }
    }
}

TEST_CASE("partial evaluation") {
    const auto g = build_graph(2, 3);
    FormTable f = zero_table(3, 2);
    for (auto& [v, x] : f.values) x = 1;
    CHECK(hecke_value_at(g, f, P(0, 0), 2) == Rational(7));
    CHECK_FALSE(hecke_value_at(g, f, P(3, 3), 2).has_value());
    f.values.erase(P(0, 1));
    CHECK_FALSE(hecke_value_at(g, f, P(0, 0), 2).has_value());
}

TEST_CASE("graph construction does not depend on the worker count") {
    for (int r : {1, 2}) {
        const auto a = build_graph(r, 10, 1);
        const auto b = build_graph(r, 10, 4);
        CHECK(to_json(a) == to_json(b));
        CHECK(to_dot(a) == to_dot(b));
    }
}

TEST_CASE("exports") {
    const auto g = build_graph(2, 3);
    const std::string dot = to_dot(g);
    std::size_t labels = 0;
    for (std::size_t pos = dot.find("label=\"e("); pos != std::string::npos; pos = dot.find("label=\"e(", pos + 1)) ++labels;
    CHECK(labels == 10);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);
    CHECK(dot.find("q^2+q+1") != std::string::npos);

    const auto j = to_json(g);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"operator", "bound", "vertices", "edges", "boundary"});
    CHECK(j["vertices"].size() == 10);
    CHECK(j["edges"][0]["weight"] == nlohmann::json::array({1, 1, 1}));

    const std::string csv = to_csv(g);
    CHECK(csv.rfind("src,dst,weight,src_boundary\n", 0) == 0);
    CHECK(csv.find("\"e(0,0)\",\"e(0,1)\",q^2+q+1,0\n") != std::string::npos);
}
