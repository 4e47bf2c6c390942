#include "pbun/hecke.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "parallel.hpp"
#include "pbun/error.hpp"

namespace pbun::hecke {

namespace {

ProjectiveType e(int a, int b) { return ProjectiveType({a, b}); }

const QPoly kOne{1};
const QPoly kQ{0, 1};
const QPoly kQ2{0, 0, 1};
const QPoly kQPlus1{1, 1};
const QPoly kQ2PlusQ{0, 1, 1};
const QPoly kQ2PlusQPlus1{1, 1, 1};

void require_rank3(const ProjectiveType& p) {
    if (p.rank() != 3) throw Error("unsupported rank: " + std::to_string(p.rank()));
}

// Phi_{x,2}
std::vector<Neighbor> phi2(const ProjectiveType& p) {
    const int a = p.gaps()[0];
    const int b = p.gaps()[1];
    switch (classify(p)) {
    case Shape::Trivial:
        return {{e(0, 1), kQ2PlusQPlus1}};
    case Shape::Single:
        return {{e(0, b + 1), kQ2}, {e(1, b), kQPlus1}};
    case Shape::Double:
        return {{e(a, a + 1), kQ2PlusQ}, {e(a - 1, a - 1), kOne}};
    case Shape::Generic:
        return {{e(a + 1, b), kQ}, {e(a, b + 1), kQ2}, {e(a - 1, b - 1), kOne}};
    }
    throw Error("unreachable vertex shape");
}

// Phi_{x,1}
std::vector<Neighbor> phi1(const ProjectiveType& p) {
    const int a = p.gaps()[0];
    const int b = p.gaps()[1];
    switch (classify(p)) {
    case Shape::Trivial:
        return {{e(1, 1), kQ2PlusQPlus1}};
    case Shape::Single:
        return {{e(1, b + 1), kQ2PlusQ}, {e(0, b - 1), kOne}};
    case Shape::Double:
        return {{e(a + 1, a + 1), kQ2}, {e(a - 1, a), kQPlus1}};
    case Shape::Generic:
        return {{e(a + 1, b + 1), kQ2}, {e(a, b - 1), kOne}, {e(a - 1, b), kQ}};
    }
    throw Error("unreachable vertex shape");
}

} // namespace

Shape classify(const ProjectiveType& p) {
    require_rank3(p);
    const int a = p.gaps()[0];
    const int b = p.gaps()[1];
    if (b == 0) return Shape::Trivial;
    if (a == 0) return Shape::Single;
    if (a == b) return Shape::Double;
    return Shape::Generic;
}

std::vector<Neighbor> phi_neighbors(int r, const ProjectiveType& p) {
    require_rank3(p);
    if (r == 1) return phi1(p);
    if (r == 2) return phi2(p);
    throw Error("unsupported operator: r = " + std::to_string(r));
}

std::vector<Neighbor> phi3_neighbors(const ProjectiveType& p) {
    require_rank3(p);
    return {{p, kOne}};
}

bool HeckeGraph::contains(const ProjectiveType& p) const {
    return p.rank() == 3 && p.spread() <= bound;
}

std::vector<const HeckeEdge*> HeckeGraph::out_edges(const ProjectiveType& p) const {
    std::vector<const HeckeEdge*> out;
    for (const auto& edge : edges) {
        if (edge.src == p) out.push_back(&edge);
    }
    return out;
}

QPoly HeckeGraph::weight(const ProjectiveType& src, const ProjectiveType& dst) const {
    for (const auto& edge : edges) {
        if (edge.src == src && edge.dst == dst) return edge.weight;
    }
    return {};
}

HeckeGraph build_graph(int r, int bound, unsigned jobs) {
    if (r < 1 || r > 3) throw Error("unsupported operator: r = " + std::to_string(r));
    if (bound < 1) throw Error("degree bound must be at least 1");

    HeckeGraph g;
    g.op = r;
    g.bound = bound;
    g.vertices = bundles::enumerate_pbun(3, bound);

    auto lists = detail::parallel_map(g.vertices.size(), jobs, [&](std::size_t i) {
        return r == 3 ? phi3_neighbors(g.vertices[i]) : phi_neighbors(r, g.vertices[i]);
    });

    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& src = g.vertices[i];
        // Aggregate by destination, keeping first-seen order.
        std::vector<HeckeEdge> out;
        for (auto& [dst, w] : lists[i]) {
            if (dst.spread() > bound) {
                g.boundary.insert(src);
                continue;
            }
            auto it = std::find_if(out.begin(), out.end(), [&](const HeckeEdge& e) { return e.dst == dst; });
            if (it == out.end()) {
                out.push_back({src, dst, w});
            } else {
                it->weight += w;
            }
        }
        for (auto& edge : out) g.edges.push_back(std::move(edge));
    }
    return g;
}

FormTable apply_hecke(const HeckeGraph& g, const FormTable& f, std::int64_t q0) {
    for (const auto& v : g.vertices) f.at(v);
    if (!is_prime_power(q0)) throw Error("not a prime power: " + std::to_string(q0));

    FormTable out;
    out.bound = g.bound;
    out.q0 = q0;
    for (const auto& v : g.vertices) {
        if (g.boundary.count(v)) continue;
        out.values.emplace(v, Rational(0));
    }
    for (const auto& edge : g.edges) {
        auto it = out.values.find(edge.src);
        if (it == out.values.end()) continue;
        it->second += Rational(edge.weight.eval(q0)) * f.at(edge.dst);
    }
    return out;
}

std::optional<Rational> hecke_value_at(const HeckeGraph& g, const FormTable& f, const ProjectiveType& v,
                                       std::int64_t q0) {
    if (!g.is_interior(v)) return std::nullopt;
    Rational total(0);
    for (const auto* edge : g.out_edges(v)) {
        auto it = f.values.find(edge->dst);
        if (it == f.values.end()) return std::nullopt;
        total += Rational(edge->weight.eval(q0)) * it->second;
    }
    return total;
}

std::string to_dot(const HeckeGraph& g) {
    std::ostringstream os;
    os << "digraph phi_x" << g.op << " {\n";
    for (const auto& v : g.vertices) {
        os << "  \"" << v << "\" [label=\"" << v << '"';
        if (g.boundary.count(v)) os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& edge : g.edges) {
        os << "  \"" << edge.src << "\" -> \"" << edge.dst << "\" [label=\"" << edge.weight.to_string() << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json to_json(const HeckeGraph& g) {
    nlohmann::ordered_json j;
    j["operator"] = g.op;
    j["bound"] = g.bound;
    auto vertices = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices) vertices.push_back(v.gaps());
    j["vertices"] = std::move(vertices);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& edge : g.edges) {
        nlohmann::ordered_json je;
        je["src"] = edge.src.gaps();
        je["dst"] = edge.dst.gaps();
        nlohmann::json w = edge.weight;
        je["weight"] = w;
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    auto boundary = nlohmann::ordered_json::array();
    for (const auto& v : g.boundary) boundary.push_back(v.gaps());
    j["boundary"] = std::move(boundary);
    return j;
}

std::string to_csv(const HeckeGraph& g) {
    std::ostringstream os;
    os << "src,dst,weight,src_boundary\n";
    for (const auto& edge : g.edges) {
        os << '"' << edge.src << "\",\"" << edge.dst << "\"," << edge.weight.to_string() << ','
           << (g.boundary.count(edge.src) ? 1 : 0) << '\n';
    }
    return os.str();
}

} // namespace pbun::hecke
