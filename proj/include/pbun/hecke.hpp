#pragma once

// Hecke operators Phi_{x,r} of PGL_3 at a degree-one place of the
// projective line, as weighted graphs on projective bundle classes.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbun/bundles.hpp"
#include "pbun/form_table.hpp"
#include "pbun/qpoly.hpp"

namespace pbun::hecke {

using Neighbor = std::pair<ProjectiveType, QPoly>;

/// The four rank-3 vertex shapes: e0 = O+O+O, e_d = O+O+O(d),
/// e_{d,d} = O+O(d)+O(d) and e_{d1,d2} = O+O(d1)+O(d2) with 0 < d1 < d2.
enum class Shape { Trivial, Single, Double, Generic };

Shape classify(const ProjectiveType& p);

/// Phi_{x,r}-neighbors of p (r = 1, 2) with multiplicities in q, listed in
/// the order of the closed-form tables. Throws "unsupported rank" for
/// rank != 3 and "unsupported operator" for other r.
std::vector<Neighbor> phi_neighbors(int r, const ProjectiveType& p);

/// Phi_{x,3} twists by O(x), which fixes every projective class.
std::vector<Neighbor> phi3_neighbors(const ProjectiveType& p);

struct HeckeEdge {
    ProjectiveType src;
    ProjectiveType dst;
    QPoly weight;
};

/// The Hecke graph of one operator restricted to enumerate_pbun(3, bound).
/// Edges leaving the truncation are dropped and their source is recorded
/// as a boundary vertex.
struct HeckeGraph {
    int op = 1;
    int bound = 1;
    std::vector<ProjectiveType> vertices;
    std::vector<HeckeEdge> edges;
    std::set<ProjectiveType> boundary;

    bool contains(const ProjectiveType& p) const;
    bool is_interior(const ProjectiveType& p) const { return contains(p) && !boundary.count(p); }
    std::vector<const HeckeEdge*> out_edges(const ProjectiveType& p) const;
    /// Weight of src -> dst, zero when there is no such edge.
    QPoly weight(const ProjectiveType& src, const ProjectiveType& dst) const;
};

/// r in {1, 2, 3}, bound >= 1. `jobs` > 1 builds the neighbor lists on a
/// worker pool; the result does not depend on it.
HeckeGraph build_graph(int r, int bound, unsigned jobs = 1);

/// (Phi f)(v) = sum over edges v -> w of weight(q0) f(w), on interior
/// vertices only. Throws "missing value" if f lacks a vertex of g.
FormTable apply_hecke(const HeckeGraph& g, const FormTable& f, std::int64_t q0);

/// (Phi f)(v) when v is interior and f is known at every neighbor of v,
/// otherwise nullopt. Composing operators this way yields exactly the
/// values at doubly interior vertices.
std::optional<Rational> hecke_value_at(const HeckeGraph& g, const FormTable& f, const ProjectiveType& v,
                                       std::int64_t q0);

std::string to_dot(const HeckeGraph& g);
nlohmann::ordered_json to_json(const HeckeGraph& g);
/// One line per edge: src,dst,weight with a header row.
std::string to_csv(const HeckeGraph& g);

} // namespace pbun::hecke
