#pragma once

// Simultaneous Phi_{x,1} / Phi_{x,2} eigenforms on the truncated PBun_3.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbun/form_table.hpp"
#include "pbun/rational_linalg.hpp"

namespace pbun::eigen {

/// Which eigen-relation determines a vertex during the recursion, e.g.
/// "phi1@e(0,3)" is the Phi_{x,1} relation centered at e_3.
struct RecursionStep {
    ProjectiveType vertex;
    std::string relation;
};

/// The vertex order and determining relation used by solve_eigenform:
/// rows of increasing largest gap, smaller gap first within a row.
std::vector<RecursionStep> recursion_plan(int bound);

/// Fills enumerate_pbun(3, bound) from f(e0) = f0 by solving each relation
/// of recursion_plan for its single new vertex. q0 must be a prime power.
FormTable solve_eigenform(const EigenPair& pair, std::int64_t q0, int bound, const Rational& f0);

/// The linear system of all eigen-relations at interior vertices of the
/// Phi_{x,1} and Phi_{x,2} graphs, unknowns in enumerate_pbun order.
std::vector<qlinalg::Row> relation_rows(const EigenPair& pair, std::int64_t q0, int bound);

/// Solves relation_rows with f(e0) = f0 pinned. Throws "system singular"
/// or "system inconsistent".
FormTable solve_by_elimination(const EigenPair& pair, std::int64_t q0, int bound, const Rational& f0);

/// Nullity of relation_rows with f(e0) free.
std::size_t unpinned_nullity(const EigenPair& pair, std::int64_t q0, int bound);

struct Violation {
    int r;
    ProjectiveType vertex;
    Rational expected;
    Rational got;
};

struct RelationReport {
    std::size_t checked = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks (Phi_{x,r} f)(v) = lambda_r f(v) at every interior vertex.
RelationReport verify_hecke_relations(const FormTable& f, const EigenPair& pair);

nlohmann::ordered_json to_json(const RelationReport& report);

} // namespace pbun::eigen
