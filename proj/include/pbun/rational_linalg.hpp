#pragma once

// Gauss-Jordan elimination over the rationals for the small dense systems
// that come out of eigenform and cusp computations.

#include <cstddef>
#include <optional>
#include <vector>

#include "pbun/numeric.hpp"

namespace pbun::qlinalg {

using Row = std::vector<Rational>;

struct Elimination {
    std::size_t rank = 0;
    bool consistent = true;
    /// One solution with free variables set to 0; empty if inconsistent.
    std::optional<std::vector<Rational>> particular;
};

/// Solves rows * x = rhs (rhs may be empty, meaning homogeneous).
Elimination eliminate(std::vector<Row> rows, std::vector<Rational> rhs, std::size_t unknowns);

std::size_t rank(std::vector<Row> rows, std::size_t unknowns);

inline std::size_t nullity(std::vector<Row> rows, std::size_t unknowns) {
    return unknowns - rank(std::move(rows), unknowns);
}

} // namespace pbun::qlinalg
