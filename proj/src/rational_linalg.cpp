#include "pbun/rational_linalg.hpp"

#include "pbun/error.hpp"

namespace pbun::qlinalg {

Elimination eliminate(std::vector<Row> rows, std::vector<Rational> rhs, std::size_t unknowns) {
    const bool homogeneous = rhs.empty();
    if (!homogeneous && rhs.size() != rows.size()) throw Error("right-hand side length does not match the row count");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != unknowns) throw Error("row length does not match the unknown count");
        rows[i].push_back(homogeneous ? Rational(0) : rhs[i]);
    }

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j <= unknowns; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }

    Elimination out;
    out.rank = pivots.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][unknowns]) != 0) out.consistent = false;
    }
    if (out.consistent) {
        std::vector<Rational> x(unknowns, Rational(0));
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][unknowns];
        out.particular = std::move(x);
    }
    return out;
}

std::size_t rank(std::vector<Row> rows, std::size_t unknowns) {
    return eliminate(std::move(rows), {}, unknowns).rank;
}

} // namespace pbun::qlinalg
