#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include <nlohmann/json.hpp>

#include "pbun/bundles.hpp"
#include "pbun/numeric.hpp"

namespace pbun {

/// Eigenvalues of the two rank-3 Hecke operators at the fixed place.
struct EigenPair {
    Rational lambda1;
    Rational lambda2;

    bool operator==(const EigenPair&) const = default;
};

/// Exact values of an unramified form on the truncated vertex set
/// enumerate_pbun(3, bound).
struct FormTable {
    int bound = 0;
    std::int64_t q0 = 2;
    std::optional<EigenPair> lambda;
    std::map<ProjectiveType, Rational> values;

    /// Throws "missing value" when p is absent.
    const Rational& at(const ProjectiveType& p) const;
    bool contains(const ProjectiveType& p) const { return values.count(p) != 0; }

    bool operator==(const FormTable&) const = default;
};

/// Zero everywhere on enumerate_pbun(3, bound).
FormTable zero_table(int bound, std::int64_t q0);

/// {q0, bound, lambda:[l1,l2], values:[{type:[g1,g2], value:"p/q"}]}.
/// Values follow the lexicographic vertex order.
nlohmann::ordered_json to_json(const FormTable& table);
FormTable form_table_from_json(const nlohmann::json& j);

} // namespace pbun
