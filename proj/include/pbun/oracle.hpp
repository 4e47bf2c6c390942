#pragma once

// Brute-force neighbor multiplicities: enumerate the subspaces W of the
// fiber at the rational point t = 0, form the elementary modification
// E'' = {s : s(0) in W}, and read off its splitting type from h^0 counts.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbun/bundles.hpp"
#include "pbun/linalg_fq.hpp"

namespace pbun::oracle {

/// h^0(E''(k)) for E'' = {s in E : s(0) in W}, computed as the dimension
/// of the space of coefficient vectors of sections of E(k) obeying the
/// fiber constraint.
long kernel_h0(const SplittingType& s, const fq::Subspace& W, int k);

/// Splitting type of the kernel of E -> K_x^{r}, where the map is the
/// quotient of the fiber at 0 by W. Throws "dimension mismatch" unless
/// dim W = rank(s) - r.
SplittingType kernel_splitting(const SplittingType& s, const fq::Subspace& W, int r);

struct NeighborCount {
    ProjectiveType src;
    std::map<ProjectiveType, std::uint64_t> counts;
    std::uint32_t q0 = 2;
    int r = 1;

    std::uint64_t total() const;
};

/// Counts subspaces W of codimension r in the fiber by the projective
/// class of the resulting kernel. q0 must be prime.
NeighborCount neighbor_oracle(const ProjectiveType& p, int r, std::uint32_t q0);

struct Mismatch {
    ProjectiveType vertex;
    int r = 1;
    std::uint32_t q0 = 2;
    std::map<ProjectiveType, std::uint64_t> expected;
    std::map<ProjectiveType, std::uint64_t> got;
};

struct VerifyReport {
    std::size_t checked = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Runs the oracle for every vertex of enumerate_pbun(3, bound), r in
/// {1, 2} and every prime, and compares with the evaluated closed-form
/// neighbor tables.
VerifyReport verify_rules(int bound, const std::vector<std::uint32_t>& primes, unsigned jobs = 1);

/// {checked, mismatches:[{vertex, r, q0, expected, got}]}; the count maps
/// are arrays of {type, count} in vertex order.
nlohmann::ordered_json to_json(const VerifyReport& report);

} // namespace pbun::oracle
