#include "pbun/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "parallel.hpp"
#include "pbun/error.hpp"
#include "pbun/hecke.hpp"

namespace pbun::oracle {

long kernel_h0(const SplittingType& s, const fq::Subspace& W, int k) {
    if (W.ambient() != s.rank()) throw Error("dimension mismatch: subspace ambient differs from the rank");
    const std::uint32_t p = W.modulus();

    // Unknowns: the coefficients of each component s_i, a polynomial of
    // degree <= d_i + k. The value at t = 0 is the constant coefficient.
    std::vector<std::size_t> offset(s.rank());
    std::size_t unknowns = 0;
    for (std::size_t i = 0; i < s.rank(); ++i) {
        offset[i] = unknowns;
        unknowns += static_cast<std::size_t>(std::max(0, s.degrees()[i] + k + 1));
    }
    if (unknowns == 0) return 0;

    const fq::Subspace ann = W.annihilator();
    fq::Matrix constraints(p, 0, unknowns);
    for (std::size_t a = 0; a < ann.dim(); ++a) {
        fq::Vector row(unknowns, 0);
        for (std::size_t i = 0; i < s.rank(); ++i) {
            if (s.degrees()[i] + k + 1 > 0) row[offset[i]] = ann.basis()(a, i);
        }
        constraints.append_row(row);
    }
    return static_cast<long>(unknowns - fq::rank(constraints));
}

SplittingType kernel_splitting(const SplittingType& s, const fq::Subspace& W, int r) {
    if (W.ambient() != s.rank() || static_cast<long>(W.dim()) != static_cast<long>(s.rank()) - r) {
        throw Error("dimension mismatch: need dim W = n - r");
    }
    // Kernel degrees lie in [min d - 1, max d].
    const auto [k_min, k_max] = bundles::profile_window(s.max_abs_degree() + 1);
    bundles::H0Profile profile;
    for (int k = k_min; k <= k_max; ++k) profile[k] = kernel_h0(s, W, k);
    auto result = bundles::splitting_from_h0_profile(profile, s.rank());
    if (result.degree() != s.degree() - r) throw Error("kernel degree bookkeeping failed");
    return result;
}

std::uint64_t NeighborCount::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0},
                           [](std::uint64_t acc, const auto& kv) { return acc + kv.second; });
}

NeighborCount neighbor_oracle(const ProjectiveType& p, int r, std::uint32_t q0) {
    const std::size_t n = p.rank();
    if (r < 1 || r > static_cast<int>(n)) throw Error("operator index out of range");
    if (n > 4) throw Error("instance too large");
    NeighborCount out{p, {}, q0, r};
    const SplittingType s = p.as_splitting();
    for (const auto& W : fq::enumerate_subspaces(q0, n, n - static_cast<std::size_t>(r))) {
        ++out.counts[bundles::canonical_projective(kernel_splitting(s, W, r))];
    }
    return out;
}

VerifyReport verify_rules(int bound, const std::vector<std::uint32_t>& primes, unsigned jobs) {
    struct Task {
        ProjectiveType vertex;
        int r;
        std::uint32_t q0;
    };
    std::vector<Task> tasks;
    for (const auto& v : bundles::enumerate_pbun(3, bound)) {
        for (int r : {1, 2}) {
            for (auto q0 : primes) tasks.push_back({v, r, q0});
        }
    }
    auto results = detail::parallel_map(tasks.size(), jobs, [&](std::size_t i) -> std::optional<Mismatch> {
        const auto& t = tasks[i];
        std::map<ProjectiveType, std::uint64_t> expected;
        for (const auto& [dst, w] : hecke::phi_neighbors(t.r, t.vertex)) {
            expected[dst] += w.eval(t.q0).get_ui();
        }
        auto got = neighbor_oracle(t.vertex, t.r, t.q0).counts;
        if (got == expected) return std::nullopt;
        return Mismatch{t.vertex, t.r, t.q0, std::move(expected), std::move(got)};
    });

    VerifyReport report;
    report.checked = tasks.size();
    for (auto& m : results) {
        if (m) report.mismatches.push_back(std::move(*m));
    }
    return report;
}

namespace {

nlohmann::ordered_json counts_json(const std::map<ProjectiveType, std::uint64_t>& counts) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [type, count] : counts) {
        nlohmann::ordered_json e;
        e["type"] = type.gaps();
        e["count"] = count;
        arr.push_back(std::move(e));
    }
    return arr;
}

} // namespace

nlohmann::ordered_json to_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["checked"] = report.checked;
    auto mismatches = nlohmann::ordered_json::array();
    for (const auto& m : report.mismatches) {
        nlohmann::ordered_json e;
        e["vertex"] = m.vertex.gaps();
        e["r"] = m.r;
        e["q0"] = m.q0;
        e["expected"] = counts_json(m.expected);
        e["got"] = counts_json(m.got);
        mismatches.push_back(std::move(e));
    }
    j["mismatches"] = std::move(mismatches);
    return j;
}

} // namespace pbun::oracle
