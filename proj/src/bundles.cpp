#include "pbun/bundles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "pbun/error.hpp"

namespace pbun {

SplittingType::SplittingType(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw Error("splitting type needs at least one component");
    std::sort(degrees_.begin(), degrees_.end());
}

long SplittingType::degree() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0L);
}

int SplittingType::max_abs_degree() const {
    return std::max(std::abs(degrees_.front()), std::abs(degrees_.back()));
}

SplittingType SplittingType::twisted(int k) const {
    auto d = degrees_;
    for (auto& x : d) x += k;
    return SplittingType(std::move(d));
}

SplittingType SplittingType::operator+(const SplittingType& other) const {
    auto d = degrees_;
    d.insert(d.end(), other.degrees_.begin(), other.degrees_.end());
    return SplittingType(std::move(d));
}

ProjectiveType::ProjectiveType(std::vector<int> gaps) : gaps_(std::move(gaps)) {
    for (int g : gaps_) {
        if (g < 0) throw Error("projective type gaps must be non-negative");
    }
    std::sort(gaps_.begin(), gaps_.end());
}

SplittingType ProjectiveType::as_splitting() const {
    std::vector<int> d{0};
    d.insert(d.end(), gaps_.begin(), gaps_.end());
    return SplittingType(std::move(d));
}

std::ostream& operator<<(std::ostream& os, const SplittingType& s) {
    os << '(';
    for (std::size_t i = 0; i < s.rank(); ++i) os << (i ? "," : "") << s.degrees()[i];
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const ProjectiveType& p) {
    os << "e(";
    for (std::size_t i = 0; i < p.gaps().size(); ++i) os << (i ? "," : "") << p.gaps()[i];
    return os << ')';
}

std::string label(const ProjectiveType& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

namespace bundles {

ProjectiveType canonical_projective(const SplittingType& s) {
    const int lo = s.min_degree();
    std::vector<int> gaps;
    gaps.reserve(s.rank() - 1);
    for (std::size_t i = 1; i < s.rank(); ++i) gaps.push_back(s.degrees()[i] - lo);
    return ProjectiveType(std::move(gaps));
}

std::vector<ProjectiveType> enumerate_pbun(std::size_t n, int bound) {
    if (n == 0) throw Error("rank must be positive");
    if (bound < 0) throw Error("degree bound must be non-negative");
    std::vector<ProjectiveType> out;
    std::vector<int> gaps(n - 1, 0);
    // Non-decreasing sequences in [0, bound], lexicographic odometer.
    while (true) {
        out.emplace_back(gaps);
        std::size_t i = gaps.size();
        while (i > 0 && gaps[i - 1] == bound) --i;
        if (i == 0) break;
        const int v = gaps[i - 1] + 1;
        for (std::size_t j = i - 1; j < gaps.size(); ++j) gaps[j] = v;
    }
    return out;
}

std::uint64_t pbun_count(std::size_t n, int bound) {
    // C(bound + n - 1, n - 1)
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i + 1 <= n; ++i) c = c * (static_cast<std::uint64_t>(bound) + i) / i;
    return c;
}

long h0(const SplittingType& s, int k) {
    long total = 0;
    for (int d : s.degrees()) total += std::max(0, d + k + 1);
    return total;
}

H0Profile h0_profile(const SplittingType& s, int k_min, int k_max) {
    H0Profile profile;
    for (int k = k_min; k <= k_max; ++k) profile[k] = h0(s, k);
    return profile;
}

std::pair<int, int> profile_window(int max_abs_degree) {
    return {-(max_abs_degree + 2), max_abs_degree + 2};
}

SplittingType splitting_from_h0_profile(const H0Profile& profile, std::size_t n) {
    if (profile.size() < 2 || n == 0) throw Error("profile inconsistent: too short");
    const int k_min = profile.begin()->first;
    const int k_max = profile.rbegin()->first;
    if (static_cast<std::size_t>(k_max - k_min + 1) != profile.size()) {
        throw Error("profile inconsistent: twist range is not contiguous");
    }
    if (profile.begin()->second != 0) throw Error("profile inconsistent: does not start at zero");

    // N(k) = h0(k) - h0(k-1) = #{i : d_i >= -k}.
    std::vector<int> degrees;
    long prev_h = 0;
    long prev_n = 0;
    for (int k = k_min + 1; k <= k_max; ++k) {
        const long h = profile.at(k);
        const long count = h - prev_h;
        if (count < prev_n || count > static_cast<long>(n)) {
            throw Error("profile inconsistent: first differences must be non-decreasing and at most the rank");
        }
        for (long j = prev_n; j < count; ++j) degrees.push_back(-k);
        prev_h = h;
        prev_n = count;
    }
    if (prev_n != static_cast<long>(n)) throw Error("profile inconsistent: not saturated at the top twist");
    return SplittingType(std::move(degrees));
}

ProjectiveType dualize(const ProjectiveType& p) {
    auto d = p.as_splitting().degrees();
    for (auto& x : d) x = -x;
    return canonical_projective(SplittingType(std::move(d)));
}

} // namespace bundles

void to_json(nlohmann::json& j, const SplittingType& s) { j = s.degrees(); }
void from_json(const nlohmann::json& j, SplittingType& s) { s = SplittingType(j.get<std::vector<int>>()); }
void to_json(nlohmann::json& j, const ProjectiveType& p) { j = p.gaps(); }
void from_json(const nlohmann::json& j, ProjectiveType& p) { p = ProjectiveType(j.get<std::vector<int>>()); }

} // namespace pbun
