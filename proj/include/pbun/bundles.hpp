#pragma once

// Splitting types of vector bundles on the projective line and their
// projective (twist-normalized) classes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace pbun {

/// O(d_1) + ... + O(d_n), degrees kept sorted ascending.
class SplittingType {
public:
    SplittingType() = default;
    /// Sorts the degrees. Throws on an empty list.
    explicit SplittingType(std::vector<int> degrees);

    const std::vector<int>& degrees() const { return degrees_; }
    std::size_t rank() const { return degrees_.size(); }
    long degree() const;
    int min_degree() const { return degrees_.front(); }
    int max_degree() const { return degrees_.back(); }
    /// max |d_i|
    int max_abs_degree() const;

    /// Componentwise shift by a twist k, i.e. E(k).
    SplittingType twisted(int k) const;
    /// Direct sum.
    SplittingType operator+(const SplittingType& other) const;

    auto operator<=>(const SplittingType&) const = default;

private:
    std::vector<int> degrees_;
};

/// A splitting type modulo twists, stored as the sorted non-negative gaps
/// (d_2 - d_1, ..., d_n - d_1). For rank 3 the gap vector (a, b) is the
/// class O + O(a) + O(b).
class ProjectiveType {
public:
    ProjectiveType() = default;
    /// Gaps must be non-negative; they are sorted.
    explicit ProjectiveType(std::vector<int> gaps);

    const std::vector<int>& gaps() const { return gaps_; }
    std::size_t rank() const { return gaps_.size() + 1; }
    /// Largest gap (0 for the trivial class).
    int spread() const { return gaps_.empty() ? 0 : gaps_.back(); }
    /// The representative with smallest degree 0.
    SplittingType as_splitting() const;

    auto operator<=>(const ProjectiveType&) const = default;

private:
    std::vector<int> gaps_;
};

std::ostream& operator<<(std::ostream& os, const SplittingType& s);
/// Prints "e(g1,g2,...)".
std::ostream& operator<<(std::ostream& os, const ProjectiveType& p);
std::string label(const ProjectiveType& p);

namespace bundles {

ProjectiveType canonical_projective(const SplittingType& s);

/// Every projective type of rank n with all gaps <= bound, lexicographic.
std::vector<ProjectiveType> enumerate_pbun(std::size_t n, int bound);

/// Number of projective types enumerate_pbun returns: C(bound+n-1, n-1).
std::uint64_t pbun_count(std::size_t n, int bound);

/// h^0 of E(k) for E with splitting type s.
long h0(const SplittingType& s, int k);

using H0Profile = std::map<int, long>;

/// h0 over the contiguous twist range [k_min, k_max].
H0Profile h0_profile(const SplittingType& s, int k_min, int k_max);

/// Twist window [-(M+2), M+2] that sees both the vanishing and the
/// saturated regime of every splitting type with |d_i| <= M.
std::pair<int, int> profile_window(int max_abs_degree);

/// Inverts h0_profile. The profile must start at 0 and end with first
/// difference n.
SplittingType splitting_from_h0_profile(const H0Profile& profile, std::size_t n);

ProjectiveType dualize(const ProjectiveType& p);

} // namespace bundles

void to_json(nlohmann::json& j, const SplittingType& s);
void from_json(const nlohmann::json& j, SplittingType& s);
void to_json(nlohmann::json& j, const ProjectiveType& p);
void from_json(const nlohmann::json& j, ProjectiveType& p);

} // namespace pbun
