#include <doctest.h>

#include <algorithm>
#include <set>

#include "pbun/bundles.hpp"
#include "pbun/error.hpp"
#include "support.hpp"

using namespace pbun;
using testing::P;
using testing::S;

TEST_CASE("canonical_projective shifts by the minimum and sorts") {
    CHECK(bundles::canonical_projective(S({3, 1, 2})) == P(1, 2));
    CHECK(bundles::canonical_projective(S({5, 5, 5})) == P(0, 0));
    CHECK(bundles::canonical_projective(S({-2, 0, 1})) == P(2, 3));
}

TEST_CASE("canonical_projective is idempotent and shift invariant") {
    for (const auto& p : bundles::enumerate_pbun(3, 6)) {
        CHECK(bundles::canonical_projective(p.as_splitting()) == p);
        for (int k = -4; k <= 4; ++k) CHECK(bundles::canonical_projective(p.as_splitting().twisted(k)) == p);
    }
}

TEST_CASE("splitting types are sorted and nonempty") {
    CHECK(S({3, -1, 2}).degrees() == std::vector<int>{-1, 2, 3});
    CHECK(S({3, -1, 2}).degree() == 4);
    CHECK_THROWS_AS(SplittingType(std::vector<int>{}), Error);
    CHECK_THROWS_AS(ProjectiveType(std::vector<int>{-1, 2}), Error);
}

TEST_CASE("enumerate_pbun small listings") {
    CHECK(bundles::enumerate_pbun(3, 1) == std::vector<ProjectiveType>{P(0, 0), P(0, 1), P(1, 1)});
    CHECK(bundles::enumerate_pbun(3, 2) ==
          std::vector<ProjectiveType>{P(0, 0), P(0, 1), P(0, 2), P(1, 1), P(1, 2), P(2, 2)});
    std::vector<ProjectiveType> rank2;
    for (int g = 0; g <= 3; ++g) rank2.emplace_back(std::vector<int>{g});
    CHECK(bundles::enumerate_pbun(2, 3) == rank2);
}

TEST_CASE("enumerate_pbun size matches the binomial count, sorted and distinct") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int bound = 0; bound <= 8; ++bound) {
            const auto types = bundles::enumerate_pbun(n, bound);
            CHECK(types.size() == bundles::pbun_count(n, bound));
            CHECK(std::is_sorted(types.begin(), types.end()));
            CHECK(std::set<ProjectiveType>(types.begin(), types.end()).size() == types.size());
            for (const auto& p : types) CHECK(p.spread() <= bound);
        }
    }
    CHECK(bundles::pbun_count(3, 5) == 21);
}

TEST_CASE("h0 examples") {
    CHECK(bundles::h0(S({-1}), 0) == 0);
    CHECK(bundles::h0(S({0, 2}), 0) == 4);
    CHECK(bundles::h0(S({0, 1, 1}), -1) == 2);
}

TEST_CASE("h0 profile inversion") {
    CHECK(bundles::splitting_from_h0_profile(bundles::h0_profile(S({0, 2}), -3, 1), 2) == S({0, 2}));

    // first differences 0,2,2,3,3 jumping at k = -2 and k = 0
    const bundles::H0Profile jumps{{-3, 0}, {-2, 2}, {-1, 4}, {0, 7}, {1, 10}};
    CHECK(bundles::splitting_from_h0_profile(jumps, 3) == S({0, 2, 2}));

    for (int c = -3; c <= 3; ++c) {
        bundles::H0Profile flat;
        for (int k = -c - 2; k <= -c + 3; ++k) flat[k] = 3L * std::max(0, c + k + 1);
        CHECK(bundles::splitting_from_h0_profile(flat, 3) == S({c, c, c}));
    }
}

TEST_CASE("h0 profile round trip over all small splitting types") {
    for (int a = -3; a <= 3; ++a) {
        for (int b = a; b <= 3; ++b) {
            for (int c = b; c <= 3; ++c) {
                const auto s = S({a, b, c});
                const auto [lo, hi] = bundles::profile_window(3);
                CHECK(bundles::splitting_from_h0_profile(bundles::h0_profile(s, lo, hi), 3) == s);
            }
            const auto s2 = S({a, b});
            CHECK(bundles::splitting_from_h0_profile(bundles::h0_profile(s2, -5, 5), 2) == s2);
        }
    }
}

TEST_CASE("inconsistent profiles are rejected") {
    CHECK_THROWS_WITH_AS(bundles::splitting_from_h0_profile({{0, 1}, {1, 0}}, 1),
                         doctest::Contains("profile inconsistent"), Error);
    // never saturates at rank 3
    CHECK_THROWS_WITH_AS(bundles::splitting_from_h0_profile({{-1, 0}, {0, 1}, {1, 2}}, 3),
                         doctest::Contains("profile inconsistent"), Error);
}

TEST_CASE("dualize examples and involution") {
    CHECK(bundles::dualize(P(2, 2)) == P(0, 2));
    CHECK(bundles::dualize(P(0, 2)) == P(2, 2));
    CHECK(bundles::dualize(P(1, 3)) == P(2, 3));
    for (const auto& p : bundles::enumerate_pbun(3, 8)) CHECK(bundles::dualize(bundles::dualize(p)) == p);
}

TEST_CASE("labels and json") {
    CHECK(label(P(1, 2)) == "e(1,2)");
    nlohmann::json j = P(1, 2);
    CHECK(j.dump() == "[1,2]");
    CHECK(j.get<ProjectiveType>() == P(1, 2));
    nlohmann::json js = S({-1, 4});
    CHECK(js.get<SplittingType>() == S({-1, 4}));
}
