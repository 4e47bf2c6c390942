#include <doctest.h>

#include <random>

#include "pbun/eigenform.hpp"
#include "pbun/error.hpp"
#include "pbun/extensions.hpp"
#include "support.hpp"

using namespace pbun;
using namespace pbun::ext;
using testing::P;
using testing::S;

namespace {

ExtClass from_coords(const SplittingType& f, const SplittingType& g, std::uint32_t q0, std::vector<fq::Residue> c) {
    return class_from_coordinates(f, g, q0, c);
}

// 0 -> O -> O(1)^2 -> O(2) -> 0
TransitionBundle euler_bundle(std::uint32_t q0) { return extension_bundle(from_coords(S({2}), S({0}), q0, {1}), q0); }

} // namespace

TEST_CASE("laurent polynomials") {
    const auto a = LaurentPoly::monomial(3, -1, 2) + LaurentPoly::monomial(3, 2);
    CHECK(a.min_exponent() == -1);
    CHECK(a.max_exponent() == 2);
    CHECK((a - a).is_zero());
    CHECK((LaurentPoly::monomial(3, -1, 2) * LaurentPoly::monomial(3, 1, 2)) == LaurentPoly::monomial(3, 0, 1));
    CHECK_FALSE(a.is_unit());
    CHECK_THROWS_AS(LaurentPoly(3) + LaurentPoly(5), Error);
}

TEST_CASE("ext dimension") {
    CHECK(ext_dim(S({2}), S({0})) == 1);
    CHECK(ext_dim(S({0}), S({1, 2})) == 0);
    CHECK(ext_dim(S({0, 0}), S({0})) == 0);
    for (const auto& p : bundles::enumerate_pbun(3, 6)) {
        const auto [f, g] = cusp_vanishing_certificate(p);
        CHECK(ext_dim(f, g) == 0);
    }
}

TEST_CASE("ext dimension counts cocycle positions") {
    for (int k1 = 0; k1 <= 6; ++k1) {
        for (int k2 = k1; k2 <= 6; ++k2) {
            for (int l1 = 0; l1 <= 6; ++l1) {
                for (int l2 = l1; l2 <= 6; ++l2) {
                    const auto f = S({k1, k2}), g = S({l1, l2});
                    CHECK(static_cast<long>(cocycle_positions(f, g).size()) == ext_dim(f, g));
                    CHECK(static_cast<long>(cocycle_positions(S({k1}), g).size()) == ext_dim(S({k1}), g));
                }
            }
        }
    }
}

TEST_CASE("h0 of transition bundles") {
    CHECK(bundle_h0(TransitionBundle::diagonal(2, S({0, 0, 0})), 0) == 3);
    CHECK(bundle_h0(TransitionBundle::diagonal(2, S({2})), 0) == 3);
    CHECK(bundle_h0(euler_bundle(2), -1) == 2);
    CHECK(bundle_h0(euler_bundle(3), -2) == 0);
    CHECK(splitting_type(euler_bundle(3), 2) == S({1, 1}));
}

TEST_CASE("h0 of diagonal bundles matches the closed form") {
    for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
            for (int c = -3; c <= 3; ++c) {
                const auto s = S({a, b, c});
                const auto bundle = TransitionBundle::diagonal(2, s);
                for (int k = -5; k <= 5; ++k) CHECK(bundle_h0(bundle, k) == bundles::h0(s, k));
                CHECK(splitting_type(bundle, 3) == s);
            }
        }
    }
}

TEST_CASE("non-invertible transition matrices are rejected") {
    LaurentMatrix m(2, std::vector<LaurentPoly>(2, LaurentPoly(2)));
    m[0][0] = LaurentPoly::monomial(2, 0) + LaurentPoly::monomial(2, 1);
    m[1][1] = LaurentPoly::monomial(2, 0);
    CHECK_THROWS_WITH_AS(TransitionBundle(2, m), doctest::Contains("transition matrix not invertible"), Error);
}

TEST_CASE("middle terms of O(2) by O") {
    for (std::uint32_t q0 : {2u, 3u, 5u}) {
        CHECK(middle_term(split_class(S({2}), S({0}), q0), q0) == ProjectiveType({2}));
        for (fq::Residue c = 1; c < q0; ++c) CHECK(middle_term(from_coords(S({2}), S({0}), q0, {c}), q0) == ProjectiveType({0}));
    }
    CHECK(middle_term(split_class(S({1}), S({0}), 2), 2) == ProjectiveType({1}));
    CHECK(enumerate_classes(S({1}), S({0}), 2).size() == 1);
}

TEST_CASE("illegal cocycle support") {
    auto c = split_class(S({2}), S({0}), 2);
    c.cocycle[0][0] = LaurentPoly::monomial(2, -2);
    CHECK_THROWS_WITH_AS(middle_term(c, 2), doctest::Contains("illegal cocycle support"), Error);
    c.cocycle[0][0] = LaurentPoly::monomial(2, 0);
    CHECK_THROWS_WITH_AS(middle_term(c, 2), doctest::Contains("illegal cocycle support"), Error);
}

TEST_CASE("split classes give the direct sum") {
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
            for (int c = b; c <= 4; ++c) {
                const auto f = S({a}), g = S({b, c});
                CHECK(middle_term(split_class(f, g, 2), 2) == bundles::canonical_projective(f + g));
                CHECK(middle_term(split_class(g, f, 3), 3) == bundles::canonical_projective(f + g));
            }
        }
    }
}

TEST_CASE("middle terms conserve degree") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> deg(-2, 4);
    int checked = 0;
    while (checked < 200) {
        for (std::uint32_t q0 : {2u, 3u}) {
            const auto f = S({deg(rng), deg(rng)});
            const auto g = S({deg(rng)});
            const auto positions = cocycle_positions(f, g);
            std::uniform_int_distribution<fq::Residue> coord(0, q0 - 1);
            std::vector<fq::Residue> c(positions.size());
            for (auto& x : c) x = coord(rng);
            const auto bundle = extension_bundle(from_coords(f, g, q0, c), q0);
            const int bound = std::max(f.max_abs_degree(), g.max_abs_degree());
            const auto e = splitting_type(bundle, bound);
            CHECK(e.degree() == f.degree() + g.degree());
            CHECK(bundle.degree() == f.degree() + g.degree());
            ++checked;
        }
    }
}

TEST_CASE("extension counts of O(3) by O+O over F_2") {
    std::map<ProjectiveType, int> hist;
    for (const auto& c : enumerate_classes(S({3}), S({0, 0}), 2)) ++hist[middle_term(c, 2)];
    // split once; (1,1,1) and (0,1,2) share the other 15
    CHECK(hist == std::map<ProjectiveType, int>{{P(0, 3), 1}, {P(0, 0), 6}, {P(1, 2), 9}});
}

TEST_CASE("cuspidal sums") {
    FormTable ones = zero_table(3, 2);
    for (auto& [v, x] : ones.values) x = 1;
    CHECK(cuspidal_sum(ones, S({2}), S({0, 0}), 2) == 4);

    for (std::uint32_t q0 : {2u, 3u}) {
        FormTable rank2;
        rank2.bound = 2;
        rank2.q0 = q0;
        for (const auto& v : bundles::enumerate_pbun(2, 2)) rank2.values[v] = 1;
        CHECK(cuspidal_sum(rank2, S({2}), S({0}), q0) == q0);
    }
    CHECK(cuspidal_sum(zero_table(3, 2), S({2}), S({0, 0}), 2) == 0);
    CHECK_THROWS_WITH_AS(cuspidal_sum(zero_table(1, 2), S({3}), S({0, 0}), 2), doctest::Contains("truncation too small"),
                         Error);
}

TEST_CASE("eigenforms have nonzero cuspidal sums") {
    const EigenPair pair{Rational(1), Rational(2)};
    const auto f = eigen::solve_eigenform(pair, 2, 4, Rational(1));
    bool nonzero = false;
    for (const auto& p : bundles::enumerate_pbun(3, 3)) {
        const auto [quotient, sub] = cusp_vanishing_certificate(p);
        nonzero = nonzero || sgn(cuspidal_sum(f, quotient, sub, 2)) != 0;
    }
    CHECK(nonzero);
    CHECK(cuspidal_sum(f, S({2}), S({0, 0}), 2) != 0);
}

TEST_CASE("cusp certificates") {
    CHECK(cusp_vanishing_certificate(P(1, 2)) == std::pair{S({0}), S({1, 2})});
    CHECK(cusp_vanishing_certificate(P(0, 0)) == std::pair{S({0}), S({0, 0})});
    CHECK(cusp_vanishing_certificate(P(0, 4)) == std::pair{S({0}), S({0, 4})});
}

TEST_CASE("no cusp forms in small truncations") {
    CHECK(cusp_space_dimension(3, 2) == 0);
    CHECK(cusp_space_dimension(1, 3) == 0);
    CHECK(cusp_space_dimension(4, 2, 2) == 0);
    CHECK_THROWS_AS(cusp_space_dimension(0, 2), Error);
}
