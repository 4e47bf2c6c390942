#include <doctest.h>

#include <random>

#include "pbun/error.hpp"
#include "pbun/linalg_fq.hpp"
#include "pbun/qpoly.hpp"

using namespace pbun;

TEST_CASE("qpoly arithmetic examples") {
    CHECK(QPoly{0, 1, 1} + QPoly{1} == QPoly{1, 1, 1});
    CHECK(QPoly{1, 1} * QPoly::q() == QPoly{0, 1, 1});
    CHECK(QPoly{3, 0, 2} + QPoly{} == QPoly{3, 0, 2});
    CHECK((QPoly{1, 1} - QPoly{1, 1}).is_zero());
    CHECK(QPoly{1, 2, 0, 0}.coeffs().size() == 2);
    CHECK(QPoly{1, 1, 1}.to_string() == "q^2+q+1");
    CHECK(QPoly{}.to_string() == "0");
}

TEST_CASE("qpoly evaluation") {
    CHECK(QPoly{1, 1, 1}.eval(2) == 7);
    CHECK(QPoly{1, 1, 1}.eval(3) == 13);
    CHECK(QPoly{0, 0, 1}.eval(5) == 25);
    CHECK(qpoly::eval(QPoly{1, 1, 1}, 4) == 21);
    CHECK_THROWS_WITH_AS(QPoly{1}.eval(6), doctest::Contains("not a prime power"), Error);
}

TEST_CASE("qpoly ring laws on random polynomials") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> len(0, 4);
    auto draw = [&] {
        std::vector<Integer> c(static_cast<std::size_t>(len(rng)));
        for (auto& x : c) x = coeff(rng);
        return QPoly(c);
    };
    for (int i = 0; i < 200; ++i) {
        const QPoly a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * QPoly{1} == a);
        CHECK(a + QPoly{} == a);
        CHECK((a * b).eval(3) == a.eval(3) * b.eval(3));
        if (!a.coeffs().empty()) CHECK(a.coeffs().back() != 0);
    }
}

TEST_CASE("gaussian binomials") {
    CHECK(qpoly::gaussian_binomial(3, 1) == QPoly{1, 1, 1});
    CHECK(qpoly::gaussian_binomial(3, 2) == QPoly{1, 1, 1});
    for (int n = 0; n <= 6; ++n) {
        CHECK(qpoly::gaussian_binomial(n, 0) == QPoly{1});
        for (int r = 0; r <= n; ++r) CHECK(qpoly::gaussian_binomial(n, r) == qpoly::gaussian_binomial(n, n - r));
    }
}

TEST_CASE("gaussian binomials count subspaces") {
    for (std::uint32_t p : {2u, 3u}) {
        for (std::size_t n = 0; n <= 4; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                const auto expected = qpoly::gaussian_binomial(static_cast<int>(n), static_cast<int>(k)).eval(p);
                CHECK(expected == fq::enumerate_subspaces(p, n, k).size());
            }
        }
    }
}

TEST_CASE("qpoly json is a coefficient array") {
    nlohmann::json j = QPoly{0, 1, 1};
    CHECK(j.dump() == "[0,1,1]");
    CHECK(j.get<QPoly>() == QPoly{0, 1, 1});
}
