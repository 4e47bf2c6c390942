#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pbun/bundles.hpp"
#include "pbun/form_table.hpp"

namespace testing {

inline pbun::ProjectiveType P(int a, int b) { return pbun::ProjectiveType({a, b}); }
inline pbun::SplittingType S(std::vector<int> d) { return pbun::SplittingType(std::move(d)); }

inline pbun::Rational random_rational(std::mt19937_64& rng, long range = 30, long max_den = 12) {
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, max_den);
    pbun::Rational x(num(rng), den(rng));
    x.canonicalize();
    return x;
}

inline pbun::FormTable random_table(std::mt19937_64& rng, int bound, std::int64_t q0) {
    pbun::FormTable t;
    t.bound = bound;
    t.q0 = q0;
    for (const auto& v : pbun::bundles::enumerate_pbun(3, bound)) t.values[v] = random_rational(rng);
    return t;
}

} // namespace testing
