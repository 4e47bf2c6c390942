#include "pbun/numeric.hpp"

#include <regex>

#include "pbun/error.hpp"

namespace pbun {

Rational parse_rational(std::string_view text) {
    static const std::regex pattern(R"(\s*([+-]?[0-9]+)(/([0-9]+))?\s*)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) {
        throw Error("not an exact rational: '" + s + "'");
    }
    Integer num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
    Integer den(1);
    if (m[3].matched) {
        den = Integer(m[3].str());
        if (den == 0) throw Error("zero denominator: '" + s + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {
constexpr std::int64_t kTrialLimit = 1'000'000;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (d > kTrialLimit) return false;
        if (p % d == 0) return false;
    }
    return true;
}

bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    std::int64_t smallest = q;
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (d > kTrialLimit) return false;
        if (q % d == 0) {
            smallest = d;
            break;
        }
    }
    while (q % smallest == 0) q /= smallest;
    return q == 1;
}

} // namespace pbun
