#include "pbun/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "pbun/error.hpp"

namespace pbun {

QPoly::QPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    strip();
}

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

QPoly QPoly::constant(long c) { return QPoly{c}; }

QPoly QPoly::monomial(long c, std::size_t exponent) {
    std::vector<Integer> v(exponent + 1, Integer(0));
    v[exponent] = c;
    return QPoly(std::move(v));
}

Integer QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

void QPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    strip();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    strip();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(out));
}

Integer QPoly::eval(std::int64_t q0) const {
    if (!is_prime_power(q0)) throw Error("not a prime power: " + std::to_string(q0));
    Integer acc(0);
    const Integer q(static_cast<long>(q0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        const Integer mag = abs(c);
        if (c < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k >= 1) os << 'q';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

namespace qpoly {

QPoly add(const QPoly& a, const QPoly& b) { return a + b; }
QPoly mul(const QPoly& a, const QPoly& b) { return a * b; }
Integer eval(const QPoly& a, std::int64_t q0) { return a.eval(q0); }

QPoly gaussian_binomial(int n, int r) {
    if (n < 0 || r < 0 || r > n) throw Error("gaussian binomial needs 0 <= r <= n");
    // Pascal recursion [n r] = [n-1 r-1] + q^r [n-1 r].
    std::vector<std::vector<QPoly>> table(n + 1, std::vector<QPoly>(n + 1));
    for (int m = 0; m <= n; ++m) {
        table[m][0] = QPoly::constant(1);
        table[m][m] = QPoly::constant(1);
        for (int k = 1; k < m; ++k) {
            table[m][k] = table[m - 1][k - 1] + QPoly::monomial(1, k) * table[m - 1][k];
        }
    }
    return table[n][r];
}

} // namespace qpoly

void to_json(nlohmann::json& j, const QPoly& p) {
    j = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        if (c.fits_slong_p()) {
            j.push_back(c.get_si());
        } else {
            j.push_back(c.get_str());
        }
    }
}

void from_json(const nlohmann::json& j, QPoly& p) {
    std::vector<Integer> coeffs;
    for (const auto& c : j) {
        coeffs.push_back(c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long>()));
    }
    p = QPoly(std::move(coeffs));
}

} // namespace pbun
