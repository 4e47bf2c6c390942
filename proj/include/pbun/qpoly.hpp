#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbun/numeric.hpp"

namespace pbun {

/// Integer polynomial in the field-size symbol q. Coefficient i belongs to
/// q^i; trailing zeros are always stripped, so the zero polynomial has no
/// coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::initializer_list<long> coeffs);
    explicit QPoly(std::vector<Integer> coeffs);

    static QPoly constant(long c);
    static QPoly monomial(long c, std::size_t exponent);
    /// The symbol q itself.
    static QPoly q() { return monomial(1, 1); }

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t i) const;

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Exact value at q = q0. Throws unless q0 is a prime power.
    Integer eval(std::int64_t q0) const;

    /// Renders as e.g. "q^2+q+1"; the zero polynomial is "0".
    std::string to_string() const;

private:
    void strip();
    std::vector<Integer> coeffs_;
};

namespace qpoly {

QPoly add(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
Integer eval(const QPoly& a, std::int64_t q0);

/// [n choose r]_q, the number of r-dimensional subspaces of F_q^n.
QPoly gaussian_binomial(int n, int r);

} // namespace qpoly

void to_json(nlohmann::json& j, const QPoly& p);
void from_json(const nlohmann::json& j, QPoly& p);

} // namespace pbun
