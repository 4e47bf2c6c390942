#pragma once

// Toroidal functional for the torus of the constant cubic extension
// F_{q^3} F / F. The positive volume constant in front of the coset sum is
// not modelled; only vanishing of the sum is decided.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbun/form_table.hpp"

namespace pbun::toroidal {

constexpr int kExtensionDegree = 3;

/// Projective class of p_* O(m) for p : P^1 over F_{q^3} -> P^1 over F_q,
/// from h^0(p_* O(m) (k)) = 3 max(0, m + k + 1).
ProjectiveType pushforward_line(int m);

/// Degree of p^* O(x) for a closed point x of the given degree: the fiber
/// splits into gcd(deg, 3) points of degree deg / gcd(deg, 3) upstairs.
int pullback_degree(int point_degree);

/// # Pic(upstairs) / p^* Pic(P^1), both identified with Z by degree.
std::size_t picard_coset_count();

/// Degrees of the chosen coset representatives upstairs.
std::vector<int> coset_representatives();

struct ToroidalReport {
    std::size_t coset_count = 0;
    std::vector<int> representatives;
    std::vector<ProjectiveType> images;
    Rational sum;

    bool toroidal() const { return sgn(sum) == 0; }
};

/// Sum of f over the pushforwards of the coset representatives.
ToroidalReport toroidal_sum(const FormTable& f);

struct IntersectionVerdict {
    Rational eigenform_sum;
    std::size_t augmented_nullity = 0;
    bool trivial_intersection = false;
};

/// Solves the eigenform with f(e0) = 1, takes its toroidal sum, and
/// computes the nullity of the eigen-relations augmented by "sum = 0".
IntersectionVerdict toroidal_eigen_intersection(const EigenPair& pair, std::int64_t q0, int bound);

nlohmann::ordered_json to_json(const ToroidalReport& report);
nlohmann::ordered_json to_json(const IntersectionVerdict& verdict);

} // namespace pbun::toroidal
