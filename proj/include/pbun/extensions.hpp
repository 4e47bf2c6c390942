#pragma once

// Extensions 0 -> G -> E -> F -> 0 of split bundles on the projective line,
// realized by Cech cocycles in upper block-triangular transition matrices.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pbun/bundles.hpp"
#include "pbun/form_table.hpp"
#include "pbun/linalg_fq.hpp"

namespace pbun::ext {

/// Laurent polynomial in t over F_p, exponent -> nonzero residue.
class LaurentPoly {
public:
    LaurentPoly() = default;
    /// The zero polynomial over F_p.
    explicit LaurentPoly(std::uint32_t p) : p_(p) {}
    static LaurentPoly monomial(std::uint32_t p, int exponent, std::int64_t coeff = 1);

    std::uint32_t modulus() const { return p_; }
    const std::map<int, fq::Residue>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Nonzero multiple of a single power of t.
    bool is_unit() const { return terms_.size() == 1; }
    int min_exponent() const;
    int max_exponent() const;

    void add_term(int exponent, std::int64_t coeff);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly&) const = default;

private:
    std::uint32_t p_ = 2;
    std::map<int, fq::Residue> terms_;
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// A bundle glued from the trivial bundles on the two standard charts.
/// A global section of E(k) is a pair of polynomial vectors
/// (s0(t), sinf(u)) with s0(t) = t^k T(t) sinf(1/t); O(d) has T = t^d.
class TransitionBundle {
public:
    /// Throws "transition matrix not invertible" unless det T is a unit of
    /// F_p[t, 1/t].
    TransitionBundle(std::uint32_t q0, LaurentMatrix matrix);
    static TransitionBundle diagonal(std::uint32_t q0, const SplittingType& s);

    std::uint32_t modulus() const { return q0_; }
    std::size_t rank() const { return matrix_.size(); }
    const LaurentMatrix& matrix() const { return matrix_; }
    /// Degree of the bundle, the exponent of det T.
    int degree() const { return degree_; }
    /// max |exponent| over all entries.
    int max_abs_exponent() const;

private:
    std::uint32_t q0_;
    LaurentMatrix matrix_;
    int degree_ = 0;
};

LaurentPoly determinant(const LaurentMatrix& m, std::uint32_t p);

/// h^0(E(k)). Unknown section components are polynomials of degree at most
/// `cap`; the default is one more than the a priori degree bound read off
/// T^{-1}. Throws "truncation overflow" when a solution reaches the cap.
long bundle_h0(const TransitionBundle& b, int k, std::optional<int> cap = std::nullopt);

/// Splitting type of b, read from h^0 over the window for splitting
/// degrees bounded by max_abs_degree in absolute value.
SplittingType splitting_type(const TransitionBundle& b, int max_abs_degree);

/// dim Ext^1(F, G) = h^0 of the sum of O(k_i - l_j - 2), via Serre duality.
long ext_dim(const SplittingType& quotient, const SplittingType& sub);

/// One Cech basis monomial t^e of H^1(O(l_j - k_i)), placed in row j
/// (sub component) and column i (quotient component).
struct CocyclePosition {
    std::size_t row;
    std::size_t col;
    int exponent;

    bool operator==(const CocyclePosition&) const = default;
};

/// Legal cocycle monomials l_j - k_i + 1 <= e <= -1, ordered by
/// (row, col, exponent).
std::vector<CocyclePosition> cocycle_positions(const SplittingType& quotient, const SplittingType& sub);

/// An extension class of F (quotient, components k_i) by G (sub,
/// components l_j). cocycle[j][i] is a Laurent polynomial over F_q0.
struct ExtClass {
    SplittingType quotient;
    SplittingType sub;
    LaurentMatrix cocycle;
};

/// The zero cocycle (split extension).
ExtClass split_class(const SplittingType& quotient, const SplittingType& sub, std::uint32_t q0);

/// Class with the given coordinates on cocycle_positions().
ExtClass class_from_coordinates(const SplittingType& quotient, const SplittingType& sub,
                                std::uint32_t q0, std::span<const fq::Residue> coords);

/// Every class, i.e. all q0^ext_dim coordinate vectors in odometer order.
/// Throws "instance too large" beyond 10^6 classes.
std::vector<ExtClass> enumerate_classes(const SplittingType& quotient, const SplittingType& sub,
                                        std::uint32_t q0);

/// The middle term E as a bundle: block transition matrix
/// [[diag t^l, B t^k], [0, diag t^k]]. Throws "illegal cocycle support" for
/// monomials outside the Cech window.
TransitionBundle extension_bundle(const ExtClass& c, std::uint32_t q0);

/// Projective class of the middle term of the extension.
ProjectiveType middle_term(const ExtClass& c, std::uint32_t q0);

/// Sum of f over the middle terms of every class in Ext^1(F, G). Throws
/// "truncation too small" when a middle term is outside f's domain.
Rational cuspidal_sum(const FormTable& f, const SplittingType& quotient, const SplittingType& sub,
                      std::uint32_t q0);

/// (F, G) = (lowest component, the rest) for the representative of p with
/// smallest degree 0. Ext^1(F, G) = 0, so the cuspidal sum for this pair
/// is the single value f(p).
std::pair<SplittingType, SplittingType> cusp_vanishing_certificate(const ProjectiveType& p);

/// Dimension of the space of tables on enumerate_pbun(3, bound) whose
/// cuspidal sums vanish, for the certificate pairs of every vertex plus
/// every other component split with at most 4096 classes whose middle terms
/// all stay in the truncation.
std::size_t cusp_space_dimension(int bound, std::uint32_t q0, unsigned jobs = 1);

} // namespace pbun::ext
