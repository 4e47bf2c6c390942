#include "pbun/extensions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "pbun/error.hpp"
#include "pbun/rational_linalg.hpp"
#include "parallel.hpp"

namespace pbun::ext {

namespace {

fq::Residue reduce(std::int64_t v, std::uint32_t p) {
    const std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<fq::Residue>(m < 0 ? m + p : m);
}

void require_same_field(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.modulus() != b.modulus()) throw Error("Laurent polynomials over different fields");
}

} // namespace

LaurentPoly LaurentPoly::monomial(std::uint32_t p, int exponent, std::int64_t coeff) {
    LaurentPoly out(p);
    out.add_term(exponent, coeff);
    return out;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw Error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw Error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, std::int64_t coeff) {
    const fq::Residue c = reduce(coeff, p_);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second = (it->second + c) % p_;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_field(a, b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_field(a, b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, static_cast<std::int64_t>(a.p_) - c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_field(a, b);
    LaurentPoly out(a.p_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(ea + eb, static_cast<std::int64_t>(static_cast<std::uint64_t>(ca) * cb % a.p_));
        }
    }
    return out;
}

LaurentPoly determinant(const LaurentMatrix& m, std::uint32_t p) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly::monomial(p, 0, 1);
    if (n == 1) return m[0][0];
    // Laplace expansion along the first row; ranks here are tiny.
    LaurentPoly det(p);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        LaurentMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<LaurentPoly> row;
            for (std::size_t cc = 0; cc < n; ++cc) {
                if (cc != c) row.push_back(m[r][cc]);
            }
            minor.push_back(std::move(row));
        }
        const LaurentPoly term = m[0][c] * determinant(minor, p);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

TransitionBundle::TransitionBundle(std::uint32_t q0, LaurentMatrix matrix) : q0_(q0), matrix_(std::move(matrix)) {
    fq::require_prime(q0_);
    for (const auto& row : matrix_) {
        if (row.size() != matrix_.size()) throw Error("transition matrix must be square");
        for (const auto& entry : row) {
            if (entry.modulus() != q0_) throw Error("transition entry over the wrong field");
        }
    }
    const LaurentPoly det = determinant(matrix_, q0_);
    if (!det.is_unit()) throw Error("transition matrix not invertible");
    degree_ = det.min_exponent();
}

TransitionBundle TransitionBundle::diagonal(std::uint32_t q0, const SplittingType& s) {
    LaurentMatrix m(s.rank(), std::vector<LaurentPoly>(s.rank(), LaurentPoly(q0)));
    for (std::size_t i = 0; i < s.rank(); ++i) m[i][i] = LaurentPoly::monomial(q0, s.degrees()[i]);
    return TransitionBundle(q0, std::move(m));
}

int TransitionBundle::max_abs_exponent() const {
    int best = 0;
    for (const auto& row : matrix_) {
        for (const auto& entry : row) {
            for (const auto& term : entry.terms()) best = std::max(best, std::abs(term.first));
        }
    }
    return best;
}

// Lowest t-exponent among the entries of T^{-1} = adj(T) / det T.
static int inverse_min_exponent(const TransitionBundle& b) {
    const LaurentMatrix& m = b.matrix();
    const std::size_t n = m.size();
    if (n == 1) return -b.degree();
    int lowest = 0;
    bool any = false;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            LaurentMatrix minor;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r) continue;
                std::vector<LaurentPoly> row;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j != c) row.push_back(m[i][j]);
                }
                minor.push_back(std::move(row));
            }
            const LaurentPoly cof = determinant(minor, b.modulus());
            if (cof.is_zero()) continue;
            lowest = any ? std::min(lowest, cof.min_exponent()) : cof.min_exponent();
            any = true;
        }
    }
    return lowest - b.degree();
}

long bundle_h0(const TransitionBundle& b, int k, std::optional<int> cap) {
    // sinf(u) = u^k T(1/u)^{-1} s0(1/u) with s0 polynomial, so no section
    // component has degree above k - (lowest exponent of T^{-1}).
    const int top = cap.value_or(std::max(0, k - inverse_min_exponent(b)) + 1);
    if (top < 0) return 0;
    const std::size_t n = b.rank();
    const std::uint32_t p = b.modulus();
    const std::size_t per = static_cast<std::size_t>(top) + 1;
    const std::size_t unknowns = n * per;

    // sinf_i(u) = sum_m x[i][m] u^m. Row j of t^k T(t) sinf(1/t) has the
    // t-exponent k + e - m for each term c t^e of T[j][i]; every negative
    // exponent must cancel.
    int lowest = 0;
    for (const auto& row : b.matrix()) {
        for (const auto& entry : row) {
            if (!entry.is_zero()) lowest = std::min(lowest, k + entry.min_exponent() - top);
        }
    }
    fq::Matrix constraints(p, 0, unknowns);
    for (std::size_t j = 0; j < n; ++j) {
        for (int exponent = lowest; exponent < 0; ++exponent) {
            fq::Vector row(unknowns, 0);
            bool any = false;
            for (std::size_t i = 0; i < n; ++i) {
                for (const auto& [e, c] : b.matrix()[j][i].terms()) {
                    const int m = k + e - exponent;
                    if (m < 0 || m > top) continue;
                    auto& slot = row[i * per + static_cast<std::size_t>(m)];
                    slot = (slot + c) % p;
                    any = true;
                }
            }
            if (any) constraints.append_row(row);
        }
    }
    const fq::Subspace sections = fq::kernel(constraints);
    for (std::size_t v = 0; v < sections.dim(); ++v) {
        for (std::size_t i = 0; i < n; ++i) {
            if (sections.basis()(v, i * per + static_cast<std::size_t>(top)) != 0) {
                throw Error("truncation overflow");
            }
        }
    }
    return static_cast<long>(sections.dim());
}

SplittingType splitting_type(const TransitionBundle& b, int max_abs_degree) {
    const auto [k_min, k_max] = bundles::profile_window(max_abs_degree);
    bundles::H0Profile profile;
    for (int k = k_min; k <= k_max; ++k) profile[k] = bundle_h0(b, k);
    auto s = bundles::splitting_from_h0_profile(profile, b.rank());
    if (s.degree() != b.degree()) throw Error("splitting degree disagrees with det of the transition matrix");
    return s;
}

long ext_dim(const SplittingType& quotient, const SplittingType& sub) {
    long total = 0;
    for (int k : quotient.degrees()) {
        for (int l : sub.degrees()) total += std::max(0, k - l - 1);
    }
    return total;
}

std::vector<CocyclePosition> cocycle_positions(const SplittingType& quotient, const SplittingType& sub) {
    std::vector<CocyclePosition> out;
    for (std::size_t j = 0; j < sub.rank(); ++j) {
        for (std::size_t i = 0; i < quotient.rank(); ++i) {
            for (int e = sub.degrees()[j] - quotient.degrees()[i] + 1; e <= -1; ++e) out.push_back({j, i, e});
        }
    }
    return out;
}

ExtClass split_class(const SplittingType& quotient, const SplittingType& sub, std::uint32_t q0) {
    return {quotient, sub, LaurentMatrix(sub.rank(), std::vector<LaurentPoly>(quotient.rank(), LaurentPoly(q0)))};
}

ExtClass class_from_coordinates(const SplittingType& quotient, const SplittingType& sub, std::uint32_t q0,
                                std::span<const fq::Residue> coords) {
    const auto positions = cocycle_positions(quotient, sub);
    if (coords.size() != positions.size()) throw Error("coordinate count differs from dim Ext^1");
    ExtClass c = split_class(quotient, sub, q0);
    for (std::size_t a = 0; a < positions.size(); ++a) {
        c.cocycle[positions[a].row][positions[a].col].add_term(positions[a].exponent, coords[a]);
    }
    return c;
}

std::vector<ExtClass> enumerate_classes(const SplittingType& quotient, const SplittingType& sub, std::uint32_t q0) {
    fq::require_prime(q0);
    const long dim = ext_dim(quotient, sub);
    if (static_cast<double>(dim) * std::log10(static_cast<double>(q0)) > 6.0) throw Error("instance too large");
    std::vector<ExtClass> out;
    std::vector<fq::Residue> digits(static_cast<std::size_t>(dim), 0);
    while (true) {
        out.push_back(class_from_coordinates(quotient, sub, q0, digits));
        std::size_t s = digits.size();
        while (s > 0 && digits[s - 1] == q0 - 1) digits[--s] = 0;
        if (s == 0) break;
        ++digits[s - 1];
    }
    return out;
}

TransitionBundle extension_bundle(const ExtClass& c, std::uint32_t q0) {
    const auto& k = c.quotient.degrees();
    const auto& l = c.sub.degrees();
    const std::size_t s = l.size();
    const std::size_t r = k.size();
    if (c.cocycle.size() != s) throw Error("illegal cocycle support: wrong row count");

    LaurentMatrix t(s + r, std::vector<LaurentPoly>(s + r, LaurentPoly(q0)));
    for (std::size_t j = 0; j < s; ++j) {
        t[j][j] = LaurentPoly::monomial(q0, l[j]);
        if (c.cocycle[j].size() != r) throw Error("illegal cocycle support: wrong column count");
        for (std::size_t i = 0; i < r; ++i) {
            const auto& entry = c.cocycle[j][i];
            if (entry.modulus() != q0) throw Error("cocycle over the wrong field");
            for (const auto& [e, coeff] : entry.terms()) {
                if (e > -1 || e < l[j] - k[i] + 1) throw Error("illegal cocycle support");
            }
            // The Hom-cocycle composed with the quotient transition; a bare t^e
            // with e <= -1 <= l_j would be a coboundary.
            t[j][s + i] = entry * LaurentPoly::monomial(q0, k[i]);
        }
    }
    for (std::size_t i = 0; i < r; ++i) t[s + i][s + i] = LaurentPoly::monomial(q0, k[i]);
    return TransitionBundle(q0, std::move(t));
}

ProjectiveType middle_term(const ExtClass& c, std::uint32_t q0) {
    const int bound = std::max(c.quotient.max_abs_degree(), c.sub.max_abs_degree());
    return bundles::canonical_projective(splitting_type(extension_bundle(c, q0), bound));
}

Rational cuspidal_sum(const FormTable& f, const SplittingType& quotient, const SplittingType& sub, std::uint32_t q0) {
    Rational total(0);
    for (const auto& c : enumerate_classes(quotient, sub, q0)) {
        const auto middle = middle_term(c, q0);
        if (!f.contains(middle)) throw Error("truncation too small: " + label(middle) + " is outside the table");
        total += f.at(middle);
    }
    return total;
}

std::pair<SplittingType, SplittingType> cusp_vanishing_certificate(const ProjectiveType& p) {
    if (p.rank() < 2) throw Error("cusp certificate needs rank >= 2");
    const std::vector<int> d = p.as_splitting().degrees();
    return {SplittingType({d.front()}), SplittingType(std::vector<int>(d.begin() + 1, d.end()))};
}

std::size_t cusp_space_dimension(int bound, std::uint32_t q0, unsigned jobs) {
    if (bound < 1) throw Error("degree bound must be at least 1");
    fq::require_prime(q0);
    // Extra pairs are a cross-check on top of the certificates; their class
    // count is capped to keep the sweep interactive.
    constexpr double kMaxClasses = 4096;
    const auto vertices = bundles::enumerate_pbun(3, bound);
    std::map<ProjectiveType, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;

    std::vector<std::pair<SplittingType, SplittingType>> pairs;
    for (const auto& v : vertices) {
        pairs.push_back(cusp_vanishing_certificate(v));
        const std::vector<int> d = v.as_splitting().degrees();
        for (unsigned mask = 1; mask + 1 < (1u << d.size()); ++mask) {
            std::vector<int> q_part;
            std::vector<int> s_part;
            for (std::size_t i = 0; i < d.size(); ++i) ((mask >> i) & 1u ? q_part : s_part).push_back(d[i]);
            SplittingType quotient(q_part), sub(s_part);
            if (std::pow(static_cast<double>(q0), static_cast<double>(ext_dim(quotient, sub))) > kMaxClasses) continue;
            pairs.emplace_back(std::move(quotient), std::move(sub));
        }
    }

    auto rows = detail::parallel_map(pairs.size(), jobs, [&](std::size_t a) -> std::optional<qlinalg::Row> {
        qlinalg::Row row(vertices.size(), Rational(0));
        for (const auto& c : enumerate_classes(pairs[a].first, pairs[a].second, q0)) {
            auto it = index.find(middle_term(c, q0));
            if (it == index.end()) return std::nullopt;
            row[it->second] += 1;
        }
        return row;
    });
    std::vector<qlinalg::Row> system;
    for (auto& row : rows) {
        if (row) system.push_back(std::move(*row));
    }
    return qlinalg::nullity(std::move(system), vertices.size());
}

} // namespace pbun::ext
