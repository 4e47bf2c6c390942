#include "pbun/linalg_fq.hpp"

#include <algorithm>
#include <cmath>

#include "pbun/error.hpp"
#include "pbun/numeric.hpp"

namespace pbun::fq {

namespace {

Residue reduce(std::int64_t v, std::uint32_t p) {
    const std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<Residue>(m < 0 ? m + p : m);
}

Residue mulmod(Residue a, Residue b, std::uint32_t p) {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}

Residue submod(Residue a, Residue b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }

// In-place Gauss-Jordan; returns the pivot columns.
std::vector<std::size_t> reduce_rows(std::vector<Residue>& a, std::size_t rows, std::size_t cols,
                                     std::uint32_t p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
        }
        const Residue inv = inverse(a[r * cols + c], p);
        for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = mulmod(a[r * cols + j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Residue f = a[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                a[i * cols + j] = submod(a[i * cols + j], mulmod(f, a[r * cols + j], p), p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

void require_prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p)) throw Error("modulus not prime: " + std::to_string(p));
}

Residue inverse(Residue a, std::uint32_t p) {
    if (a % p == 0) throw Error("zero has no inverse");
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Residue>(result);
}

Matrix::Matrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    require_prime(p);
}

Matrix::Matrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries)
    : Matrix(p, rows, cols) {
    if (entries.size() != rows * cols) throw Error("matrix entry count does not match its shape");
    for (std::size_t i = 0; i < entries.size(); ++i) data_[i] = reduce(entries[i], p);
}

Matrix Matrix::identity(std::uint32_t p, std::size_t n) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, std::int64_t value) { data_[r * cols_ + c] = reduce(value, p_); }

void Matrix::append_row(std::span<const Residue> values) {
    if (values.size() != cols_) throw Error("row length does not match the column count");
    for (Residue v : values) data_.push_back(v % p_);
    ++rows_;
}

Vector Matrix::operator*(std::span<const Residue> v) const {
    if (v.size() != cols_) throw Error("vector length does not match the column count");
    Vector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = (acc + static_cast<std::uint64_t>(data_[i * cols_ + j]) * v[j]) % p_;
        out[i] = static_cast<Residue>(acc);
    }
    return out;
}

Matrix rref(const Matrix& m) {
    Matrix out(m.modulus(), m.rows(), m.cols());
    std::vector<Residue> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) std::copy_n(m.row(i).begin(), m.cols(), a.begin() + i * m.cols());
    reduce_rows(a, m.rows(), m.cols(), m.modulus());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, a[i * m.cols() + j]);
    }
    return out;
}

std::size_t rank(const Matrix& m) {
    std::vector<Residue> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) std::copy_n(m.row(i).begin(), m.cols(), a.begin() + i * m.cols());
    return reduce_rows(a, m.rows(), m.cols(), m.modulus()).size();
}

Subspace::Subspace(const Matrix& generators) {
    const Matrix r = rref(generators);
    basis_ = Matrix(generators.modulus(), 0, generators.cols());
    for (std::size_t i = 0; i < r.rows(); ++i) {
        const auto row = r.row(i);
        if (std::any_of(row.begin(), row.end(), [](Residue x) { return x != 0; })) basis_.append_row(row);
    }
}

Subspace Subspace::zero(std::uint32_t p, std::size_t ambient) { return Subspace(Matrix(p, 0, ambient)); }

Subspace Subspace::full(std::uint32_t p, std::size_t ambient) { return Subspace(Matrix::identity(p, ambient)); }

bool Subspace::contains(std::span<const Residue> v) const {
    Matrix m = basis_;
    m.append_row(v);
    return rank(m) == dim();
}

Subspace Subspace::annihilator() const {
    // phi kills every basis row  <=>  basis * phi = 0.
    return kernel(basis_);
}

Subspace kernel(const Matrix& m) {
    const std::uint32_t p = m.modulus();
    std::vector<Residue> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) std::copy_n(m.row(i).begin(), m.cols(), a.begin() + i * m.cols());
    const auto pivots = reduce_rows(a, m.rows(), m.cols(), p);

    Matrix gens(p, 0, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = submod(0, a[r * m.cols() + free], p);
        }
        gens.append_row(v);
    }
    return Subspace(gens);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Residue> rhs) {
    if (rhs.size() != m.rows()) throw Error("right-hand side length does not match the row count");
    const std::uint32_t p = m.modulus();
    const std::size_t cols = m.cols() + 1;
    std::vector<Residue> a(m.rows() * cols);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::copy_n(m.row(i).begin(), m.cols(), a.begin() + i * cols);
        a[i * cols + m.cols()] = rhs[i] % p;
    }
    const auto pivots = reduce_rows(a, m.rows(), cols, p);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r * cols + m.cols()];
    return x;
}

std::vector<Subspace> enumerate_subspaces(std::uint32_t p, std::size_t n, std::size_t k) {
    require_prime(p);
    if (k > n) throw Error("subspace dimension exceeds the ambient dimension");
    if (static_cast<double>(k * n) * std::log10(static_cast<double>(p)) > 8.0) {
        throw Error("instance too large");
    }
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(p, n));
        return out;
    }
    // Choose pivot columns c_0 < ... < c_{k-1}; row i has a 1 at c_i, zeros
    // at the other pivots and before c_i, and free entries elsewhere.
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t c = piv[i] + 1; c < n; ++c) {
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_slots.emplace_back(i, c);
            }
        }
        std::vector<Residue> digits(free_slots.size(), 0);
        while (true) {
            Matrix b(p, k, n);
            for (std::size_t i = 0; i < k; ++i) b.set(i, piv[i], 1);
            for (std::size_t s = 0; s < free_slots.size(); ++s) b.set(free_slots[s].first, free_slots[s].second, digits[s]);
            out.emplace_back(b);
            std::size_t s = free_slots.size();
            while (s > 0 && digits[s - 1] == p - 1) digits[--s] = 0;
            if (s == 0) break;
            ++digits[s - 1];
        }
        // Next combination of pivot columns.
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

} // namespace pbun::fq
