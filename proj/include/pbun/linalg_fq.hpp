#pragma once

// Dense linear algebra over prime fields F_p with small p.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pbun::fq {

using Residue = std::uint32_t;
using Vector = std::vector<Residue>;

/// Throws "modulus not prime" unless p is a prime below 2^31.
void require_prime(std::uint32_t p);

Residue inverse(Residue a, std::uint32_t p);

/// Row-major matrix over F_p; every entry is reduced mod p.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::uint32_t p, std::size_t rows, std::size_t cols);
    /// Entries may be any integers; they are reduced mod p.
    Matrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries);

    static Matrix identity(std::uint32_t p, std::size_t n);

    std::uint32_t modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t value);

    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    void append_row(std::span<const Residue> values);

    Vector operator*(std::span<const Residue> v) const;

    bool operator==(const Matrix&) const = default;
    auto operator<=>(const Matrix&) const = default;

private:
    std::uint32_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> data_;
};

/// Reduced row-echelon form (same shape; zero rows at the bottom).
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace of F_p^n held by its canonical basis: the reduced
/// row-echelon form with zero rows removed.
class Subspace {
public:
    /// Spans the rows of `generators` (any matrix with `cols() == n`).
    explicit Subspace(const Matrix& generators);
    static Subspace zero(std::uint32_t p, std::size_t ambient);
    static Subspace full(std::uint32_t p, std::size_t ambient);

    std::uint32_t modulus() const { return basis_.modulus(); }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(std::span<const Residue> v) const;
    /// The functionals vanishing on this subspace, as a subspace of the dual.
    Subspace annihilator() const;

    bool operator==(const Subspace&) const = default;
    auto operator<=>(const Subspace&) const = default;

private:
    Subspace() = default;
    Matrix basis_;
};

/// {x : m x = 0}
Subspace kernel(const Matrix& m);

/// Some x with m x = rhs, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Residue> rhs);

/// Every k-dimensional subspace of F_p^n, each exactly once, ordered by
/// pivot pattern and then by free entries. Throws "instance too large" when
/// p^(k n) exceeds 10^8.
std::vector<Subspace> enumerate_subspaces(std::uint32_t p, std::size_t n, std::size_t k);

} // namespace pbun::fq
