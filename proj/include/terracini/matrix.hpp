#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "terracini/field.hpp"

namespace terracini {

/// Dense row-major matrix over a prime field. Immutable in spirit: the
/// elimination routines work on copies, so values can be shared freely.
class Matrix {
public:
    Matrix(PrimeField f, size_t rows, size_t cols);

    static Matrix identity(PrimeField f, size_t n);
    static Matrix from_rows(PrimeField f, const std::vector<std::vector<uint64_t>>& rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const PrimeField& field() const { return f_; }

    uint64_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    uint64_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }

    void append_row(std::span<const uint64_t> row);

    Matrix multiplied_by(const Matrix& rhs) const;

    /// Exact rank via Gaussian elimination, pivoting on the first nonzero
    /// entry of each column.
    size_t rank() const;

    /// Reduced row echelon form; pivot column indices reported in order.
    Matrix rref(std::vector<size_t>* pivots = nullptr) const;

    /// Nonzero rows of the RREF: a canonical basis of the row space.
    Matrix row_basis() const;

    /// Rows form a basis of {v : M v^T = 0}; row count = cols - rank.
    Matrix nullspace_basis() const;

private:
    PrimeField f_;
    size_t rows_, cols_;
    std::vector<uint64_t> a_;
};

/// Vertical concatenation; column counts must agree.
Matrix stack(const Matrix& a, const Matrix& b);

/// Basis of rowspace(a) ∩ rowspace(b) via the Zassenhaus block trick.
/// dim = rank(a) + rank(b) - rank(stack(a, b)).
Matrix rowspace_intersection(const Matrix& a, const Matrix& b);

} // namespace terracini
