#include "terracini/matrix.hpp"

#include <algorithm>

#include "terracini/errors.hpp"

namespace terracini {

Matrix::Matrix(PrimeField f, size_t rows, size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField f, const std::vector<std::vector<uint64_t>>& rows, size_t cols) {
    Matrix m(f, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void Matrix::append_row(std::span<const uint64_t> row) {
    if (row.size() != cols_) throw SpecError("append_row: length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

Matrix Matrix::multiplied_by(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw SpecError("matrix product: dimension mismatch");
    Matrix out(f_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            uint64_t v = at(i, k);
            if (!v) continue;
            for (size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = f_.add(out.at(i, j), f_.mul(v, rhs.at(k, j)));
        }
    }
    return out;
}

Matrix Matrix::rref(std::vector<size_t>* pivots) const {
    Matrix m = *this;
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t sel = r;
        while (sel < rows_ && m.at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != r) {
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
        }
        uint64_t pinv = f_.inv(m.at(r, c));
        for (size_t j = c; j < cols_; ++j) m.at(r, j) = f_.mul(m.at(r, j), pinv);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint64_t fac = m.at(i, c);
            if (!fac) continue;
            for (size_t j = c; j < cols_; ++j)
                m.at(i, j) = f_.sub(m.at(i, j), f_.mul(fac, m.at(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

size_t Matrix::rank() const {
    std::vector<size_t> piv;
    rref(&piv);
    return piv.size();
}

Matrix Matrix::row_basis() const {
    std::vector<size_t> piv;
    Matrix r = rref(&piv);
    Matrix out(f_, 0, cols_);
    for (size_t i = 0; i < piv.size(); ++i) {
        std::vector<uint64_t> row(cols_);
        for (size_t j = 0; j < cols_; ++j) row[j] = r.at(i, j);
        out.append_row(row);
    }
    return out;
}

Matrix Matrix::nullspace_basis() const {
    std::vector<size_t> piv;
    Matrix r = rref(&piv);
    std::vector<bool> isPivot(cols_, false);
    for (size_t c : piv) isPivot[c] = true;
    Matrix out(f_, 0, cols_);
    for (size_t c = 0; c < cols_; ++c) {
        if (isPivot[c]) continue;
        std::vector<uint64_t> v(cols_, 0);
        v[c] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f_.neg(r.at(i, c));
        out.append_row(v);
    }
    return out;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw SpecError("stack: column mismatch");
    Matrix m = a;
    for (size_t i = 0; i < b.rows(); ++i) {
        std::vector<uint64_t> row(b.cols());
        for (size_t j = 0; j < b.cols(); ++j) row[j] = b.at(i, j);
        m.append_row(row);
    }
    return m;
}

Matrix rowspace_intersection(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw SpecError("rowspace_intersection: column mismatch");
    const size_t c = a.cols();
    const PrimeField& F = a.field();
    // Zassenhaus: reduce [A | A; B | 0]; rows whose left half vanished carry
    // an intersection basis in their right half.
    Matrix block(F, a.rows() + b.rows(), 2 * c);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < c; ++j) {
            block.at(i, j) = a.at(i, j);
            block.at(i, c + j) = a.at(i, j);
        }
    }
    for (size_t i = 0; i < b.rows(); ++i) {
        for (size_t j = 0; j < c; ++j) block.at(a.rows() + i, j) = b.at(i, j);
    }
    std::vector<size_t> piv;
    Matrix r = block.rref(&piv);
    Matrix out(F, 0, c);
    for (size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] < c) continue;
        std::vector<uint64_t> row(c);
        for (size_t j = 0; j < c; ++j) row[j] = r.at(i, c + j);
        out.append_row(row);
    }
    return out;
}

} // namespace terracini
