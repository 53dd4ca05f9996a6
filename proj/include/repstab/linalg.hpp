#ifndef REPSTAB_LINALG_HPP
#define REPSTAB_LINALG_HPP

#include "repstab/core.hpp"

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace repstab::linalg {

/// Sparse exact vector: (column, value) pairs sorted by column, no zero values.
using SparseVector = std::vector<std::pair<int, Rational>>;

SparseVector from_map(const std::map<int, Rational>& entries);

/// Row-echelon basis of a subspace, kept fraction-free: every stored row has
/// coprime integer entries and a positive leading (pivot) entry. Vectors are
/// reduced column by column from the left, so non-pivot columns index a basis
/// of the quotient space.
class EchelonBasis {
public:
    /// Reduces `v` against the basis and keeps the remainder if non-zero.
    /// Returns true when the rank grew.
    bool insert(const SparseVector& v);

    /// Remainder of `v` modulo the span; only non-pivot columns survive.
    SparseVector reduce(const SparseVector& v) const;

    std::size_t rank() const noexcept { return rows_.size(); }
    bool is_pivot(int column) const { return pivots_.count(column) != 0; }

private:
    using IntRow = std::vector<std::pair<int, BigInt>>;

    static IntRow eliminate(IntRow v, const IntRow& row, Rational* scale = nullptr);
    IntRow reduce_int(IntRow v) const;

    std::vector<IntRow> rows_;
    std::unordered_map<int, std::size_t> pivots_;
};

/// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Rational trace() const;
    /// Rank by fraction-free (Bareiss) elimination after clearing denominators.
    std::size_t rank() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Stacks the columns of `blocks` side by side (all must share the row count).
Matrix hstack(const std::vector<Matrix>& blocks);

}  // namespace repstab::linalg

#endif
