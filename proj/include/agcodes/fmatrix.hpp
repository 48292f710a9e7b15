#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "agcodes/gf.hpp"

namespace agcodes {

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Rep> entries);

    static Matrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rep operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Rep& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Rep> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Rep> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Rep>& entries() const { return data_; }

    bool is_zero() const;
    Matrix transpose() const;
    /// Entrywise a -> a^(p^e).
    Matrix frobenius(std::uint32_t e) const;
    /// First `count` rows.
    Matrix top_rows(std::size_t count) const;

    bool operator==(const Matrix& o) const;

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rep> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are taken leftmost-first, using the first
/// row at or below the current position with a nonzero entry in the column.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {v : M v^T = 0}, one row per free column in ascending order
/// (free entry 1, other free entries 0).
Matrix nullspace(const Matrix& m);

/// A' * B where A' is A with every entry raised to p^left_entry_power.
Matrix product(const Matrix& a, const Matrix& b, std::uint32_t left_entry_power = 0);

/// True iff the two matrices span the same row space.
bool rowspace_equal(const Matrix& a, const Matrix& b);

/// True iff every row of `a` lies in the row space of `b`.
bool rowspace_contains(const Matrix& b, const Matrix& a);

}  // namespace agcodes
