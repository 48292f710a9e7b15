#include "agcodes/fmatrix.hpp"

#include <algorithm>

namespace agcodes {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!a.field()->same_as(*b.field())) throw FieldError("matrices over different fields");
}

// row_dst -= factor * row_src, starting at column `from`.
void axpy(const Field& f, std::span<Rep> dst, std::span<const Rep> src, Rep factor, std::size_t from) {
    const Rep minus = f.neg(factor);
    for (std::size_t c = from; c < dst.size(); ++c)
        if (src[c] != 0) dst[c] = f.add(dst[c], f.mul(minus, src[c]));
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Rep> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw ShapeError("entry count does not match shape");
    for (Rep e : data_)
        if (e >= field_->size()) throw FieldError("matrix entry outside field");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Rep e) { return e == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::frobenius(std::uint32_t e) const {
    Matrix out(*this);
    if (e % field_->degree() == 0) return out;
    for (Rep& x : out.data_) x = field_->frobenius(x, e);
    return out;
}

Matrix Matrix::top_rows(std::size_t count) const {
    count = std::min(count, rows_);
    return Matrix(field_, count, cols_, std::vector<Rep>(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_)));
}

bool Matrix::operator==(const Matrix& o) const {
    return field_->same_as(*o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RrefResult rref(const Matrix& m) {
    const Field& f = *m.field();
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t sel = row;
        while (sel < r.rows() && r(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != row) {
            auto a = r.row(sel), b = r.row(row);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const Rep scale = f.inv(r(row, col));
        auto prow = r.row(row);
        for (std::size_t c = col; c < r.cols(); ++c) prow[c] = f.mul(prow[c], scale);
        for (std::size_t other = 0; other < r.rows(); ++other) {
            if (other == row) continue;
            const Rep factor = r(other, col);
            if (factor != 0) axpy(f, r.row(other), r.row(row), factor, col);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace(const Matrix& m) {
    const Field& f = *m.field();
    const auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;

    Matrix basis(m.field(), m.cols() - red.rank, m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(out, free) = 1;
        for (std::size_t i = 0; i < red.rank; ++i) basis(out, red.pivots[i]) = f.neg(red.reduced(i, free));
        ++out;
    }
    return basis;
}

Matrix product(const Matrix& a, const Matrix& b, std::uint32_t left_entry_power) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw ShapeError("inner dimensions differ");
    const Field& f = *a.field();
    const Matrix lhs = a.frobenius(left_entry_power);
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        auto orow = out.row(i);
        for (std::size_t l = 0; l < lhs.cols(); ++l) {
            const Rep x = lhs(i, l);
            if (x == 0) continue;
            auto brow = b.row(l);
            for (std::size_t j = 0; j < b.cols(); ++j) orow[j] = f.add(orow[j], f.mul(x, brow[j]));
        }
    }
    return out;
}

bool rowspace_equal(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw ShapeError("column counts differ");
    const auto ra = rref(a), rb = rref(b);
    if (ra.rank != rb.rank || ra.pivots != rb.pivots) return false;
    for (std::size_t i = 0; i < ra.rank; ++i)
        if (!std::equal(ra.reduced.row(i).begin(), ra.reduced.row(i).end(), rb.reduced.row(i).begin())) return false;
    return true;
}

bool rowspace_contains(const Matrix& b, const Matrix& a) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw ShapeError("column counts differ");
    std::vector<Rep> stacked(b.entries());
    stacked.insert(stacked.end(), a.entries().begin(), a.entries().end());
    return rank(Matrix(b.field(), a.rows() + b.rows(), b.cols(), std::move(stacked))) == rank(b);
}

}  // namespace agcodes
