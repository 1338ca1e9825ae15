#include "staudt/linalg.hpp"

#include <optional>

namespace staudt {

Matrix Matrix::identity(GroundField f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(f);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw domain_error("matrix product across ground fields");
    if (cols_ != o.rows_) throw domain_error("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

std::vector<FieldElem> Matrix::apply(const std::vector<FieldElem>& v) const {
    if (v.size() != cols_) throw domain_error("matrix-vector shape mismatch");
    std::vector<FieldElem> r(rows_, FieldElem::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

struct Echelon {
    Matrix m;
    std::vector<std::size_t> pivot_cols;
    int det_sign = 1;
    FieldElem det_scale; // product of pivots before normalization
};

Echelon rref(const Matrix& input) {
    Echelon e{input, {}, 1, FieldElem::one(input.field())};
    Matrix& m = e.m;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
            e.det_sign = -e.det_sign;
        }
        FieldElem inv = m.at(r, c).inverse();
        e.det_scale *= m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            FieldElem factor = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

} // namespace

std::size_t Matrix::rank() const {
    return rref(*this).pivot_cols.size();
}

FieldElem Matrix::determinant() const {
    if (rows_ != cols_) throw domain_error("determinant of a non-square matrix");
    Echelon e = rref(*this);
    if (e.pivot_cols.size() < rows_) return FieldElem::zero(field_);
    FieldElem d = e.det_scale;
    return e.det_sign < 0 ? -d : d;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw domain_error("inverse of a non-square matrix");
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = FieldElem::one(field_);
    }
    Echelon e = rref(aug);
    if (e.pivot_cols.size() < rows_ || e.pivot_cols[rows_ - 1] >= cols_)
        throw domain_error("matrix is singular");
    Matrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = e.m.at(i, cols_ + j);
    return inv;
}

std::vector<std::vector<FieldElem>> Matrix::null_space() const {
    Echelon e = rref(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElem> v(cols_, FieldElem::zero(field_));
        v[free_col] = FieldElem::one(field_);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.m.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldElem>> Matrix::solve(const std::vector<FieldElem>& b) const {
    if (b.size() != rows_) throw domain_error("solve shape mismatch");
    Matrix aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    Echelon e = rref(aug);
    for (auto c : e.pivot_cols)
        if (c == cols_) return std::nullopt; // pivot in augmented column
    std::vector<FieldElem> x(cols_, FieldElem::zero(field_));
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.m.at(r, cols_);
    return x;
}

} // namespace staudt
