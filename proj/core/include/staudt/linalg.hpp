#pragma once

#include <vector>

#include "staudt/field.hpp"

namespace staudt {

// Dense exact matrix over one ground field. Small sizes only; used for null
// spaces, rank computations and 3x3 projective transforms.
class Matrix {
public:
    Matrix(GroundField f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, FieldElem::zero(f)) {}

    static Matrix identity(GroundField f, std::size_t n);

    const GroundField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;

    std::size_t rank() const;
    FieldElem determinant() const;
    Matrix inverse() const; // domain_error when singular

    // Basis of the right null space; deterministic (free columns in order,
    // pivot entries back-substituted). Vectors have length cols().
    std::vector<std::vector<FieldElem>> null_space() const;

    // One solution of A x = b, nullopt when inconsistent.
    std::optional<std::vector<FieldElem>> solve(const std::vector<FieldElem>& b) const;

private:
    GroundField field_;
    std::size_t rows_, cols_;
    std::vector<FieldElem> data_;
};

} // namespace staudt
