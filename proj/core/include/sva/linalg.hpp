#pragma once

#include <vector>

#include "sva/scalar.hpp"

namespace sva {

/// Dense matrix over the exact scalar field.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const Field& f);
    static Matrix identity(size_t n, const Field& f);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transposed() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    bool operator==(const Matrix& o) const;

    /// Reduced row echelon form; returns pivot column indices.
    std::vector<size_t> rref();
    size_t rank() const;
    Scalar det() const;
    Matrix inverse() const; // throws NotInvertible on singular input
    /// Solve A x = b; throws NotInvertible if the system is inconsistent or
    /// underdetermined.
    std::vector<Scalar> solve(const std::vector<Scalar>& b) const;

private:
    size_t rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

} // namespace sva
