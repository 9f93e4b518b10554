#include "sva/linalg.hpp"

#include <cassert>

namespace sva {

Matrix::Matrix(size_t rows, size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.of(0)) {}

Matrix Matrix::identity(size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.of(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    assert(v.size() == cols_);
    std::vector<Scalar> r(rows_, field_.of(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

std::vector<size_t> Matrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t p = row;
        while (p < rows_ && at(p, col).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Scalar inv = at(row, col).inverse();
        for (size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Scalar factor = at(i, col);
            for (size_t j = col; j < cols_; ++j) at(i, j) -= factor * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref().size();
}

Scalar Matrix::det() const {
    assert(rows_ == cols_);
    Matrix m = *this;
    Scalar d = field_.of(1);
    for (size_t col = 0; col < cols_; ++col) {
        size_t p = col;
        while (p < rows_ && m.at(p, col).is_zero()) ++p;
        if (p == rows_) return field_.of(0);
        if (p != col) {
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col) * inv;
            for (size_t j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(col, j);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    assert(rows_ == cols_);
    Matrix aug(rows_, 2 * cols_, field_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = field_.of(1);
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_)
        throw NotInvertible("matrix is singular");
    Matrix r(rows_, cols_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
}

std::vector<Scalar> Matrix::solve(const std::vector<Scalar>& b) const {
    assert(b.size() == rows_);
    Matrix aug(rows_, cols_ + 1, field_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_)
        throw NotInvertible("inconsistent linear system");
    if (pivots.size() != cols_) throw NotInvertible("underdetermined linear system");
    std::vector<Scalar> x(cols_, field_.of(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

} // namespace sva
