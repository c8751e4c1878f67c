#pragma once

#include "bhj/scalar.hpp"

#include <cstddef>
#include <vector>

namespace bhj {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);
Vec& add_scaled(Vec& dst, const Vec& src, const Scalar& c);
Vec scaled(const Vec& v, const Scalar& c);
Vec basis_vector(std::size_t dim, std::size_t i);

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;

    Vec apply(const Vec& v) const;
    Vec column(std::size_t c) const;

    /// Exact inverse via Gauss-Jordan elimination. Throws SingularMap.
    Matrix inverse() const;

    /// Integer power; negative exponents invert first. Square matrices only.
    Matrix power(long k) const;

    bool operator==(const Matrix& o) const = default;

    /// Lexicographic comparison of dimensions then entries in row-major order.
    static int compare(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Block-diagonal assembly of two matrices.
Matrix block_diag(const Matrix& a, const Matrix& b);

} // namespace bhj
