#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catlevy/rational.hpp"

namespace catlevy {

// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& b) const;
    Matrix operator+(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    Matrix transpose() const;
    bool operator==(const Matrix& b) const;
    bool operator!=(const Matrix& b) const { return !(*this == b); }

    bool is_zero() const;
    std::size_t rank() const;
    std::optional<Matrix> inverse() const;
    Matrix columns(std::size_t first, std::size_t count) const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix hconcat(const std::vector<Matrix>& blocks);
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace catlevy
