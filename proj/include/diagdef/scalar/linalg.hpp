#pragma once

#include "diagdef/scalar/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace diagdef {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    std::vector<Rational> column(std::size_t c) const;

    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form with the list of pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Some x with a*x = b, if one exists.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

/// A row vector w with w*a = 0 and w.b != 0; exists exactly when a*x = b has
/// no solution.
std::optional<std::vector<Rational>> infeasibility_certificate(const Matrix& a, const std::vector<Rational>& b);

/// Basis of the null space {x : a*x = 0}, one vector per free column.
std::vector<std::vector<Rational>> null_space(const Matrix& a);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace diagdef
