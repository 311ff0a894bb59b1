#pragma once

// Dense linear algebra over Q or F_p. Entries are Rationals in both cases;
// over F_p they are kept as canonical residues 0..p-1.

#include <cstddef>
#include <string>
#include <vector>

#include "stabkit/exactnum.hpp"

namespace stab {

class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(int p);

    int characteristic() const noexcept { return p_; }
    bool is_finite() const noexcept { return p_ != 0; }
    std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

    Rational reduce(const Rational& x) const;
    Rational add(const Rational& x, const Rational& y) const { return reduce(x + y); }
    Rational sub(const Rational& x, const Rational& y) const { return reduce(x - y); }
    Rational mul(const Rational& x, const Rational& y) const { return reduce(x * y); }
    Rational inv(const Rational& x) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(int p) : p_(p) {}
    int p_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    void append_row(const std::vector<Rational>& r);
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f);
// Applies `m` to the column vector `v`.
std::vector<Rational> apply(const Matrix& m, const std::vector<Rational>& v, const Field& f);

// Reduced row echelon form with zero rows dropped; pivots are returned in
// `pivots` (one per remaining row) when non-null.
Matrix rref(Matrix m, const Field& f, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m, const Field& f);
std::vector<std::size_t> pivot_columns(const Matrix& echelon);

// `echelon` must be in reduced row echelon form. Subtracts the projection
// onto its row space along the pivot coordinates.
std::vector<Rational> reduce_by(const Matrix& echelon, const std::vector<std::size_t>& pivots,
                                std::vector<Rational> v, const Field& f);
bool in_row_space(const Matrix& echelon, const std::vector<std::size_t>& pivots, const std::vector<Rational>& v,
                  const Field& f);
// Row space of `inner` contained in the row space of `outer` (both echelon).
bool row_space_contains(const Matrix& outer, const Matrix& inner, const Field& f);

std::string to_string(const Matrix& m);

}  // namespace stab
