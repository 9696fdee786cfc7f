#pragma once

// Dense matrices over Z with arbitrary-precision entries.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wittlab {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Row-major nested initialiser; all rows must have equal length.
    static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows, std::size_t cols_if_empty = 0);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;
    IntMatrix transpose() const;
    /// Rows [r0, r1) and columns [c0, c1).
    IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
    /// Stacks matrices with equal column counts vertically.
    static IntMatrix vstack(const std::vector<IntMatrix>& parts, std::size_t cols);
    /// Places matrices with equal row counts side by side.
    static IntMatrix hstack(const std::vector<IntMatrix>& parts, std::size_t rows);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const;
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    std::vector<std::vector<mpz_class>> to_rows() const;
    std::string to_string() const;

    // Elementary operations used by elimination.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += c * row j
    void add_row_multiple(std::size_t i, std::size_t j, const mpz_class& c);
    /// col i += c * col j
    void add_col_multiple(std::size_t i, std::size_t j, const mpz_class& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

} // namespace wittlab
