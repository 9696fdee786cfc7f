#include "wittlab/int_matrix.hpp"

#include "wittlab/errors.hpp"

namespace wittlab {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows, std::size_t cols_if_empty)
{
    const std::size_t cols = rows.empty() ? cols_if_empty : rows[0].size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw SchemaError("ragged matrix: row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

bool IntMatrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const
{
    IntMatrix b(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            b.at(i - r0, j - c0) = at(i, j);
    return b;
}

IntMatrix IntMatrix::vstack(const std::vector<IntMatrix>& parts, std::size_t cols)
{
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols)
            throw InvariantError("vstack: column count mismatch");
        rows += p.rows();
    }
    IntMatrix m(rows, cols);
    std::size_t r = 0;
    for (const auto& p : parts)
        for (std::size_t i = 0; i < p.rows(); ++i, ++r)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(r, j) = p.at(i, j);
    return m;
}

IntMatrix IntMatrix::hstack(const std::vector<IntMatrix>& parts, std::size_t rows)
{
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows)
            throw InvariantError("hstack: row count mismatch");
        cols += p.cols();
    }
    IntMatrix m(rows, cols);
    std::size_t c = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < p.cols(); ++j)
                m.at(i, c + j) = p.at(i, j);
        c += p.cols();
    }
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw InvariantError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                             std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a.at(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b.at(k, j) != 0)
                    c.at(i, j) += x * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InvariantError("matrix sum shape mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        c.data_[k] += b.data_[k];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix IntMatrix::operator-() const
{
    IntMatrix c = *this;
    for (auto& x : c.data_)
        x = -x;
    return c;
}

bool IntMatrix::operator==(const IntMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<std::vector<mpz_class>> IntMatrix::to_rows() const
{
    std::vector<std::vector<mpz_class>> out(rows_, std::vector<mpz_class>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i][j] = at(i, j);
    return out;
}

std::string IntMatrix::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < cols_; ++j)
            s += (j ? ", " : "") + at(i, j).get_str();
        s += "]";
    }
    return s + "]";
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const mpz_class& c)
{
    for (std::size_t k = 0; k < cols_; ++k)
        if (at(j, k) != 0)
            at(i, k) += c * at(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const mpz_class& c)
{
    for (std::size_t k = 0; k < rows_; ++k)
        if (at(k, j) != 0)
            at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t k = 0; k < cols_; ++k)
        at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t i)
{
    for (std::size_t k = 0; k < rows_; ++k)
        at(k, i) = -at(k, i);
}

} // namespace wittlab
