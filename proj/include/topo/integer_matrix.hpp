#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace topo {

using Integer = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const IntegerMatrix& other) const = default;

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    std::vector<Integer> operator*(const std::vector<Integer>& vec) const;

    // Elementary operations; all are unimodular.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    /// col[target] += factor * col[source]
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Plain-text integer grid, one row per line.
std::ostream& operator<<(std::ostream& out, const IntegerMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
Integer determinant(const IntegerMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithDecomposition {
    IntegerMatrix left;     // U
    IntegerMatrix diagonal; // D
    IntegerMatrix right;    // V
    std::size_t rank = 0;

    /// Nonzero diagonal entries d_1..d_rank.
    std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Nonzero invariant factors only, without tracking U and V.
std::vector<Integer> invariant_factors(const IntegerMatrix& a);

/// Checks U*A*V = D, |det U| = |det V| = 1, diagonal shape, non-negativity and
/// the divisibility chain.
bool verify_smith(const IntegerMatrix& a, const SmithDecomposition& snf);

} // namespace topo
