#include "topo/integer_matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace topo {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long long x : row)
            data_.emplace_back(x);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool IntegerMatrix::is_zero() const {
    for (const Integer& x : data_)
        if (x != 0)
            return false;
    return true;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix dimensions do not agree");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (rhs(k, j) != 0)
                    out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::vector<Integer> IntegerMatrix::operator*(const std::vector<Integer>& vec) const {
    if (cols_ != vec.size())
        throw std::invalid_argument("matrix and vector dimensions do not agree");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if ((*this)(i, k) != 0 && vec[k] != 0)
                out[i] += (*this)(i, k) * vec[k];
    return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(source, j) != 0)
            (*this)(target, j) += factor * (*this)(source, j);
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, source) != 0)
            (*this)(i, target) += factor * (*this)(i, source);
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(r, j) = -(*this)(r, j);
}

void IntegerMatrix::negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, c) = -(*this)(i, c);
}

std::ostream& operator<<(std::ostream& out, const IntegerMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m(i, j);
        out << '\n';
    }
    return out;
}

Integer determinant(const IntegerMatrix& input) {
    if (input.rows() != input.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntegerMatrix m = input;
    Integer sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
        previous = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

using boost::multiprecision::abs;

// In-place Smith reduction of `a`. Row operations are mirrored on `u` and
// column operations on `v` when those are non-null.
std::size_t smith_reduce(IntegerMatrix& a, IntegerMatrix* u, IntegerMatrix* v) {
    const std::size_t rows = a.rows(), cols = a.cols();
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        if (u)
            u->swap_rows(i, j);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        if (v)
            v->swap_cols(i, j);
    };
    auto add_row = [&](std::size_t t, std::size_t s, const Integer& f) {
        a.add_row_multiple(t, s, f);
        if (u)
            u->add_row_multiple(t, s, f);
    };
    auto add_col = [&](std::size_t t, std::size_t s, const Integer& f) {
        a.add_col_multiple(t, s, f);
        if (v)
            v->add_col_multiple(t, s, f);
    };

    std::size_t t = 0;
    for (; t < rows && t < cols; ++t) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows)
            break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        while (true) {
            bool reduced = true;
            for (std::size_t i = t + 1; i < rows && reduced; ++i) {
                if (a(i, t) == 0)
                    continue;
                add_row(i, t, Integer(-(a(i, t) / a(t, t))));
                if (a(i, t) != 0) {
                    swap_rows(t, i);
                    reduced = false;
                }
            }
            for (std::size_t j = t + 1; j < cols && reduced; ++j) {
                if (a(t, j) == 0)
                    continue;
                add_col(j, t, Integer(-(a(t, j) / a(t, t))));
                if (a(t, j) != 0) {
                    swap_cols(t, j);
                    reduced = false;
                }
            }
            if (!reduced)
                continue;
            // Row and column are clear; enforce divisibility of the block.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            add_row(t, bad, Integer(1));
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            if (u)
                u->negate_row(t);
        }
    }
    return t;
}

} // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(diagonal(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
    SmithDecomposition snf{IntegerMatrix::identity(a.rows()), a, IntegerMatrix::identity(a.cols()), 0};
    snf.rank = smith_reduce(snf.diagonal, &snf.left, &snf.right);
    return snf;
}

std::vector<Integer> invariant_factors(const IntegerMatrix& a) {
    IntegerMatrix work = a;
    const std::size_t rank = smith_reduce(work, nullptr, nullptr);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(work(i, i));
    return out;
}

bool verify_smith(const IntegerMatrix& a, const SmithDecomposition& snf) {
    const IntegerMatrix& d = snf.diagonal;
    if (snf.left.rows() != a.rows() || snf.left.cols() != a.rows() ||
        snf.right.rows() != a.cols() || snf.right.cols() != a.cols() || d.rows() != a.rows() ||
        d.cols() != a.cols())
        return false;
    if (snf.left * a * snf.right != d)
        return false;
    if (abs(determinant(snf.left)) != 1 || abs(determinant(snf.right)) != 1)
        return false;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (i != j && d(i, j) != 0)
                return false;
            if (i == j && d(i, j) < 0)
                return false;
        }
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d(i, i) == 0) {
            if (d(i + 1, i + 1) != 0)
                return false;
        } else if (d(i + 1, i + 1) % d(i, i) != 0) {
            return false;
        }
    }
    return true;
}

} // namespace topo
