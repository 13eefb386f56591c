#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tatesyz/field.hpp"

namespace tatesyz {

/// Dense matrix over an exact field F. Deterministic pivoting throughout:
/// elimination always picks the first nonzero entry in column order, so
/// echelon forms, kernel bases and column selections are reproducible.
template <class F>
class Matrix {
public:
    using Elt = typename F::Elt;

    Matrix() : field_(), rows_(0), cols_(0) {}
    Matrix(const F& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

    static Matrix identity(const F& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elt& at(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return a_[r * cols_ + c];
    }
    const Elt& at(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return a_[r * cols_ + c];
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!field_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elt& aik = at(i, k);
                if (field_.is_zero(aik)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Elt& bkj = o.at(k, j);
                    if (field_.is_zero(bkj)) continue;
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, bkj));
                }
            }
        return r;
    }

    Matrix add(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
        return r;
    }

    Matrix sub(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
        return r;
    }

    Matrix scale(const Elt& c) const {
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.mul(a_[i], c);
        return r;
    }

    Matrix neg() const {
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.neg(a_[i]);
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<Elt> apply(const std::vector<Elt>& v) const {
        assert(v.size() == cols_);
        std::vector<Elt> r(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_.is_zero(at(i, j)) && !field_.is_zero(v[j]))
                    r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
        return r;
    }

    std::vector<Elt> column(std::size_t j) const {
        std::vector<Elt> r(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
        return r;
    }

    void set_column(std::size_t j, const std::vector<Elt>& v) {
        assert(v.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix r(field_, rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
        return r;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_);
        Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.cols_);
        Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
        return r;
    }

    /// Kronecker product; blocks follow row-major (this ⊗ other) indexing.
    Matrix kron(const Matrix& o) const {
        Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Elt& aij = at(i, j);
                if (field_.is_zero(aij)) continue;
                for (std::size_t k = 0; k < o.rows_; ++k)
                    for (std::size_t l = 0; l < o.cols_; ++l)
                        r.at(i * o.rows_ + k, j * o.cols_ + l) = field_.mul(aij, o.at(k, l));
            }
        return r;
    }

    struct Rref {
        Matrix m;
        std::vector<std::size_t> pivots;  // strictly increasing pivot columns
    };

    /// Reduced row-echelon form; row space preserved.
    Rref rref() const {
        Matrix m = *this;
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pr = rows_;
            for (std::size_t i = row; i < rows_; ++i)
                if (!field_.is_zero(m.at(i, col))) {
                    pr = i;
                    break;
                }
            if (pr == rows_) continue;
            if (pr != row)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(row, j));
            Elt pinv = field_.inv(m.at(row, col));
            for (std::size_t j = col; j < cols_; ++j) m.at(row, j) = field_.mul(m.at(row, j), pinv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row) continue;
                const Elt f = m.at(i, col);
                if (field_.is_zero(f)) continue;
                for (std::size_t j = col; j < cols_; ++j)
                    m.at(i, j) = field_.sub(m.at(i, j), field_.mul(f, m.at(row, j)));
            }
            pivots.push_back(col);
            ++row;
        }
        return Rref{std::move(m), std::move(pivots)};
    }

    std::size_t rank() const { return rref().pivots.size(); }

    /// Columns form a basis of the null space; count = cols - rank.
    Matrix kernel_basis() const {
        auto r = rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : r.pivots) is_pivot[p] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
        Matrix k(field_, cols_, free_cols.size());
        for (std::size_t t = 0; t < free_cols.size(); ++t) {
            std::size_t fc = free_cols[t];
            k.at(fc, t) = field_.one();
            for (std::size_t i = 0; i < r.pivots.size(); ++i)
                k.at(r.pivots[i], t) = field_.neg(r.m.at(i, fc));
        }
        return k;
    }

    /// One solution of this*x = b, if any.
    std::optional<std::vector<Elt>> solve(const std::vector<Elt>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("solve: dimension mismatch");
        Matrix aug(field_, rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        auto r = aug.rref();
        if (!r.pivots.empty() && r.pivots.back() == cols_) return std::nullopt;
        std::vector<Elt> x(cols_, field_.zero());
        for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.m.at(i, cols_);
        return x;
    }

    /// Deterministic choice of column indices spanning the column space.
    std::vector<std::size_t> independent_columns() const { return rref().pivots; }

    Matrix column_space_basis() const { return select_columns(independent_columns()); }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        auto r = hstack(*this, identity(field_, rows_)).rref();
        if (r.pivots.size() != rows_ || (rows_ > 0 && r.pivots.back() != rows_ - 1))
            return std::nullopt;
        Matrix inv(field_, rows_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = r.m.at(i, cols_ + j);
        return inv;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elt> a_;
};

/// Repeated solving of K*y = v for a fixed K with linearly independent
/// columns; precomputes a row reduction of [K | I].
template <class F>
class ColumnSolver {
public:
    using Elt = typename F::Elt;

    explicit ColumnSolver(const Matrix<F>& k) : k_cols_(k.cols()), rows_(k.rows()) {
        auto aug = Matrix<F>::hstack(k, Matrix<F>::identity(k.field(), k.rows()));
        red_ = aug.rref().m;
        // columns of K independent => first k_cols_ pivot rows are 0..k_cols_-1
    }

    /// Coordinates y with K*y = v, or nullopt if v is outside the column space.
    std::optional<std::vector<Elt>> solve(const std::vector<Elt>& v) const {
        const F& f = red_.field();
        assert(v.size() == rows_);
        std::vector<Elt> ev(rows_, f.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j)
                if (!f.is_zero(red_.at(i, k_cols_ + j)) && !f.is_zero(v[j]))
                    ev[i] = f.add(ev[i], f.mul(red_.at(i, k_cols_ + j), v[j]));
        for (std::size_t i = k_cols_; i < rows_; ++i)
            if (!f.is_zero(ev[i])) return std::nullopt;
        ev.resize(k_cols_);
        return ev;
    }

    /// Solves columnwise: Y with K*Y = M.
    std::optional<Matrix<F>> solve_matrix(const Matrix<F>& m) const {
        Matrix<F> y(m.field(), k_cols_, m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto s = solve(m.column(j));
            if (!s) return std::nullopt;
            y.set_column(j, *s);
        }
        return y;
    }

private:
    std::size_t k_cols_, rows_;
    Matrix<F> red_;
};

}  // namespace tatesyz
