#pragma once

// Dense matrices over Q(v) and the handful of elimination routines the
// representation code needs. Sizes stay below a few hundred, so dense storage
// with zero-skipping loops is adequate.

#include <cstddef>
#include <string>
#include <vector>

#include "qbw/scalar.hpp"

namespace qbw {

using Vec = std::vector<RationalFunction>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vec& d);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    RationalFunction& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RationalFunction& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    void set_column(std::size_t j, const Vec& v);

    bool is_zero() const;
    bool is_identity() const;
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    /// Applies f entrywise.
    template <class F>
    Matrix map(F&& f) const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!data_[k].is_zero()) m.data_[k] = f(data_[k]);
        return m;
    }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const RationalFunction& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const RationalFunction& c) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& x);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Kronecker product; index (i,k) of a (x) b maps to i * b.rows() + k.
    static Matrix kron(const Matrix& a, const Matrix& b);
    /// Block diagonal with the given blocks in order.
    static Matrix direct_sum(const std::vector<const Matrix*>& blocks);

    std::string debug_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RationalFunction> data_;
};

bool is_zero(const Vec& v);

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form (unique, independent of pivoting order).
Rref rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of the right kernel as columns, one per free column in increasing order;
/// the basis vector for free column f has a 1 in position f.
Matrix nullspace(const Matrix& m);
/// Throws std::domain_error when m is singular.
Matrix inverse(const Matrix& m);
/// Solves a * x = b for every column of b; throws std::domain_error if inconsistent.
/// When a has a kernel, the particular solution with zero free variables is returned.
Matrix solve(const Matrix& a, const Matrix& b);

/// Row echelon accumulator for large, sparse equation systems: rows are added
/// one at a time and reduced on the fly against earlier pivots.
class EchelonSystem {
public:
    explicit EchelonSystem(std::size_t unknowns) : n_(unknowns) {}

    /// Returns true when the row was independent of the rows seen so far.
    bool add(Vec row);
    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t unknowns() const noexcept { return n_; }
    bool full() const noexcept { return rows_.size() == n_; }
    /// Kernel of all rows added so far, same conventions as nullspace().
    Matrix kernel() const;

private:
    std::size_t n_;
    std::vector<Vec> rows_;             // pivot entry normalised to 1
    std::vector<std::size_t> pivots_;  // pivot column per row
};

}  // namespace qbw
