#include "qbw/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qbw {

namespace {

std::size_t weight_of(const RationalFunction& x) {
    return x.num().size() + (x.is_laurent() ? 0 : x.den().size() + 1);
}

// row_a -= c * row_b over columns [from, n)
void axpy_row(RationalFunction* a, const RationalFunction* b, const RationalFunction& c, std::size_t from,
              std::size_t n) {
    for (std::size_t j = from; j < n; ++j)
        if (!b[j].is_zero()) a[j] -= c * b[j];
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vec& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_column(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_column: size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const RationalFunction& c) {
    if (c.is_one()) return *this;
    for (auto& x : data_)
        if (!x.is_zero()) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch in *");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero()) continue;
            bool unit = x.is_one();
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& y = b(k, j);
                if (y.is_zero()) continue;
                if (unit)
                    c(i, j) += y;
                else
                    c(i, j) += x * y;
            }
        }
    return c;
}

Vec operator*(const Matrix& a, const Vec& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector size mismatch");
    Vec y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !x[k].is_zero()) y[i] += a(i, k) * x[k];
    return y;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            const auto& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l)
                    if (!b(k, l).is_zero()) m(i * b.rows_ + k, j * b.cols_ + l) = x * b(k, l);
        }
    return m;
}

Matrix Matrix::direct_sum(const std::vector<const Matrix*>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto* b : blocks) {
        r += b->rows_;
        c += b->cols_;
    }
    Matrix m(r, c);
    r = c = 0;
    for (const auto* b : blocks) {
        for (std::size_t i = 0; i < b->rows_; ++i)
            for (std::size_t j = 0; j < b->cols_; ++j) m(r + i, c + j) = (*b)(i, j);
        r += b->rows_;
        c += b->cols_;
    }
    return m;
}

std::string Matrix::debug_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).pretty();
        os << "]\n";
    }
    return os.str();
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Rref rref(Matrix m) {
    Rref out;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        // cheapest nonzero pivot keeps intermediate expressions small
        std::size_t best = nr;
        std::size_t best_w = 0;
        for (std::size_t i = row; i < nr; ++i) {
            const auto& x = m(i, col);
            if (x.is_zero()) continue;
            std::size_t w = weight_of(x);
            if (best == nr || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == nr) continue;
        if (best != row)
            for (std::size_t j = 0; j < nc; ++j) std::swap(m(best, j), m(row, j));
        RationalFunction inv = m(row, col).inverse();
        for (std::size_t j = col; j < nc; ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            RationalFunction c = m(i, col);
            axpy_row(&m(i, 0), &m(row, 0), c, col, nc);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) {
    return rref(m).pivots.size();
}

Matrix nullspace(const Matrix& m) {
    Rref r = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        Vec v(nc);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            if (!r.reduced(i, f).is_zero()) v[r.pivots[i]] = -r.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(basis, nc);
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Rref r = rref(std::move(aug));
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    return r.reduced.block(0, n, n, n);
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: size mismatch");
    const std::size_t n = a.cols(), k = b.cols();
    Matrix aug(a.rows(), n + k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
    }
    Rref r = rref(std::move(aug));
    Matrix x(n, k);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] >= n) throw std::domain_error("solve: inconsistent system");
        for (std::size_t j = 0; j < k; ++j) x(r.pivots[i], j) = r.reduced(i, n + j);
    }
    return x;
}

// ------------------------------------------------------------ EchelonSystem

bool EchelonSystem::add(Vec row) {
    if (row.size() != n_) throw std::invalid_argument("EchelonSystem::add: size mismatch");
    if (full()) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t p = pivots_[r];
        if (row[p].is_zero()) continue;
        RationalFunction c = row[p];
        axpy_row(row.data(), rows_[r].data(), c, p, n_);
    }
    std::size_t p = 0;
    while (p < n_ && row[p].is_zero()) ++p;
    if (p == n_) return false;
    RationalFunction inv = row[p].inverse();
    for (std::size_t j = p; j < n_; ++j)
        if (!row[j].is_zero()) row[j] *= inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

Matrix EchelonSystem::kernel() const {
    std::vector<Vec> rows = rows_;
    for (std::size_t j = rows.size(); j-- > 0;) {
        std::size_t p = pivots_[j];
        for (std::size_t i = 0; i < j; ++i) {
            if (rows[i][p].is_zero()) continue;
            RationalFunction c = rows[i][p];
            axpy_row(rows[i].data(), rows[j].data(), c, p, n_);
        }
    }
    std::vector<long> owner(n_, -1);
    for (std::size_t i = 0; i < pivots_.size(); ++i) owner[pivots_[i]] = static_cast<long>(i);
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < n_; ++f) {
        if (owner[f] >= 0) continue;
        Vec v(n_);
        v[f] = 1;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i][f].is_zero()) v[pivots_[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(basis, n_);
}

}  // namespace qbw
