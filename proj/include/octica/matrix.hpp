#pragma once

#include "octica/scalars.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace octica {

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0L)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols)
    {
        if (cols.empty()) return Matrix();
        Matrix m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> col(std::size_t j) const
    {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void set_col(std::size_t j, const std::vector<T>& v)
    {
        if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    void set_row(std::size_t i, const std::vector<T>& v)
    {
        if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))>
    {
        Matrix<decltype(f(std::declval<T>()))> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0L)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
    {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<T> r(a.rows_, T(0L));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) r[i] += a(i, k) * v[k];
        return r;
    }

    friend Matrix operator*(const T& s, Matrix m)
    {
        for (auto& x : m.data_) x = s * x;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!(x == T(0L))) return false;
        return true;
    }

    std::string str() const
    {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    void check_same(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntVec = std::vector<Int>;
using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;
using GVec = std::vector<GaussInt>;
using GMat = Matrix<GaussInt>;
using GRatMat = Matrix<GaussRat>;
using ExtMat = Matrix<ExtScalar>;

template <class T>
std::vector<T> operator+(std::vector<T> a, const std::vector<T>& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

template <class T>
std::vector<T> operator-(std::vector<T> a, const std::vector<T>& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

template <class T>
std::vector<T> scale(const T& s, std::vector<T> v)
{
    for (auto& x : v) x = s * x;
    return v;
}

template <class T>
bool is_zero_vec(const std::vector<T>& v)
{
    for (const auto& x : v)
        if (!(x == T(0L))) return false;
    return true;
}

template <class T>
std::string vec_str(const std::vector<T>& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
    os << ")";
    return os.str();
}

GMat conj(const GMat& m);
GMat adjoint(const GMat& m);  // conjugate transpose
GVec conj(const GVec& v);
GRatMat to_gauss_rat(const GMat& m);
ExtMat to_ext(const GMat& m);

// Determinant over Z[i] by fraction-free elimination.
GaussInt det(const GMat& m);
Int det(const IntMat& m);

// Exact inverse of a square Gaussian matrix whose inverse is integral; throws otherwise.
GMat inverse_integral(const GMat& m);

// Reduced row echelon data for a matrix over a field F.
// Solves A X = B; the left transform tracks which row combinations were used,
// so an inconsistent system comes with a certificate y with y A = 0 and y B != 0.
template <class F>
struct LinearSolution {
    bool consistent = false;
    Matrix<F> particular;                // cols(A) x cols(B)
    std::vector<std::vector<F>> kernel;  // basis of {x : A x = 0}
    std::vector<F> certificate;          // left vector, present iff inconsistent
    std::size_t rank = 0;
};

template <class F>
LinearSolution<F> solve_linear(const Matrix<F>& A, const Matrix<F>& B)
{
    if (A.rows() != B.rows()) throw std::invalid_argument("solve_linear: row count mismatch");
    const std::size_t m = A.rows(), n = A.cols(), k = B.cols();
    Matrix<F> R = A, S = B, E = Matrix<F>::identity(m);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && R(p, c) == F(0L)) ++p;
        if (p == m) continue;
        if (p != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(R(p, j), R(r, j));
            for (std::size_t j = 0; j < k; ++j) std::swap(S(p, j), S(r, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(E(p, j), E(r, j));
        }
        F inv = F(1L) / R(r, c);
        for (std::size_t j = 0; j < n; ++j) R(r, j) *= inv;
        for (std::size_t j = 0; j < k; ++j) S(r, j) *= inv;
        for (std::size_t j = 0; j < m; ++j) E(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || R(i, c) == F(0L)) continue;
            F f = R(i, c);
            for (std::size_t j = 0; j < n; ++j) R(i, j) -= f * R(r, j);
            for (std::size_t j = 0; j < k; ++j) S(i, j) -= f * S(r, j);
            for (std::size_t j = 0; j < m; ++j) E(i, j) -= f * E(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    LinearSolution<F> sol;
    sol.rank = r;
    for (std::size_t i = r; i < m; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < k; ++j)
            if (!(S(i, j) == F(0L))) zero = false;
        if (!zero) {
            sol.consistent = false;
            sol.certificate = E.row(i);
            return sol;
        }
    }
    sol.consistent = true;
    sol.particular = Matrix<F>(n, k);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) sol.particular(pivots[i], j) = S(i, j);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(n, F(0L));
        v[f] = F(1L);
        for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = -R(i, f);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

template <class F>
std::size_t rank_of(const Matrix<F>& A)
{
    return solve_linear(A, Matrix<F>(A.rows(), 0)).rank;
}

}  // namespace octica
