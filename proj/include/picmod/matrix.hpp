#pragma once

// Dense exact matrices over any exact ring (Rational, Cyclotomic, Frac64,
// Int, polynomials).  Immutable-by-convention value semantics: arithmetic
// returns fresh matrices.  Elimination-based routines (rref, solve, inverse,
// det) require a field; det_cofactor works over any commutative ring.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <vector>

namespace picmod {

namespace detail {
template <class T>
std::string entry_to_string(const T& x) {
    if constexpr (requires { x.str(); })
        return x.str();
    else if constexpr (requires { x.get_str(); })
        return x.get_str();
    else {
        using std::to_string;
        return to_string(x);
    }
}
}  // namespace detail

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: entry count mismatch");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (auto& x : r) e_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return e_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix r(a.rows_, b.cols_, zero_entry(a, b));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.e_) x = s * x;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    // column action y = A x
    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Matrix: apply shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    // row action y = x A
    std::vector<T> apply_row(const std::vector<T>& x) const {
        if (x.size() != rows_) throw std::invalid_argument("Matrix: apply_row shape mismatch");
        std::vector<T> y(cols_, T(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (x[i] == T(0)) continue;
            for (std::size_t j = 0; j < cols_; ++j) y[j] += x[i] * (*this)(i, j);
        }
        return y;
    }

    // Reduced row echelon form over a field; returns rank.
    std::size_t rref_in_place() {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t piv = rank;
            while (piv < rows_ && (*this)(piv, col) == T(0)) ++piv;
            if (piv == rows_) continue;
            swap_rows(piv, rank);
            T inv = T(1) / (*this)(rank, col);
            for (std::size_t j = col; j < cols_; ++j) (*this)(rank, j) = inv * (*this)(rank, j);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == rank) continue;
                T f = (*this)(i, col);
                if (f == T(0)) continue;
                for (std::size_t j = col; j < cols_; ++j)
                    (*this)(i, j) -= f * (*this)(rank, j);
            }
            ++rank;
        }
        return rank;
    }

    Matrix rref() const {
        Matrix r = *this;
        r.rref_in_place();
        return r;
    }

    std::size_t rank() const {
        Matrix r = *this;
        return r.rref_in_place();
    }

    // Solve A X = B exactly over a field; throws on singular A.
    friend Matrix solve(const Matrix& a, const Matrix& b) {
        if (!a.is_square() || a.rows_ != b.rows_)
            throw std::invalid_argument("solve: shape mismatch");
        std::size_t n = a.rows_, m = b.cols_;
        Matrix aug(n, n + m);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
            for (std::size_t j = 0; j < m; ++j) aug(i, n + j) = b(i, j);
        }
        aug.rref_in_place();
        // singular exactly when the leading block fails to reduce to identity
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(aug(i, j) == (i == j ? T(1) : T(0))))
                    throw std::domain_error("solve: singular matrix");
        Matrix x(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) x(i, j) = aug(i, n + j);
        return x;
    }

    Matrix inverse() const {
        if (!is_square()) throw std::invalid_argument("inverse: not square");
        return solve(*this, identity(rows_));
    }

    // Determinant by fraction-producing Gaussian elimination (field only).
    T det() const {
        if (!is_square()) throw std::invalid_argument("det: not square");
        Matrix m = *this;
        T d(1);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && m(piv, col) == T(0)) ++piv;
            if (piv == rows_) return T(0);
            if (piv != col) {
                m.swap_rows(piv, col);
                d = -d;
            }
            d = d * m(col, col);
            T inv = T(1) / m(col, col);
            for (std::size_t i = col + 1; i < rows_; ++i) {
                T f = inv * m(i, col);
                if (f == T(0)) continue;
                for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return d;
    }

    // Determinant by memoized cofactor expansion; any commutative ring (no
    // constructible-from-int requirement).  memo[mask] is the minor over the
    // bottom popcount(mask) rows and the column set mask; masks are filled in
    // increasing numeric order so every submask is ready when needed.
    T det_cofactor() const {
        if (!is_square()) throw std::invalid_argument("det: not square");
        std::size_t n = rows_;
        if (n == 0) throw std::invalid_argument("det: empty matrix");
        T zero = zero_entry(*this, *this);
        std::vector<T> memo(std::size_t(1) << n, zero);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::size_t k = (std::size_t)__builtin_popcount(mask);
            std::size_t r = n - k;
            T acc = zero;
            int sign = 1;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(mask & (1u << j))) continue;
                const T& a = (*this)(r, j);
                if (k == 1) {
                    acc += a;
                } else {
                    T p = a * memo[mask & ~(1u << j)];
                    if (sign > 0)
                        acc += p;
                    else
                        acc -= p;
                }
                sign = -sign;
            }
            memo[mask] = acc;
        }
        return memo[(std::size_t(1) << n) - 1];
    }

    // Right kernel basis over a field: columns v with A v = 0.
    std::vector<std::vector<T>> kernel_basis() const {
        Matrix r = *this;
        std::size_t rank = r.rref_in_place();
        std::vector<long> pivot_of_col(cols_, -1);
        for (std::size_t i = 0, col = 0; i < rank; ++i) {
            while (col < cols_ && r(i, col) == T(0)) ++col;
            if (col < cols_) pivot_of_col[col] = (long)i;
        }
        std::vector<std::vector<T>> basis;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (pivot_of_col[j] >= 0) continue;
            std::vector<T> v(cols_, T(0));
            v[j] = T(1);
            for (std::size_t c = 0; c < cols_; ++c)
                if (pivot_of_col[c] >= 0) v[c] = -r((std::size_t)pivot_of_col[c], j);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Characteristic polynomial coefficients c_0..c_n of det(xI - A),
    // c_n = 1, by the Faddeev-LeVerrier recursion.
    std::vector<T> charpoly() const {
        if (!is_square()) throw std::invalid_argument("charpoly: not square");
        std::size_t n = rows_;
        std::vector<T> c(n + 1, T(0));
        c[n] = T(1);
        Matrix m(n, n);  // M_0 = 0
        for (std::size_t k = 1; k <= n; ++k) {
            // M_k = A * M_{k-1} + c_{n-k+1} I
            m = (*this) * m;
            for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
            T tr(0);
            Matrix am = (*this) * m;
            for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
            c[n - k] = -(tr / T((long)k));
        }
        return c;
    }

    template <class U, class F>
    Matrix<U> map(F f) const {
        std::vector<U> out;
        out.reserve(e_.size());
        for (const auto& x : e_) out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    std::uint64_t hash() const {
        std::uint64_t h = 0x243F6A8885A308D3ull ^ (rows_ * 1315423911u + cols_);
        for (const auto& x : e_) h = (h ^ std::hash<T>{}(x)) * 0x100000001B3ull;
        return h;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                s += detail::entry_to_string((*this)(i, j));
                if (j + 1 < cols_) s += ", ";
            }
            s += "]\n";
        }
        return s;
    }

private:
    static T zero_entry(const Matrix& a, const Matrix& b) {
        if constexpr (std::is_constructible_v<T, int>) {
            return T(0);
        } else {
            const T& s = a.e_.empty() ? b.e_.at(0) : a.e_.at(0);
            return s - s;
        }
    }

    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }
    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

    std::size_t rows_, cols_;
    std::vector<T> e_;
};

}  // namespace picmod

template <class T>
struct std::hash<picmod::Matrix<T>> {
    std::size_t operator()(const picmod::Matrix<T>& m) const { return m.hash(); }
};
