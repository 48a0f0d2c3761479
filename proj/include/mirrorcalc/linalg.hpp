#pragma once

// Small dense matrices over exact scalar types, plus the rational
// elimination routines (RREF, solve, kernel, inverse, intersection)
// that the lattice and Hodge-theory layers are built on.

#include "mirrorcalc/numeric.hpp"

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mirrorcalc {

template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, T fill = T(0))
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
    }
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        a_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw std::invalid_argument("Mat: ragged initializer");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: product shape mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: sum shape mismatch");
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: diff shape mismatch");
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> row(int i) const {
        std::vector<T> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    std::vector<T> col(int j) const {
        std::vector<T> r(rows_);
        for (int i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
        return r;
    }
    void set_row(int i, const std::vector<T>& v) {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Mat: row length mismatch");
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    void swap_rows(int i, int k) {
        for (int j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(int j, int k) {
        for (int i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }
    // row i += c * row k
    void add_row(int i, int k, const T& c) {
        for (int j = 0; j < cols_; ++j) (*this)(i, j) += c * (*this)(k, j);
    }
    void add_col(int j, int k, const T& c) {
        for (int i = 0; i < rows_; ++i) (*this)(i, j) += c * (*this)(i, k);
    }
    void scale_row(int i, const T& c) {
        for (int j = 0; j < cols_; ++j) (*this)(i, j) *= c;
    }

    bool is_zero() const {
        for (const auto& x : a_) if (x != T(0)) return false;
        return true;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

template <typename T>
std::vector<T> mat_vec(const Mat<T>& m, const std::vector<T>& v) {
    if (m.cols() != static_cast<int>(v.size())) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<T> r(m.rows(), T(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != T(0)) r[i] += m(i, j) * v[j];
    return r;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    T s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <typename T>
bool is_zero_vec(const std::vector<T>& v) {
    for (const auto& x : v) if (x != T(0)) return false;
    return true;
}

inline QMat to_rational(const IMat& m) {
    QMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

inline QVec to_rational(const IVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

// Exact determinant of an integer matrix (Bareiss fraction-free elimination).
inline Int det_int(IMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_int: not square");
    const int n = m.rows();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { p = i; break; }
            if (p < 0) return Int(0);
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

struct Rref {
    QMat m;                  // reduced row echelon form, zero rows dropped
    std::vector<int> pivots; // pivot column per retained row
    int rank = 0;
};

// Deterministic RREF: columns scanned left to right, rows in input order.
inline Rref rref(QMat a) {
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r) a.swap_rows(p, r);
        Rat inv = Rat(1) / a(r, c);
        a.scale_row(r, inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            a.add_row(i, r, -a(i, c));
        }
        pivots.push_back(c);
        ++r;
    }
    QMat kept(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) kept(i, j) = a(i, j);
    return {kept, pivots, r};
}

inline int rank_q(const QMat& a) { return rref(a).rank; }

// Membership of v in the row space carried by an Rref.
inline bool in_row_space(const Rref& rr, const QVec& v) {
    QVec w = v;
    for (int i = 0; i < rr.rank; ++i) {
        const Rat c = w[rr.pivots[i]]; // copy: the loop below overwrites the pivot slot
        if (c == 0) continue;
        for (int j = 0; j < rr.m.cols(); ++j) w[j] -= c * rr.m(i, j);
    }
    return is_zero_vec(w);
}

// Solve A x = b exactly; nullopt when inconsistent. Free variables are set to 0.
inline std::optional<QVec> solve_q(const QMat& a, const QVec& b) {
    if (a.rows() != static_cast<int>(b.size())) throw std::invalid_argument("solve_q: shape mismatch");
    QMat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Rref rr = rref(aug);
    QVec x(a.cols(), Rat(0));
    for (int i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] == a.cols()) return std::nullopt; // pivot in the RHS column
        x[rr.pivots[i]] = rr.m(i, a.cols());
    }
    return x;
}

// Basis (rows) of { x : A x = 0 }, canonical free-variable construction.
inline QMat kernel_q(const QMat& a) {
    Rref rr = rref(a);
    const int cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    QMat k(static_cast<int>(free_cols.size()), cols);
    for (size_t f = 0; f < free_cols.size(); ++f) {
        int fc = free_cols[f];
        k(static_cast<int>(f), fc) = Rat(1);
        for (int i = 0; i < rr.rank; ++i) k(static_cast<int>(f), rr.pivots[i]) = -rr.m(i, fc);
    }
    return k;
}

inline std::optional<QMat> inverse_q(const QMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse_q: not square");
    const int n = a.rows();
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Rat(1);
    }
    Rref rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
    QMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = rr.m(i, n + j);
    return inv;
}

// Intersection of two row spaces (Zassenhaus): rows spanning span(A) ∩ span(B).
inline QMat intersect_row_spaces(const QMat& a, const QMat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("intersect: ambient mismatch");
    const int n = a.cols();
    QMat z(a.rows() + b.rows(), 2 * n);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < n; ++j) {
            z(i, j) = a(i, j);
            z(i, n + j) = a(i, j);
        }
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < n; ++j) z(a.rows() + i, j) = b(i, j);
    Rref rr = rref(z);
    std::vector<int> keep;
    for (int i = 0; i < rr.rank; ++i)
        if (rr.pivots[i] >= n) keep.push_back(i);
    QMat out(static_cast<int>(keep.size()), n);
    for (size_t i = 0; i < keep.size(); ++i)
        for (int j = 0; j < n; ++j) out(static_cast<int>(i), j) = rr.m(keep[i], n + j);
    return out;
}

// Row-space sum, returned as canonical RREF rows.
inline QMat sum_row_spaces(const QMat& a, const QMat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("sum: ambient mismatch");
    QMat s(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s(a.rows() + i, j) = b(i, j);
    return rref(s).m;
}

// span(A) ⊆ span(B)?
inline bool row_space_contained(const QMat& a, const QMat& b) {
    Rref rb = rref(b);
    for (int i = 0; i < a.rows(); ++i)
        if (!in_row_space(rb, a.row(i))) return false;
    return true;
}

} // namespace mirrorcalc
