#pragma once

// Integer matrix normal forms with recorded unimodular transforms.
//
// Hermite form is row-style: H = U*M, pivots positive, entries above a
// pivot reduced into [0, pivot), zero rows last. Smith form is
// D = U*M*V with nonnegative diagonal and d1 | d2 | ... .

#include "mirrorcalc/linalg.hpp"
#include "mirrorcalc/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace mirrorcalc {

struct HnfResult {
    IMat h;                  // H = u * input
    IMat u;                  // unimodular
    std::vector<int> pivot_cols;
    int rank = 0;
};

inline HnfResult hermite_normal_form(const IMat& m) {
    IMat h = m;
    IMat u = IMat::identity(m.rows());
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (h(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r) { h.swap_rows(r, p); u.swap_rows(r, p); }
        // clear below the pivot with 2x2 unimodular gcd transforms
        for (int i = r + 1; i < rows; ++i) {
            if (h(i, c) == 0) continue;
            Int a = h(r, c), b = h(i, c);
            ExtGcd e = ext_gcd(a, b);
            Int a1 = a / e.g, b1 = b / e.g;
            for (int j = 0; j < cols; ++j) {
                Int hr = h(r, j), hi = h(i, j);
                h(r, j) = e.x * hr + e.y * hi;
                h(i, j) = -b1 * hr + a1 * hi;
            }
            for (int j = 0; j < rows; ++j) {
                Int ur = u(r, j), ui = u(i, j);
                u(r, j) = e.x * ur + e.y * ui;
                u(i, j) = -b1 * ur + a1 * ui;
            }
        }
        if (h(r, c) < 0) {
            for (int j = 0; j < cols; ++j) h(r, j) = -h(r, j);
            for (int j = 0; j < rows; ++j) u(r, j) = -u(r, j);
        }
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            if (q == 0) continue;
            h.add_row(i, r, -q);
            u.add_row(i, r, -q);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return {h, u, pivot_cols, r};
}

struct SnfResult {
    IMat u, d, v; // d = u * input * v
    int rank = 0;
};

inline SnfResult smith_normal_form(const IMat& m) {
    IMat d = m;
    IMat u = IMat::identity(m.rows());
    IMat v = IMat::identity(m.cols());
    const int rows = m.rows(), cols = m.cols();
    const int steps = rows < cols ? rows : cols;
    int t = 0;
    for (; t < steps; ++t) {
        // locate a nonzero entry of minimal magnitude in the trailing block
        int pi = -1, pj = -1;
        Int best(0);
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (d(i, j) == 0) continue;
                Int a = d(i, j) < 0 ? Int(-d(i, j)) : d(i, j);
                if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
            }
        if (pi < 0) break;
        if (pi != t) { d.swap_rows(t, pi); u.swap_rows(t, pi); }
        if (pj != t) { d.swap_cols(t, pj); v.swap_cols(t, pj); }
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                d.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (d(i, t) != 0) { // remainder smaller than pivot: promote it
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                d.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (d(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) {
                // enforce divisibility of the trailing block by the pivot
                for (int i = t + 1; i < rows && !dirty; ++i)
                    for (int j = t + 1; j < cols && !dirty; ++j)
                        if (d(i, j) % d(t, t) != 0) {
                            d.add_row(t, i, Int(1));
                            u.add_row(t, i, Int(1));
                            dirty = true;
                        }
            }
        }
        if (d(t, t) < 0) {
            for (int j = 0; j < cols; ++j) d(t, j) = -d(t, j);
            for (int j = 0; j < rows; ++j) u(t, j) = -u(t, j);
        }
    }
    return {u, d, v, t};
}

// Basis (rows, Hermite-reduced) of { x in Z^n : M x = 0 }. Always saturated.
inline IMat integer_kernel(const IMat& m) {
    SnfResult s = smith_normal_form(m);
    const int n = m.cols();
    IMat basis(n - s.rank, n);
    for (int k = s.rank; k < n; ++k)
        for (int i = 0; i < n; ++i) basis(k - s.rank, i) = s.v(i, k);
    return hermite_normal_form(basis).h;
}

// gcd of the entries together with Bezout coefficients: sum c_i v_i = g.
struct VecGcd {
    Int g;
    IVec coeffs;
};

inline VecGcd vector_ext_gcd(const IVec& v) {
    IVec c(v.size(), Int(0));
    Int g(0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (g == 0) {
            g = v[i] < 0 ? Int(-v[i]) : v[i];
            c[i] = v[i] < 0 ? Int(-1) : Int(1);
            continue;
        }
        ExtGcd e = ext_gcd(g, v[i]);
        for (size_t j = 0; j < i; ++j) c[j] *= e.x;
        c[i] = e.y;
        g = e.g;
    }
    return {g, c};
}

// Exact inverse of a unimodular integer matrix.
inline IMat unimodular_inverse(const IMat& m) {
    auto inv = inverse_q(to_rational(m));
    if (!inv) throw std::invalid_argument("unimodular_inverse: singular matrix");
    IMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!is_integer((*inv)(i, j)))
                throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
            r(i, j) = numer((*inv)(i, j));
        }
    return r;
}

// Extend a primitive row vector x to a unimodular matrix whose first row is x.
inline IMat complete_to_basis(const IVec& x) {
    const int n = static_cast<int>(x.size());
    IMat xt(n, 1);
    for (int i = 0; i < n; ++i) xt(i, 0) = x[i];
    HnfResult h = hermite_normal_form(xt); // U * x^T = (g,0,..,0)^T
    if (h.rank != 1 || h.h(0, 0) != 1)
        throw std::invalid_argument("complete_to_basis: vector is not primitive");
    // x * U^T = e1, so the inverse of U^T has first row x.
    return unimodular_inverse(h.u.transpose());
}

} // namespace mirrorcalc
