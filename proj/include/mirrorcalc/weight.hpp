#pragma once

// Monodromy weight filtration of a nilpotent operator, centered at a chosen
// weight: the unique increasing filtration W with N W_k inside W_{k-2} such
// that N^k identifies the graded pieces at center+k and center-k.

#include "mirrorcalc/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace mirrorcalc::avhs {

struct WeightFiltration {
    int center = 0;
    int lo = 0; // lowest stored level; W_k = 0 below it
    int hi = 0; // highest stored level; W_k is everything above it
    std::vector<QMat> levels; // levels[k - lo] = reduced row basis of W_k

    const QMat& level(int k) const {
        if (k < lo) return levels.front();
        if (k > hi) return levels.back();
        return levels[static_cast<std::size_t>(k - lo)];
    }

    int dim(int k) const { return level(k).rows(); }
};

namespace detail {

inline QMat row_basis(const QMat& m) {
    Rref rr = rref(m);
    QMat out(rr.rank, m.cols());
    for (int i = 0; i < rr.rank; ++i) out.set_row(i, rr.m.row(i));
    return out;
}

inline QMat column_span(const QMat& m) { return row_basis(m.transpose()); }

} // namespace detail

// W_k = sum over j of  im(N^j) meet ker(N^{(k-center)+j+1})
inline WeightFiltration weight_filtration(const QMat& n, int center) {
    if (n.rows() != n.cols())
        throw std::invalid_argument("weight filtration: matrix must be square");
    const int d = n.rows();
    std::vector<QMat> pw{QMat::identity(d)};
    while (!pw.back().is_zero() && static_cast<int>(pw.size()) <= d)
        pw.push_back(pw.back() * n);
    if (!pw.back().is_zero())
        throw std::invalid_argument("weight filtration: matrix is not nilpotent");
    int m = 0;
    while (!pw[m].is_zero()) ++m; // N^m = 0
    if (m == 0) m = 1;            // zero operator (or zero-dimensional space)

    WeightFiltration w;
    w.center = center;
    w.lo = center - m;
    w.hi = center + m - 1;
    std::vector<QMat> kernels(m + 1, QMat(0, d));
    for (int e = 1; e < m; ++e) kernels[e] = kernel_q(pw[e]);
    for (int k = w.lo; k <= w.hi; ++k) {
        QMat acc(0, d);
        for (int j = 0; j < m; ++j) {
            int e = (k - center) + j + 1;
            if (e <= 0) continue;
            QMat image = detail::column_span(pw[j]);
            QMat term = e >= m ? image : intersect_row_spaces(image, kernels[e]);
            acc = sum_row_spaces(acc, term);
        }
        w.levels.push_back(detail::row_basis(acc));
    }
    return w;
}

} // namespace mirrorcalc::avhs
